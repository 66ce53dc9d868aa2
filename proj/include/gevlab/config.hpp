#ifndef GEVLAB_CONFIG_HPP
#define GEVLAB_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gevlab/spectrum.hpp"
#include "gevlab/verification.hpp"

namespace gevlab {

struct SpectrumConfig {
  std::string kind;  // power_law | dirichlet_1d | explicit
  double delta = 1.0;
  double epsilon = 2.0;
  double length = 0.0;
  std::size_t count = 2048;
  std::vector<double> values;

  SpectrumPtr build() const;
};

struct InitialDataConfig {
  std::string kind;  // random_vxh | counterexample | explicit | basis
  double decayQ0 = 2.0;
  double decayQ1 = 2.0;
  std::string variant = "overdamped";  // counterexample variant
  double bigK = 1.5;
  std::size_t n0 = 0;          // 0 = minimal admissible index
  std::size_t modeStride = 1;  // keep only modes with index divisible by this
  std::vector<double> u0;
  std::vector<double> u1;
  std::size_t mode = 1;  // basis vector index
};

struct FitConfig {
  double kMin = 20.0;
  double kMax = 200.0;
  double kStep = 1.0;
  std::optional<double> sigma;  // membership order to test, when requested
  std::string curveCsv;         // fit an imported (k, logM) curve instead of simulating
};

struct WaveConfig {
  double length = 0.0;
  std::optional<double> windowA;
  std::optional<double> windowB;
  int pMin = 2;
  int pMax = 60;
  int pStep = 2;
  std::size_t xPoints = 257;
  bool embedThreeToOne = false;
};

struct AppendixConfig {
  int components = 4;
  int maxTotal = 16;
  int maxP = 500;
  std::size_t scalarBetaPoints = 101;
  std::size_t scalarHPoints = 9901;
  std::size_t diagonalTrials = 10000;
};

struct ExperimentConfig {
  std::optional<SpectrumConfig> spectrum;
  std::optional<DampingConfig> damping;
  std::optional<InitialDataConfig> initialData;
  double t = 1.0;
  std::vector<double> timeGrid;
  double energyStep = 1e-4;
  double theta = 0.0;  // oscillatory integration upper limit; 0 = t + 1
  FitConfig fit;
  std::optional<WaveConfig> wave;
  AppendixConfig appendix;

  std::string rawText;   // exact config bytes, hashed into every output
  std::string hash;

  static ExperimentConfig load(const std::string& path);
  static ExperimentConfig parse(const std::string& text);
};

// Deterministic V x H draw: coefficients xi_n n^{-q0}, zeta_n n^{-q1} with
// xi, zeta ~ U[-1, 1) from the counter RNG.
State randomVxHState(SpectrumPtr spectrum, std::uint64_t seed, double q0, double q1);

// Resolve the configured initial data against a spectrum and damping.
State buildInitialData(const InitialDataConfig& cfg, SpectrumPtr spectrum,
                       const DampingConfig& damping, std::uint64_t seed);

CounterexampleSpec counterexampleFromConfig(const InitialDataConfig& cfg, SpectrumPtr spectrum,
                                            const DampingConfig& damping);

}  // namespace gevlab

#endif
