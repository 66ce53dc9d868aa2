#ifndef GEVLAB_SPECTRUM_HPP
#define GEVLAB_SPECTRUM_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "gevlab/logreal.hpp"

namespace gevlab {

enum class SpectrumKind { PowerLaw, Dirichlet1D, Explicit };

// Eigenvalue sequence of the operator A (0 < lambda_1 <= lambda_2 <= ...),
// with the growth metadata used by the optimality constructions:
// lambda_n >= delta n^eps and lambda_{n+1} <= C lambda_n.
class Spectrum {
 public:
  static std::shared_ptr<const Spectrum> powerLaw(double delta, double eps, std::size_t count);
  static std::shared_ptr<const Spectrum> dirichlet1d(double length, std::size_t count);
  static std::shared_ptr<const Spectrum> fromValues(std::vector<double> values);

  SpectrumKind kind() const { return kind_; }
  std::size_t count() const { return lambdas_.size(); }
  double lambda(std::size_t n) const { return lambdas_[n - 1]; }  // 1-based
  const std::vector<double>& lambdas() const { return lambdas_; }
  double ratioBound() const { return ratio_bound_; }

  // PowerLaw / Dirichlet1D expose the lambda_n = delta n^eps parameters
  // (Dirichlet1D: delta = (pi/L)^2, eps = 2). Explicit spectra do not.
  std::optional<double> growthDelta() const { return delta_; }
  std::optional<double> growthEps() const { return eps_; }
  std::optional<double> domainLength() const { return length_; }

  // Smallest index n with lambda_n >= threshold; 0 if none materialized.
  std::size_t firstIndexAtLeast(double threshold) const;

 private:
  Spectrum(SpectrumKind kind, std::vector<double> lambdas);

  SpectrumKind kind_;
  std::vector<double> lambdas_;
  double ratio_bound_ = 1.0;
  std::optional<double> delta_;
  std::optional<double> eps_;
  std::optional<double> length_;
};

using SpectrumPtr = std::shared_ptr<const Spectrum>;

struct DampingTerm {
  double c = 1.0;
  double alpha = 0.5;
};

// Damping operator B = c A^alpha, or Sum_i c_i A^{alpha_i} when a generalized
// symbol is supplied. alpha in (0,1), all c_i > 0.
class DampingConfig {
 public:
  DampingConfig(double alpha, double c);
  explicit DampingConfig(std::vector<DampingTerm> terms);

  double alpha() const { return alpha_; }
  double c() const { return c_; }
  bool isSinglePower() const { return terms_.empty(); }
  const std::vector<DampingTerm>& terms() const { return terms_; }

  // b(lambda): the scalar damping symbol at eigenvalue lambda.
  double symbol(double lambda) const;

  // Largest fractional exponent appearing in the symbol; the smoothing order
  // of the generalized configuration is governed by this one.
  double maxAlpha() const;

 private:
  double alpha_;
  double c_;
  std::vector<DampingTerm> terms_;  // empty for the single-power case
};

struct TimeRescaling {
  DampingConfig damping;    // coefficients after u(t) = v(kt)
  double operatorScale;     // B = operatorScale * A, i.e. k^{-2}
};

// u(t) = v(kt) turns u'' + Au + cA^a u' = 0 into v'' + Bv + c k^{2a-1} B^a v' = 0
// with B = k^{-2} A.
TimeRescaling rescaleTime(const DampingConfig& damping, double k);

// The k with c k^{2a-1} = 1. Throws NormalizationError when alpha == 1/2 and
// c != 1 (structural damping: c is a genuine invariant) or for generalized symbols.
double normalizingScale(const DampingConfig& damping);

// Coefficients of a vector of H in the eigenbasis of A.
class DiagonalVector {
 public:
  DiagonalVector() = default;
  explicit DiagonalVector(SpectrumPtr spectrum);
  DiagonalVector(SpectrumPtr spectrum, std::vector<LogReal> coeffs);

  static DiagonalVector fromReals(SpectrumPtr spectrum, std::span<const double> values);
  static DiagonalVector basisVector(SpectrumPtr spectrum, std::size_t n);  // e_n, 1-based

  const SpectrumPtr& spectrum() const { return spectrum_; }
  std::size_t size() const { return coeffs_.size(); }
  const LogReal& operator[](std::size_t i) const { return coeffs_[i]; }
  LogReal& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<LogReal>& coeffs() const { return coeffs_; }

  // Componentwise multiplication by lambda_n^power (the vector A^power x).
  DiagonalVector applyPower(double power) const;

 private:
  SpectrumPtr spectrum_;
  std::vector<LogReal> coeffs_;
};

// (u, u') phase-space state sharing one spectrum.
struct State {
  DiagonalVector u;
  DiagonalVector v;
};

}  // namespace gevlab

#endif
