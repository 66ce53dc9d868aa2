#ifndef GEVLAB_VERIFICATION_HPP
#define GEVLAB_VERIFICATION_HPP

#include <cstddef>
#include <vector>

#include "gevlab/modal.hpp"
#include "gevlab/norms.hpp"
#include "gevlab/spectrum.hpp"

namespace gevlab {

// Pointwise comparison of d/dt Phi against the dissipation functional, where
// Phi = |u'|^2 + |A^{1/2}u|^2 + (1/2)|Bu|^2 + (Bu, u') and the identity reads
// dPhi/dt = -(|B^{1/2}u'|^2 + (Au, Bu)).
struct EnergyReport {
  std::vector<double> tGrid;
  std::vector<double> phi;
  std::vector<double> dPhiFd;  // central differences, step h
  std::vector<double> rhs;
  double maxRelViolation = 0.0;
  bool sandwichHolds = true;   // 0 <= (1/2)|u'|^2 + |A^{1/2}u|^2 <= Phi <= (3/2)|u'|^2 + |A^{1/2}u|^2 + |Bu|^2
  double h = 0.0;
};

EnergyReport energyIdentityCheck(const State& state0, const DampingConfig& damping,
                                 std::span<const double> tGrid, double h);

struct IntegralInequalityResult {
  double lhs = 0.0;  // integral of |B^{1/2}u'|^2 + (Au, Bu) over [0, t]
  double rhs = 0.0;  // (3/2)|u'(0)|^2 + |A^{1/2}u(0)|^2 + |Bu(0)|^2
  bool holds = false;
};

IntegralInequalityResult integralInequalityCheck(const State& state0, const DampingConfig& damping,
                                                 double t);

// Smallest K' with |(A^{m alpha}u(t), A^{m alpha}u'(t))|_{VxH} <= [K' m / t]^m E0
// over the sampled iteration counts. For alpha > 1/2 the substituted variable
// v = A^{alpha - 1/2} u is used with power step 1 - alpha.
struct SmoothingFitResult {
  double kPrimeHat = 0.0;
  std::vector<std::pair<int, double>> perIteration;  // (m, K'(m))
};

SmoothingFitResult smoothingEstimateFit(const State& state0, const DampingConfig& damping,
                                        double t, std::span<const int> mValues);

// |U(t)|_E^2 <= e^t |U(0)|_E^2 on every grid point (meaningful for lambda < 1).
struct EnormGrowthResult {
  bool holds = true;
  double maxRatio = 0.0;  // max over grid of |U(t)|_E^2 / (e^t |U(0)|_E^2)
};

EnormGrowthResult enormGrowthCheck(const State& state0, const DampingConfig& damping,
                                   std::span<const double> tGrid);

// Slowly-decaying eigen-series solutions saturating the smoothing order.
struct CounterexampleSpec {
  enum class Variant { Overdamped, Oscillatory, Half };

  Variant variant = Variant::Overdamped;
  double bigK = 1.5;      // coefficient decay c_n = lambda_n^{-K}
  std::size_t n0 = 1;     // first active mode
  SpectrumPtr spectrum;
  DampingConfig damping{0.75, 1.0};

  void validate() const;          // throws SpecError on any violated condition
  std::size_t minimalStartIndex() const;
  bool overdampedRoute() const;   // Half splits on c vs 2

  // Exponent margins of the V- and H-norm series; both must be positive.
  std::pair<double, double> summabilityMargins() const;
};

// (u(0), u'(0)) = (sum c_n phi_n, -sum c_n rate_n phi_n) with modes below n0
// zeroed; rate is mu_n for the overdamped route, b(lambda_n)/2 for the
// oscillatory one.
State buildCounterexample(const CounterexampleSpec& spec);

struct LowerBoundResult {
  double fittedExponent = 0.0;
  double theoryExponent = 0.0;
  bool dominated = true;  // single-mode bound <= full norm at every sampled k
  std::vector<std::pair<double, double>> boundCurve;  // (k, log bound)
};

// Evaluates the selected-mode lower bound (direct for the overdamped route,
// time-integrated with the exact antiderivative for the oscillatory one) and
// fits the growth exponent of k. theta is the upper integration limit for the
// integrated variants and is ignored otherwise.
LowerBoundResult lowerBoundCheck(const CounterexampleSpec& spec, double t, double theta,
                                 std::span<const double> ks);

}  // namespace gevlab

#endif
