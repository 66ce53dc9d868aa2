#ifndef GEVLAB_GEVREY_HPP
#define GEVLAB_GEVREY_HPP

#include <vector>

#include "gevlab/norms.hpp"
#include "gevlab/spectrum.hpp"

namespace gevlab {

struct CurveSample {
  double k = 0.0;     // operator power (integer grid in the standard runs)
  double logM = 0.0;  // log |A^k u(t)|
};

// Sampled k -> log|A^k u(t)| curve at a fixed time.
struct PowerNormCurve {
  double t = 0.0;
  std::vector<CurveSample> entries;
};

struct GevreyFit {
  double sigmaHat = 0.0;
  double logRHat = 0.0;
  double residual = 0.0;  // max |y - fit| over the declared window
  double kMin = 0.0;
  double kMax = 0.0;
};

struct MembershipResult {
  bool isConsistent = false;
  double logRRequired = 0.0;
  double trendSlope = 0.0;  // least-squares slope of (logM - sigma k log k)/k over the final third
};

// Slope threshold (per unit k) above which the required-radius sequence is
// treated as drifting upward. Empirical tunable.
inline constexpr double kMembershipTrendTolerance = 1e-3;

// Builds the curve by evaluating powerNorm at each k (optionally of a
// rescaled operator A^powerScale: logM_j = log|A^{j*powerScale} u|).
PowerNormCurve powerNormCurve(const DiagonalVector& u, std::span<const double> ks, double t,
                              double powerScale = 1.0, int threads = 1);

// y_k = logM/k regressed on x_k = log k: slope is the Gevrey order, intercept
// the log-radius. Requires >= 5 samples with k >= 2 inside the window.
GevreyFit fitGevreyOrder(const PowerNormCurve& curve, double kMin, double kMax);

// Is the curve numerically compatible with |A^k u| <= R^k k^{sigma k}?
MembershipResult checkMembership(const PowerNormCurve& curve, double sigma);

// G(A, s) = G(A^alpha, alpha s): the order rescales by alpha. The radius is
// reported unchanged; radius transformations are only trusted via refits.
GevreyFit rescaleOrderUnderPower(const GevreyFit& fit, double alpha);

// |A^theta v| <= |Av|^theta |v|^{1-theta}, checked in log domain.
bool interpolationInequalityCheck(const DiagonalVector& v, double theta);

// Operator Gevrey order -> spatial Gevrey exponent for an elliptic operator
// of order 2m: s = sigma / (2m).
double ellipticOrderMap(double sigma, int operatorOrder);

// The summand lambda^k e^{-lambda^{1-alpha} t} peaks at lambda*(k, t); mode
// truncation must reach 4x beyond the peak before a fit at power k is trusted.
double peakLambda(double alpha, double t, double k);
void requireTailAdequate(const Spectrum& spectrum, double alpha, double t, double k);

// Smallest PowerLaw(delta, eps) mode count satisfying the tail rule at power k.
std::size_t adequateModeCount(double delta, double eps, double alpha, double t, double k);

// Peak of lambda^k e^{-c lambda^alpha t / 2} for underdamped-dominated data,
// where the modal decay rate is b/2 = c lambda^alpha / 2 rather than mu-.
double peakLambdaOscillatory(double alpha, double c, double t, double k);

// Smoothing order of the damped evolution: 1/alpha for alpha <= 1/2 and
// 1/(1-alpha) for alpha >= 1/2, i.e. max{1/alpha, 1/(1-alpha)}. Smallest
// (best) at the structural-damping point alpha = 1/2, where it equals 2.
double gevreyOrderTheory(double alpha);

}  // namespace gevlab

#endif
