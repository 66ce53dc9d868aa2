#include "gevlab/gevrey.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gevlab/fitting.hpp"
#include "gevlab/parallel.hpp"

namespace gevlab {

PowerNormCurve powerNormCurve(const DiagonalVector& u, std::span<const double> ks, double t,
                              double powerScale, int threads) {
  PowerNormCurve curve;
  curve.t = t;
  curve.entries.resize(ks.size());
  parallelFor(ks.size(), threads, [&](std::size_t i) {
    const LogReal norm = powerNorm(u, ks[i] * powerScale);
    curve.entries[i] = CurveSample{ks[i], norm.logmag};
  });
  for (std::size_t i = 1; i < curve.entries.size(); ++i)
    if (!(curve.entries[i].k > curve.entries[i - 1].k))
      throw DomainError("powerNormCurve: k grid must be strictly increasing");
  return curve;
}

namespace {

std::vector<CurveSample> windowSamples(const PowerNormCurve& curve, double kMin, double kMax) {
  std::vector<CurveSample> out;
  for (const CurveSample& s : curve.entries)
    if (s.k >= std::max(kMin, 2.0) && s.k <= kMax && std::isfinite(s.logM)) out.push_back(s);
  return out;
}

}  // namespace

GevreyFit fitGevreyOrder(const PowerNormCurve& curve, double kMin, double kMax) {
  const auto samples = windowSamples(curve, kMin, kMax);
  if (samples.size() < 5) {
    std::ostringstream msg;
    msg << "fitGevreyOrder: window [" << kMin << ", " << kMax << "] holds "
        << samples.size() << " samples, need >= 5";
    throw InsufficientDataError(msg.str());
  }
  std::vector<double> x, y;
  x.reserve(samples.size());
  y.reserve(samples.size());
  for (const CurveSample& s : samples) {
    x.push_back(std::log(s.k));
    y.push_back(s.logM / s.k);
  }
  const LinearFit lf = linearFit(x, y);
  GevreyFit fit;
  fit.sigmaHat = lf.slope;
  fit.logRHat = lf.intercept;
  fit.kMin = kMin;
  fit.kMax = kMax;
  for (std::size_t i = 0; i < x.size(); ++i)
    fit.residual = std::max(fit.residual, std::abs(y[i] - (lf.slope * x[i] + lf.intercept)));
  return fit;
}

MembershipResult checkMembership(const PowerNormCurve& curve, double sigma) {
  if (curve.entries.empty()) throw DomainError("checkMembership: empty curve");
  MembershipResult res;
  std::vector<double> ks, zs;
  for (const CurveSample& s : curve.entries) {
    const double z = (s.logM - sigma * s.k * std::log(s.k)) / s.k;
    ks.push_back(s.k);
    zs.push_back(z);
  }
  res.logRRequired = *std::max_element(zs.begin(), zs.end());
  const std::size_t third = std::max<std::size_t>(2, zs.size() / 3);
  const std::size_t start = zs.size() - third;
  const LinearFit lf = linearFit(std::span(ks).subspan(start), std::span(zs).subspan(start));
  res.trendSlope = lf.slope;
  res.isConsistent = res.trendSlope < kMembershipTrendTolerance;
  return res;
}

GevreyFit rescaleOrderUnderPower(const GevreyFit& fit, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("rescaleOrderUnderPower: alpha must be positive");
  GevreyFit out = fit;
  out.sigmaHat = alpha * fit.sigmaHat;
  return out;
}

bool interpolationInequalityCheck(const DiagonalVector& v, double theta) {
  if (!(theta > 0.0) || !(theta < 1.0))
    throw DomainError("interpolationInequalityCheck: theta must be in (0,1)");
  const LogReal lhs = powerNorm(v, theta);
  const LogReal full = powerNorm(v, 1.0);
  const LogReal plain = powerNorm(v, 0.0);
  if (lhs.isZero()) return true;
  const double rhsLog = theta * full.logmag + (1.0 - theta) * plain.logmag;
  return lhs.logmag <= rhsLog + 1e-12 * std::max(1.0, std::abs(rhsLog));
}

double ellipticOrderMap(double sigma, int operatorOrder) {
  if (!(sigma > 0.0)) throw DomainError("ellipticOrderMap: sigma must be positive");
  if (operatorOrder <= 0 || operatorOrder % 2 != 0)
    throw DomainError("ellipticOrderMap: operator order must be an even positive integer");
  return sigma / static_cast<double>(operatorOrder);
}

double peakLambda(double alpha, double t, double k) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw DomainError("peakLambda: alpha must be in (0,1)");
  if (!(t > 0.0) || !(k > 0.0)) throw DomainError("peakLambda: t, k must be positive");
  return std::pow(k / ((1.0 - alpha) * t), 1.0 / (1.0 - alpha));
}

void requireTailAdequate(const Spectrum& spectrum, double alpha, double t, double k) {
  const double needed = 4.0 * peakLambda(alpha, t, k);
  const double lamN = spectrum.lambda(spectrum.count());
  if (lamN < needed) {
    std::ostringstream msg;
    msg << "tail rule: lambda_N = " << lamN << " but power k = " << k << " at t = " << t
        << " needs lambda_N >= " << needed;
    throw TruncationError(msg.str());
  }
}

std::size_t adequateModeCount(double delta, double eps, double alpha, double t, double k) {
  const double needed = 4.0 * peakLambda(alpha, t, k);
  return static_cast<std::size_t>(std::ceil(std::pow(needed / delta, 1.0 / eps))) + 1;
}

double peakLambdaOscillatory(double alpha, double c, double t, double k) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw DomainError("peakLambdaOscillatory: alpha in (0,1)");
  if (!(c > 0.0) || !(t > 0.0) || !(k > 0.0))
    throw DomainError("peakLambdaOscillatory: c, t, k must be positive");
  return std::pow(2.0 * k / (alpha * c * t), 1.0 / alpha);
}

double gevreyOrderTheory(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw DomainError("gevreyOrderTheory: alpha must be in (0,1)");
  return std::max(1.0 / alpha, 1.0 / (1.0 - alpha));
}

}  // namespace gevlab
