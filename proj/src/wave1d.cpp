#include "gevlab/wave1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gevlab/parallel.hpp"

namespace gevlab {

WaveDomain WaveDomain::interval(double length) {
  return interval(length, 0.2 * length, 0.8 * length);
}

WaveDomain WaveDomain::interval(double length, double a, double b) {
  if (!(length > 0.0)) throw DomainError("WaveDomain: length must be positive");
  if (!(0.0 < a && a < b && b < length)) throw DomainError("WaveDomain: need 0 < a < b < L");
  WaveDomain d;
  d.length = length;
  d.windowA = a;
  d.windowB = b;
  return d;
}

SpectrumPtr WaveDomain::makeSpectrum(std::size_t count) const {
  return Spectrum::dirichlet1d(length, count);
}

namespace {

void requireMatchingDomain(const DiagonalVector& u, const WaveDomain& domain, const char* who) {
  const Spectrum& spec = *u.spectrum();
  if (spec.kind() != SpectrumKind::Dirichlet1D || !spec.domainLength() ||
      std::abs(spec.domainLength().value() - domain.length) > 1e-12 * domain.length)
    throw DomainError(std::string(who) + ": vector spectrum does not match the interval");
}

}  // namespace

SignedSum reconstruct(const DiagonalVector& u, const WaveDomain& domain, double x, int p) {
  if (!(x > 0.0 && x < domain.length)) throw DomainError("reconstruct: x outside (0, L)");
  if (p < 0) throw DomainError("reconstruct: derivative order must be nonnegative");
  requireMatchingDomain(u, domain, "reconstruct");
  const double base = std::numbers::pi / domain.length;
  const double logAmp = 0.5 * std::log(2.0 / domain.length);
  std::vector<LogReal> terms;
  terms.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].isZero()) continue;
    const double freq = base * static_cast<double>(i + 1);
    const double arg = freq * x;
    double trig = (p % 2 == 0) ? std::sin(arg) : std::cos(arg);
    if (p % 4 >= 2) trig = -trig;
    if (trig == 0.0) continue;
    const int sign = u[i].sign * (trig > 0.0 ? 1 : -1);
    const double lm = u[i].logmag + p * std::log(freq) + logAmp + std::log(std::abs(trig));
    terms.push_back(LogReal(sign, lm));
  }
  return signedLogSumExp(std::span<const LogReal>(terms));
}

SpatialDerivCurve spatialDerivCurve(const DiagonalVector& u, const WaveDomain& domain, double t,
                                    std::span<const int> ps, std::size_t xPoints, int threads) {
  if (xPoints < 2) throw DomainError("spatialDerivCurve: need at least 2 grid points");
  requireMatchingDomain(u, domain, "spatialDerivCurve");
  SpatialDerivCurve curve;
  curve.t = t;
  curve.entries.resize(ps.size());
  std::vector<double> xs(xPoints);
  for (std::size_t i = 0; i < xPoints; ++i)
    xs[i] = domain.windowA +
            (domain.windowB - domain.windowA) * static_cast<double>(i) / static_cast<double>(xPoints - 1);

  const double base = std::numbers::pi / domain.length;
  const double logAmp = 0.5 * std::log(2.0 / domain.length);

  parallelFor(ps.size(), threads, [&](std::size_t ip) {
    const int p = ps[ip];
    // Restrict to modes whose p-weighted magnitude can reach the sum: terms
    // more than ~745 logs below the peak cannot move a double-precision LSE.
    double peak = -std::numeric_limits<double>::infinity();
    std::vector<double> weight(u.size(), -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].isZero()) continue;
      weight[i] = u[i].logmag + p * std::log(base * static_cast<double>(i + 1));
      peak = std::max(peak, weight[i]);
    }
    const double cutoff = peak - 745.0;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<LogReal> terms;
    for (double x : xs) {
      terms.clear();
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (weight[i] < cutoff) continue;
        const double arg = base * static_cast<double>(i + 1) * x;
        double trig = (p % 2 == 0) ? std::sin(arg) : std::cos(arg);
        if (p % 4 >= 2) trig = -trig;
        if (trig == 0.0) continue;
        const int sign = u[i].sign * (trig > 0.0 ? 1 : -1);
        terms.push_back(LogReal(sign, weight[i] + logAmp + std::log(std::abs(trig))));
      }
      const SignedSum s = signedLogSumExp(std::span<const LogReal>(terms));
      if (!s.value.isZero()) best = std::max(best, s.value.logmag);
    }
    curve.entries[ip] = SpatialSample{p, best};
  });
  return curve;
}

GevreyFit spatialGevreyFit(const DiagonalVector& u, const WaveDomain& domain,
                           const DampingConfig& damping, double t, std::span<const int> ps,
                           std::size_t xPoints, int threads) {
  if (ps.empty()) throw DomainError("spatialGevreyFit: empty derivative order list");
  const int pMax = *std::max_element(ps.begin(), ps.end());
  requireTailAdequate(*u.spectrum(), damping.maxAlpha(), t, static_cast<double>(pMax) / 2.0);
  const SpatialDerivCurve curve = spatialDerivCurve(u, domain, t, ps, xPoints, threads);
  PowerNormCurve asPowers;
  asPowers.t = t;
  for (const SpatialSample& s : curve.entries)
    if (std::isfinite(s.logSup)) asPowers.entries.push_back(CurveSample{static_cast<double>(s.p), s.logSup});
  return fitGevreyOrder(asPowers, 2.0, static_cast<double>(pMax));
}

DiagonalVector threeToOneEmbedding(const DiagonalVector& u3) {
  const Spectrum& s3 = *u3.spectrum();
  if (s3.kind() != SpectrumKind::Dirichlet1D || !s3.domainLength())
    throw SupportError("threeToOneEmbedding: source must be a Dirichlet interval spectrum");
  for (std::size_t n = 1; n <= s3.count(); ++n)
    if (n % 3 != 0 && !u3[n - 1].isZero())
      throw SupportError("threeToOneEmbedding: nonzero coefficient off the multiples-of-3 modes");
  const std::size_t countTarget = s3.count() / 3;
  if (countTarget == 0) throw SupportError("threeToOneEmbedding: fewer than 3 source modes");
  SpectrumPtr target = Spectrum::dirichlet1d(s3.domainLength().value() / 3.0, countTarget);
  DiagonalVector out(target);
  for (std::size_t m = 1; m <= countTarget; ++m) out[m - 1] = u3[3 * m - 1];
  return out;
}

}  // namespace gevlab
