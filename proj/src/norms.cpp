#include "gevlab/norms.hpp"

#include <array>
#include <cmath>

namespace gevlab {

LogReal powerNorm(const DiagonalVector& v, double k) {
  const Spectrum& spec = *v.spectrum();
  std::vector<double> logs;
  logs.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].isZero()) continue;
    logs.push_back(2.0 * k * std::log(spec.lambda(i + 1)) + 2.0 * v[i].logmag);
  }
  if (logs.empty()) return LogReal::zero();
  return LogReal::fromLog(1, 0.5 * logSumExp(std::span<const double>(logs)));
}

LogReal hypotLog(std::span<const LogReal> norms) {
  std::vector<double> logs;
  logs.reserve(norms.size());
  for (const LogReal& n : norms)
    if (!n.isZero()) logs.push_back(2.0 * n.logmag);
  if (logs.empty()) return LogReal::zero();
  return LogReal::fromLog(1, 0.5 * logSumExp(std::span<const double>(logs)));
}

EnergyNormSet energyNorms(const DiagonalVector& u, const DiagonalVector& uPrime) {
  if (u.spectrum() != uPrime.spectrum())
    throw DomainError("energyNorms: components must share one spectrum");
  EnergyNormSet out;
  out.h = powerNorm(u, 0.0);
  out.half = powerNorm(u, 0.5);
  std::array<LogReal, 2> vparts{out.h, out.half};
  out.vnorm = hypotLog(std::span<const LogReal>(vparts));
  std::array<LogReal, 2> eparts{out.vnorm, powerNorm(uPrime, 0.0)};
  out.enorm = hypotLog(std::span<const LogReal>(eparts));
  return out;
}

SignedSum weightedInner(const DiagonalVector& a, const DiagonalVector& b,
                        const std::function<double(double)>& weight) {
  if (a.spectrum() != b.spectrum())
    throw DomainError("weightedInner: vectors must share one spectrum");
  const Spectrum& spec = *a.spectrum();
  std::vector<LogReal> terms;
  terms.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].isZero() || b[i].isZero()) continue;
    const double w = weight(spec.lambda(i + 1));
    if (w == 0.0) continue;
    LogReal t = mul(a[i], b[i]);
    if (w < 0.0) t = t.negated();
    t.logmag += std::log(std::abs(w));
    terms.push_back(t);
  }
  return signedLogSumExp(std::span<const LogReal>(terms));
}

}  // namespace gevlab
