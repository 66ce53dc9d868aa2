#include "gevlab/logreal.hpp"

#include <algorithm>

namespace gevlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Max-shifted log-sum-exp over one sign class, ascending index order.
double classLse(std::span<const LogReal> terms, int sign) {
  double mx = kNegInf;
  for (const LogReal& t : terms)
    if (t.sign == sign) mx = std::max(mx, t.logmag);
  if (mx == kNegInf) return kNegInf;
  double acc = 0.0;
  for (const LogReal& t : terms)
    if (t.sign == sign) acc += std::exp(t.logmag - mx);
  return mx + std::log(acc);
}

}  // namespace

double logSumExp(std::span<const double> logs) {
  double mx = kNegInf;
  for (double l : logs) mx = std::max(mx, l);
  if (mx == kNegInf) return kNegInf;
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - mx);
  return mx + std::log(acc);
}

SignedSum signedLogSumExp(std::span<const LogReal> terms) {
  const double lp = classLse(terms, 1);
  const double ln = classLse(terms, -1);

  SignedSum out;
  if (lp == kNegInf && ln == kNegInf) return out;  // all terms zero

  const double hi = std::max(lp, ln);
  const double lo = std::min(lp, ln);
  double total = hi;  // log(sum |terms|)
  if (lo != kNegInf) total = hi + std::log1p(std::exp(lo - hi));

  if (lp == ln) {
    out.value = LogReal::zero();
    out.cancellation = true;  // exact cancellation of nonzero classes
    return out;
  }
  const int sign = (lp > ln) ? 1 : -1;
  double mag;
  if (lo == kNegInf) {
    mag = hi;
  } else {
    mag = hi + std::log1p(-std::exp(lo - hi));
  }
  out.value = LogReal::fromLog(sign, mag);
  out.cancellation = (mag - total) < std::log(kCancellationThreshold);
  return out;
}

}  // namespace gevlab
