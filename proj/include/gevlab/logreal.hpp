#ifndef GEVLAB_LOGREAL_HPP
#define GEVLAB_LOGREAL_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "gevlab/errors.hpp"

namespace gevlab {

// Signed log-magnitude scalar: the value is sign * exp(logmag).
// sign == 0 iff logmag == -inf (exact zero). This is the only numeric
// carrier used for norms and modal coefficients, so quantities like
// lambda^k e^{-mu t} stay representable far beyond double range.
struct LogReal {
  int sign = 0;  // -1, 0, +1
  double logmag = -std::numeric_limits<double>::infinity();

  constexpr LogReal() = default;
  constexpr LogReal(int s, double lm) : sign(s), logmag(lm) {}

  static LogReal zero() { return LogReal(); }
  static LogReal one() { return LogReal(1, 0.0); }

  static LogReal fromReal(double x) {
    if (std::isnan(x) || std::isinf(x)) throw DomainError("LogReal::fromReal: non-finite input");
    if (x == 0.0) return zero();
    return LogReal(x > 0.0 ? 1 : -1, std::log(std::abs(x)));
  }

  // Build sign * exp(lm) directly (lm may be far outside double exp range).
  static LogReal fromLog(int s, double lm) {
    if (s == 0 || lm == -std::numeric_limits<double>::infinity()) return zero();
    return LogReal(s < 0 ? -1 : 1, lm);
  }

  double toReal() const {
    if (sign == 0) return 0.0;
    return static_cast<double>(sign) * std::exp(logmag);
  }

  bool isZero() const { return sign == 0; }

  LogReal negated() const { return LogReal(-sign, logmag); }
  LogReal abs() const { return LogReal(sign == 0 ? 0 : 1, logmag); }
};

inline LogReal mul(const LogReal& a, const LogReal& b) {
  if (a.sign == 0 || b.sign == 0) return LogReal::zero();
  return LogReal(a.sign * b.sign, a.logmag + b.logmag);
}

inline LogReal operator*(const LogReal& a, const LogReal& b) { return mul(a, b); }

// base^exponent for positive base; logmag scales by the exponent.
inline LogReal powScaled(const LogReal& base, double exponent) {
  if (base.sign != 1) throw DomainError("powScaled: base must be strictly positive");
  return LogReal(1, base.logmag * exponent);
}

// a < b as real numbers.
inline bool lessThan(const LogReal& a, const LogReal& b) {
  if (a.sign != b.sign) return a.sign < b.sign;
  if (a.sign > 0) return a.logmag < b.logmag;
  if (a.sign < 0) return a.logmag > b.logmag;
  return false;
}

struct SignedSum {
  LogReal value;
  // Raised when |sum| / sum|terms| < 1e-12: the result lost essentially all
  // significant digits to cancellation and the caller must decide policy.
  bool cancellation = false;
};

inline constexpr double kCancellationThreshold = 1e-12;

// Stable signed sum: positive and negative terms are reduced separately with
// max-shifted log-sum-exp (ascending index order), then combined by a
// log-domain difference. Serial evaluation is the deterministic reference.
SignedSum signedLogSumExp(std::span<const LogReal> terms);
inline SignedSum signedLogSumExp(const std::vector<LogReal>& terms) {
  return signedLogSumExp(std::span<const LogReal>(terms));
}

// log(sum of exp(logs)) over nonnegative magnitudes only.
double logSumExp(std::span<const double> logs);

}  // namespace gevlab

#endif
