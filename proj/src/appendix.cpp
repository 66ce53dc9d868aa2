#include "gevlab/appendix.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "gevlab/norms.hpp"

namespace gevlab {

namespace {

constexpr double kLogSlack = 1e-12;  // absorbs rounding on true-equality boundary cases

// log k! via lgamma; integer factorials overflow past 20!.
double logFactorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

struct ChainAccumulator {
  ChainCheckResult result;

  void visit(std::span<const int> p, int components) {
    int total = 0;
    double logFact = 0.0, logPp = 0.0;
    for (int v : p) {
      total += v;
      logFact += logFactorial(v);
      logPp += v * std::log(static_cast<double>(v));
    }
    const double tot = static_cast<double>(total);
    const double logTotPow = tot * std::log(tot);
    const double log4Part = (components - 1) * tot * std::log(4.0);
    const std::array<double, 4> gaps{
        logFact - logPp,                              // p! <= p^p
        logPp - logTotPow,                            // p^p <= |p|^{|p|}
        logTotPow - (log4Part + logPp),               // |p|^{|p|} <= 4^{(N-1)|p|} p^p
        (log4Part + logPp) - (log4Part + tot + logFact),  // ... <= (4^{N-1} e)^{|p|} p!
    };
    for (double g : gaps) {
      result.worstRatio = std::max(result.worstRatio, g);
      if (g > kLogSlack) result.allHold = false;
    }
    ++result.tuplesChecked;
  }
};

void enumerate(std::vector<int>& p, std::size_t pos, int remaining, ChainAccumulator& acc) {
  const std::size_t n = p.size();
  if (pos == n - 1) {
    for (int v = 1; v <= remaining; ++v) {
      p[pos] = v;
      acc.visit(p, static_cast<int>(n));
    }
    return;
  }
  const int reserve = static_cast<int>(n - pos - 1);  // each later slot needs >= 1
  for (int v = 1; v <= remaining - reserve; ++v) {
    p[pos] = v;
    enumerate(p, pos + 1, remaining - v, acc);
  }
}

}  // namespace

ChainCheckResult multiIndexChainCheck(int components, int maxTotal) {
  if (components < 1 || components > 6) throw DomainError("multiIndexChainCheck: components in [1,6]");
  if (maxTotal < components || maxTotal > 20)
    throw DomainError("multiIndexChainCheck: maxTotal in [components, 20]");
  ChainAccumulator acc;
  std::vector<int> p(components);
  enumerate(p, 0, maxTotal, acc);
  return acc.result;
}

bool twoComponentStepCheck(int maxP) {
  if (maxP < 1 || maxP > 500) throw DomainError("twoComponentStepCheck: maxP in [1,500]");
  for (int p = 1; p <= maxP; ++p) {
    for (int q = 1; q <= maxP; ++q) {
      const double s = static_cast<double>(p + q);
      const double lhs = s * std::log(s);
      const double rhs = 2.0 * s * std::log(2.0) + p * std::log(static_cast<double>(p)) +
                         q * std::log(static_cast<double>(q));
      if (lhs > rhs + kLogSlack) return false;
    }
  }
  return true;
}

bool scalarPowerInequalityCheck(std::span<const double> betaGrid, std::span<const double> hGrid) {
  for (double beta : betaGrid) {
    if (beta < 0.0 || beta > 1.0) throw DomainError("scalarPowerInequalityCheck: beta in [0,1]");
    for (double h : hGrid) {
      if (!(h > 0.0)) throw DomainError("scalarPowerInequalityCheck: h must be positive");
      const double lhs = beta * std::log1p(h);
      const double rhs = std::log1p(std::pow(h, beta));
      if (lhs > rhs + 1e-12 * std::max(1.0, std::abs(rhs))) return false;
    }
  }
  return true;
}

bool diagonalOperatorInequalityCheck(const DiagonalVector& v, double beta) {
  if (beta < 0.0 || beta > 1.0) throw DomainError("diagonalOperatorInequalityCheck: beta in [0,1]");
  const LogReal nb = powerNorm(v, beta);
  const LogReal n0 = powerNorm(v, 0.0);
  const LogReal n1 = powerNorm(v, 1.0);
  if (nb.isZero()) return true;
  std::array<LogReal, 2> sq{n0.isZero() ? LogReal::zero() : LogReal(1, 2.0 * n0.logmag),
                            n1.isZero() ? LogReal::zero() : LogReal(1, 2.0 * n1.logmag)};
  const LogReal rhs = signedLogSumExp(std::span<const LogReal>(sq)).value;
  const double slack = 1e-12 * std::max(1.0, std::abs(rhs.logmag));
  if (2.0 * nb.logmag > rhs.logmag + slack) return false;
  // Interpolation followed by Young with exponents 1/beta, 1/(1-beta).
  if (beta > 0.0 && beta < 1.0) {
    const double mid = 2.0 * beta * n1.logmag + 2.0 * (1.0 - beta) * n0.logmag;
    if (2.0 * nb.logmag > mid + slack) return false;
    if (mid > rhs.logmag + slack) return false;
  }
  return true;
}

}  // namespace gevlab
