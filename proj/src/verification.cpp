#include "gevlab/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "gevlab/fitting.hpp"
#include "gevlab/quadrature.hpp"

namespace gevlab {

namespace {

double phiOf(const State& s, const DampingConfig& damping) {
  const auto b = [&](double l) { return damping.symbol(l); };
  const LogReal hv = powerNorm(s.v, 0.0);
  const LogReal halfU = powerNorm(s.u, 0.5);
  const SignedSum buSq = weightedInner(s.u, s.u, [&](double l) { const double w = b(l); return w * w; });
  const SignedSum cross = weightedInner(s.u, s.v, b);
  LogReal halfBuSq = buSq.value;
  if (!halfBuSq.isZero()) halfBuSq.logmag += std::log(0.5);
  std::array<LogReal, 4> terms{
      hv.isZero() ? LogReal::zero() : LogReal(1, 2.0 * hv.logmag),
      halfU.isZero() ? LogReal::zero() : LogReal(1, 2.0 * halfU.logmag),
      halfBuSq,
      cross.value,
  };
  return signedLogSumExp(std::span<const LogReal>(terms)).value.toReal();
}

double dissipationOf(const State& s, const DampingConfig& damping) {
  const auto b = [&](double l) { return damping.symbol(l); };
  const SignedSum bu = weightedInner(s.v, s.v, b);                                  // |B^{1/2}u'|^2
  const SignedSum aubu = weightedInner(s.u, s.u, [&](double l) { return l * b(l); });  // (Au, Bu)
  std::array<LogReal, 2> terms{bu.value, aubu.value};
  return signedLogSumExp(std::span<const LogReal>(terms)).value.toReal();
}

bool sandwichAt(const State& s, const DampingConfig& damping, double phi) {
  const double uPrimeSq = std::pow(powerNorm(s.v, 0.0).toReal(), 2);
  const double halfSq = std::pow(powerNorm(s.u, 0.5).toReal(), 2);
  const double buSq = weightedInner(s.u, s.u, [&](double l) {
                        const double w = damping.symbol(l);
                        return w * w;
                      }).value.toReal();
  const double low = 0.5 * uPrimeSq + halfSq;
  const double high = 1.5 * uPrimeSq + halfSq + buSq;
  const double slack = 1e-12 * std::max({1.0, std::abs(low), std::abs(high)});
  return low >= -slack && phi >= low - slack && phi <= high + slack;
}

}  // namespace

EnergyReport energyIdentityCheck(const State& state0, const DampingConfig& damping,
                                 std::span<const double> tGrid, double h) {
  if (tGrid.empty()) throw DomainError("energyIdentityCheck: empty time grid");
  double minSpacing = tGrid.front();
  for (std::size_t i = 0; i + 1 < tGrid.size(); ++i)
    minSpacing = std::min(minSpacing, tGrid[i + 1] - tGrid[i]);
  if (!(h > 0.0) || h >= minSpacing / 4.0)
    throw DomainError("energyIdentityCheck: need 0 < h < min grid spacing / 4");
  if (tGrid.front() <= h) throw DomainError("energyIdentityCheck: grid must start after h");

  EnergyReport report;
  report.h = h;
  for (double t : tGrid) {
    const State sPlus = evolve(state0, damping, t + h);
    const State sMinus = evolve(state0, damping, t - h);
    const State sMid = evolve(state0, damping, t);
    const double phiP = phiOf(sPlus, damping);
    const double phiM = phiOf(sMinus, damping);
    const double phiMid = phiOf(sMid, damping);
    const double dphi = (phiP - phiM) / (2.0 * h);
    const double rhs = -dissipationOf(sMid, damping);
    report.tGrid.push_back(t);
    report.phi.push_back(phiMid);
    report.dPhiFd.push_back(dphi);
    report.rhs.push_back(rhs);
    const double denom = std::max(std::abs(rhs), 1e-300);
    report.maxRelViolation = std::max(report.maxRelViolation, std::abs(dphi - rhs) / denom);
    report.sandwichHolds = report.sandwichHolds && sandwichAt(sMid, damping, phiMid);
  }
  return report;
}

IntegralInequalityResult integralInequalityCheck(const State& state0, const DampingConfig& damping,
                                                 double t) {
  if (!(t > 0.0)) throw DomainError("integralInequalityCheck: t must be positive");
  if (state0.u.spectrum() != state0.v.spectrum())
    throw DomainError("integralInequalityCheck: state components must share one spectrum");
  const Spectrum& spec = *state0.u.spectrum();

  // Per-mode closed forms evaluated at quadrature nodes; magnitudes stay in
  // double range for the finite test spectra this check targets.
  std::vector<std::size_t> active;
  std::vector<ModalSolution> sols;
  for (std::size_t i = 0; i < spec.count(); ++i) {
    if (state0.u[i].isZero() && state0.v[i].isZero()) continue;
    active.push_back(i);
    sols.emplace_back(spec.lambda(i + 1), damping, state0.u[i], state0.v[i]);
  }
  const auto integrand = [&](double s) {
    double acc = 0.0;
    for (std::size_t j = 0; j < sols.size(); ++j) {
      const double lam = spec.lambda(active[j] + 1);
      const double b = damping.symbol(lam);
      const auto [u, v] = sols[j].eval(s);
      const double ur = u.toReal();
      const double vr = v.toReal();
      acc += b * vr * vr + lam * b * ur * ur;
    }
    return acc;
  };

  IntegralInequalityResult res;
  const double g0 = integrand(0.0);
  const double tol = 1e-11 * std::max(1.0, g0 * t);
  res.lhs = adaptiveSimpson(integrand, 0.0, t, tol);

  const double uPrimeSq = std::pow(powerNorm(state0.v, 0.0).toReal(), 2);
  const double halfSq = std::pow(powerNorm(state0.u, 0.5).toReal(), 2);
  const double buSq = weightedInner(state0.u, state0.u, [&](double l) {
                        const double w = damping.symbol(l);
                        return w * w;
                      }).value.toReal();
  res.rhs = 1.5 * uPrimeSq + halfSq + buSq;
  res.holds = res.lhs <= res.rhs * (1.0 + 1e-9);
  return res;
}

SmoothingFitResult smoothingEstimateFit(const State& state0, const DampingConfig& damping,
                                        double t, std::span<const int> mValues) {
  if (!(t > 0.0)) throw DomainError("smoothingEstimateFit: t must be positive");
  if (mValues.empty()) throw DomainError("smoothingEstimateFit: empty iteration list");
  const Spectrum& spec = *state0.u.spectrum();
  if (spec.lambda(1) < 1.0)
    throw DomainError("smoothingEstimateFit: coercive spectrum (lambda_1 >= 1) required");
  if (!damping.isSinglePower())
    throw DomainError("smoothingEstimateFit: single-power damping required");

  const double alpha = damping.alpha();
  State base = state0;
  double step = alpha;
  if (alpha > 0.5) {
    base.u = state0.u.applyPower(alpha - 0.5);
    base.v = state0.v.applyPower(alpha - 0.5);
    step = 1.0 - alpha;
  }
  const LogReal e0 = energyNorms(base.u, base.v).enorm;
  if (e0.isZero()) throw DomainError("smoothingEstimateFit: zero initial data");
  const State st = evolve(base, damping, t);

  SmoothingFitResult out;
  for (int m : mValues) {
    if (m < 1) throw DomainError("smoothingEstimateFit: m must be >= 1");
    const double w = step * static_cast<double>(m);
    std::array<LogReal, 3> parts{powerNorm(st.u, w), powerNorm(st.u, w + 0.5), powerNorm(st.v, w)};
    const LogReal lhs = hypotLog(std::span<const LogReal>(parts));
    const double kPrime = (t / m) * std::exp((lhs.logmag - e0.logmag) / m);
    out.perIteration.emplace_back(m, kPrime);
    out.kPrimeHat = std::max(out.kPrimeHat, kPrime);
  }
  return out;
}

EnormGrowthResult enormGrowthCheck(const State& state0, const DampingConfig& damping,
                                   std::span<const double> tGrid) {
  const LogReal e0 = energyNorms(state0.u, state0.v).enorm;
  EnormGrowthResult res;
  if (e0.isZero()) {
    res.maxRatio = 0.0;
    return res;  // zero data: 0 <= 0
  }
  for (double t : tGrid) {
    const State st = evolve(state0, damping, t);
    const LogReal et = energyNorms(st.u, st.v).enorm;
    const double ratio = et.isZero() ? 0.0 : std::exp(2.0 * (et.logmag - e0.logmag) - t);
    res.maxRatio = std::max(res.maxRatio, ratio);
    if (ratio > 1.0 + 1e-9) res.holds = false;
  }
  return res;
}

bool CounterexampleSpec::overdampedRoute() const {
  if (variant == Variant::Overdamped) return true;
  if (variant == Variant::Oscillatory) return false;
  return damping.c() > 2.0;
}

std::size_t CounterexampleSpec::minimalStartIndex() const {
  const double alpha = damping.alpha();
  const double c = damping.c();
  for (std::size_t n = 1; n <= spectrum->count(); ++n) {
    const double lam = spectrum->lambda(n);
    const double disc = c * c * std::pow(lam, 2.0 * alpha) - 4.0 * lam;
    if (overdampedRoute() ? disc > 0.0 : disc < 0.0) return n;
  }
  return 0;
}

std::pair<double, double> CounterexampleSpec::summabilityMargins() const {
  const double eps = spectrum->growthEps().value();
  const double alpha = damping.alpha();
  const double vMargin = eps * (2.0 * bigK - 1.0) - 1.0;
  const double hDecay = overdampedRoute() ? (1.0 - alpha) : alpha;
  const double hMargin = eps * (2.0 * bigK - 2.0 * hDecay) - 1.0;
  return {vMargin, hMargin};
}

void CounterexampleSpec::validate() const {
  if (!spectrum) throw SpecError("counterexample: missing spectrum");
  if (!damping.isSinglePower()) throw SpecError("counterexample: single-power damping required");
  if (!spectrum->growthEps() || !spectrum->growthDelta())
    throw SpecError("counterexample: spectrum must carry power-law growth metadata");
  const double eps = spectrum->growthEps().value();
  if (!(bigK > 1.0 + 1.0 / (2.0 * eps))) {
    std::ostringstream msg;
    msg << "counterexample: K = " << bigK << " must exceed 1 + 1/(2 eps) = "
        << 1.0 + 1.0 / (2.0 * eps);
    throw SpecError(msg.str());
  }
  const double alpha = damping.alpha();
  const double c = damping.c();
  switch (variant) {
    case Variant::Overdamped:
      if (!(alpha > 0.5)) throw SpecError("counterexample: overdamped variant needs alpha > 1/2");
      break;
    case Variant::Oscillatory:
      if (!(alpha < 0.5)) throw SpecError("counterexample: oscillatory variant needs alpha < 1/2");
      break;
    case Variant::Half:
      if (alpha != 0.5) throw SpecError("counterexample: half variant needs alpha = 1/2");
      if (c == 2.0) throw SpecError("counterexample: half variant is critical at c = 2");
      break;
  }
  if (n0 == 0 || n0 > spectrum->count()) throw SpecError("counterexample: n0 out of range");
  const double lam0 = spectrum->lambda(n0);
  const double disc0 = c * c * std::pow(lam0, 2.0 * alpha) - 4.0 * lam0;
  if (overdampedRoute() && !(disc0 > 0.0)) {
    std::ostringstream msg;
    msg << "counterexample: mode n0 = " << n0 << " is not overdamped (c^2 lambda^(2a-1) = "
        << c * c * std::pow(lam0, 2.0 * alpha - 1.0) << " <= 4)";
    throw SpecError(msg.str());
  }
  if (!overdampedRoute() && !(disc0 < 0.0)) {
    std::ostringstream msg;
    msg << "counterexample: mode n0 = " << n0 << " is not underdamped (lambda^(1-2a) = "
        << std::pow(lam0, 1.0 - 2.0 * alpha) << " <= c^2/4)";
    throw SpecError(msg.str());
  }
  const auto [vMargin, hMargin] = summabilityMargins();
  if (!(vMargin > 0.0) || !(hMargin > 0.0))
    throw SpecError("counterexample: V x H summability exponents not satisfied");
}

State buildCounterexample(const CounterexampleSpec& spec) {
  spec.validate();
  const Spectrum& s = *spec.spectrum;
  State st{DiagonalVector(spec.spectrum), DiagonalVector(spec.spectrum)};
  for (std::size_t n = spec.n0; n <= s.count(); ++n) {
    const double lam = s.lambda(n);
    const LogReal cn(1, -spec.bigK * std::log(lam));
    const double b = spec.damping.symbol(lam);
    double rate;
    if (spec.overdampedRoute()) {
      const double root = std::sqrt(b * b / 4.0 - lam);
      rate = lam / (b / 2.0 + root);
    } else {
      rate = b / 2.0;
    }
    st.u[n - 1] = cn;
    st.v[n - 1] = LogReal(-1, cn.logmag + std::log(rate));
  }
  return st;
}

namespace {

// log of the exact integral of e^{-a s} cos^2(omega s) over [t, theta].
double logOscillatoryIntegral(double a, double omega, double t, double theta) {
  const auto g = [&](double s) {
    return -1.0 / (2.0 * a) +
           (-a * std::cos(2.0 * omega * s) + 2.0 * omega * std::sin(2.0 * omega * s)) /
               (2.0 * (a * a + 4.0 * omega * omega));
  };
  const double delta = theta - t;
  const double bracket = std::exp(-a * delta) * g(theta) - g(t);
  if (!(bracket > 0.0))
    throw DomainError("lowerBoundCheck: oscillatory integral lost all precision");
  return -a * t + std::log(bracket);
}

}  // namespace

LowerBoundResult lowerBoundCheck(const CounterexampleSpec& spec, double t, double theta,
                                 std::span<const double> ks) {
  spec.validate();
  if (!(t > 0.0)) throw DomainError("lowerBoundCheck: t must be positive");
  const bool over = spec.overdampedRoute();
  const bool integrated = !over || spec.variant == CounterexampleSpec::Variant::Half;
  if (integrated && !(theta > t))
    throw DomainError("lowerBoundCheck: need theta > t for the integrated bound");
  const Spectrum& s = *spec.spectrum;
  const double alpha = spec.damping.alpha();
  const double selExp = over ? 1.0 / (1.0 - alpha) : 1.0 / alpha;

  LowerBoundResult res;
  res.theoryExponent = integrated ? (over ? 2.0 / (1.0 - alpha) : 2.0 / alpha)
                                  : 1.0 / (1.0 - alpha);

  const State st0 = buildCounterexample(spec);
  // Full-norm reference for the domination cross-check.
  State stT;
  std::vector<double> baseIntegrated;  // -2K log(lambda_m) + log I_m, k-independent
  std::vector<double> logLamActive;
  if (!integrated) {
    stT = evolve(st0, spec.damping, t);
  } else {
    for (std::size_t m = spec.n0; m <= s.count(); ++m) {
      const double lm = s.lambda(m);
      const double bm = spec.damping.symbol(lm);
      double logIm;
      if (over) {
        const double rootm = std::sqrt(bm * bm / 4.0 - lm);
        const double mum = lm / (bm / 2.0 + rootm);
        logIm = -2.0 * mum * t + std::log((1.0 - std::exp(-2.0 * mum * (theta - t))) / (2.0 * mum));
      } else {
        const double om = std::sqrt(lm - bm * bm / 4.0);
        logIm = logOscillatoryIntegral(bm, om, t, theta);
      }
      baseIntegrated.push_back(-2.0 * spec.bigK * std::log(lm) + logIm);
      logLamActive.push_back(std::log(lm));
    }
  }

  std::vector<double> kArr, logB;
  for (double k : ks) {
    std::size_t n = s.firstIndexAtLeast(std::pow(k, selExp));
    if (n == 0) {
      std::ostringstream msg;
      msg << "lowerBoundCheck: spectrum too short for mode selection at k = " << k;
      throw TruncationError(msg.str());
    }
    n = std::max(n, spec.n0);
    const double lam = s.lambda(n);
    const double b = spec.damping.symbol(lam);
    double bound;
    if (!integrated) {
      const double root = std::sqrt(b * b / 4.0 - lam);
      const double mu = lam / (b / 2.0 + root);
      bound = -spec.bigK * std::log(lam) + k * std::log(lam) - mu * t;
      // one orthogonal component of the full norm
      const double full = powerNorm(stT.u, k).logmag;
      if (bound > full + 1e-9 * std::abs(full)) res.dominated = false;
    } else {
      double logI;
      if (over) {
        const double root = std::sqrt(b * b / 4.0 - lam);
        const double mu = lam / (b / 2.0 + root);
        logI = -2.0 * mu * t + std::log((1.0 - std::exp(-2.0 * mu * (theta - t))) / (2.0 * mu));
      } else {
        const double omega = std::sqrt(lam - b * b / 4.0);
        logI = logOscillatoryIntegral(b, omega, t, theta);
      }
      bound = 2.0 * (-spec.bigK * std::log(lam)) + 2.0 * k * std::log(lam) + logI;
      // integrated full norm: sum of per-mode exact integrals
      std::vector<double> logs(baseIntegrated.size());
      for (std::size_t j = 0; j < baseIntegrated.size(); ++j)
        logs[j] = baseIntegrated[j] + 2.0 * k * logLamActive[j];
      const double full = logSumExp(std::span<const double>(logs));
      if (bound > full + 1e-9 * std::abs(full)) res.dominated = false;
    }
    kArr.push_back(k);
    logB.push_back(bound);
    res.boundCurve.emplace_back(k, bound);
  }
  res.fittedExponent = growthExponentFit(kArr, logB);
  return res;
}

}  // namespace gevlab
