#include "gevlab/modal.hpp"

#include <array>
#include <cmath>

namespace gevlab {

namespace {

constexpr double kCriticalBand = 1e-10;

LogReal sum2(const LogReal& a, const LogReal& b) {
  std::array<LogReal, 2> t{a, b};
  return signedLogSumExp(std::span<const LogReal>(t)).value;
}

LogReal scaleBy(const LogReal& a, double factor) {
  if (a.isZero() || factor == 0.0) return LogReal::zero();
  const int s = factor > 0.0 ? a.sign : -a.sign;
  return LogReal(s, a.logmag + std::log(std::abs(factor)));
}

LogReal decayFactor(double rate, double t) { return LogReal(1, -rate * t); }

}  // namespace

Regime classifyRegime(double lambda, const DampingConfig& damping) {
  if (!(lambda > 0.0)) throw DomainError("classifyRegime: lambda must be positive");
  const double b = damping.symbol(lambda);
  const double disc = b * b - 4.0 * lambda;
  if (std::abs(disc) / (4.0 * lambda) < kCriticalBand) return Regime::Critical;
  return disc > 0.0 ? Regime::Overdamped : Regime::Underdamped;
}

ModalSolution::ModalSolution(double lambda, const DampingConfig& damping, LogReal u0, LogReal u1)
    : lambda_(lambda), regime_(classifyRegime(lambda, damping)), u0_(u0), u1_(u1) {
  const double b = damping.symbol(lambda);
  switch (regime_) {
    case Regime::Overdamped: {
      const double root = std::sqrt(b * b / 4.0 - lambda);
      mu_plus_ = b / 2.0 + root;
      mu_minus_ = lambda / (b / 2.0 + root);  // avoids b/2 - root cancellation
      const double gap = mu_plus_ - mu_minus_;
      // w = A e^{-mu- t} + B e^{-mu+ t}
      amp_a_ = scaleBy(sum2(u1, scaleBy(u0, mu_plus_)), 1.0 / gap);
      amp_b_ = scaleBy(sum2(u1, scaleBy(u0, mu_minus_)), -1.0 / gap);
      break;
    }
    case Regime::Critical: {
      mu_minus_ = mu_plus_ = b / 2.0;
      // w = (A + B t) e^{-mu t}
      amp_a_ = u0;
      amp_b_ = sum2(u1, scaleBy(u0, mu_minus_));
      break;
    }
    case Regime::Underdamped: {
      mu_minus_ = mu_plus_ = b / 2.0;
      omega_ = std::sqrt(lambda - b * b / 4.0);
      // w = e^{-mu t} (A cos wt + B sin wt)
      amp_a_ = u0;
      amp_b_ = scaleBy(sum2(u1, scaleBy(u0, mu_minus_)), 1.0 / omega_);
      osc_s_ = scaleBy(sum2(scaleBy(u1, mu_minus_), scaleBy(u0, lambda)), 1.0 / omega_);
      break;
    }
  }
}

std::pair<LogReal, LogReal> ModalSolution::eval(double t) const {
  if (t == 0.0) return {u0_, u1_};
  switch (regime_) {
    case Regime::Overdamped: {
      const LogReal eSlow = decayFactor(mu_minus_, t);
      const LogReal eFast = decayFactor(mu_plus_, t);
      const LogReal u = sum2(mul(amp_a_, eSlow), mul(amp_b_, eFast));
      const LogReal v = sum2(scaleBy(mul(amp_a_, eSlow), -mu_minus_),
                             scaleBy(mul(amp_b_, eFast), -mu_plus_));
      return {u, v};
    }
    case Regime::Critical: {
      const LogReal e = decayFactor(mu_minus_, t);
      const LogReal u = mul(sum2(amp_a_, scaleBy(amp_b_, t)), e);
      // w' = (B - mu A - mu B t) e^{-mu t}
      std::array<LogReal, 3> dv{amp_b_, scaleBy(amp_a_, -mu_minus_), scaleBy(amp_b_, -mu_minus_ * t)};
      const LogReal v = mul(signedLogSumExp(std::span<const LogReal>(dv)).value, e);
      return {u, v};
    }
    case Regime::Underdamped: {
      const LogReal e = decayFactor(mu_minus_, t);
      const double cwt = std::cos(omega_ * t);
      const double swt = std::sin(omega_ * t);
      const LogReal u = mul(sum2(scaleBy(amp_a_, cwt), scaleBy(amp_b_, swt)), e);
      // w' = e^{-mu t} (u1 cos wt - S sin wt), S = (mu u1 + lambda u0)/omega
      const LogReal v = mul(sum2(scaleBy(u1_, cwt), scaleBy(osc_s_, -swt)), e);
      return {u, v};
    }
  }
  return {LogReal::zero(), LogReal::zero()};
}

std::pair<LogReal, LogReal> solveMode(double lambda, const DampingConfig& damping,
                                      double u0, double u1, double t) {
  if (!(t >= 0.0)) throw DomainError("solveMode: t must be nonnegative");
  const LogReal l0 = LogReal::fromReal(u0);
  const LogReal l1 = LogReal::fromReal(u1);
  if (t == 0.0) return {l0, l1};
  if (l0.isZero() && l1.isZero()) return {LogReal::zero(), LogReal::zero()};
  return ModalSolution(lambda, damping, l0, l1).eval(t);
}

State evolve(const State& state0, const DampingConfig& damping, double t) {
  if (!(t >= 0.0)) throw DomainError("evolve: t must be nonnegative");
  if (state0.u.spectrum() != state0.v.spectrum())
    throw DomainError("evolve: state components must share one spectrum");
  if (t == 0.0) return state0;
  const Spectrum& spec = *state0.u.spectrum();
  State out{DiagonalVector(state0.u.spectrum()), DiagonalVector(state0.v.spectrum())};
  for (std::size_t i = 0; i < spec.count(); ++i) {
    const LogReal& a = state0.u[i];
    const LogReal& b = state0.v[i];
    if (a.isZero() && b.isZero()) continue;
    auto [u, v] = ModalSolution(spec.lambda(i + 1), damping, a, b).eval(t);
    out.u[i] = u;
    out.v[i] = v;
  }
  return out;
}

}  // namespace gevlab
