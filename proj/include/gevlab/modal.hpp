#ifndef GEVLAB_MODAL_HPP
#define GEVLAB_MODAL_HPP

#include <utility>

#include "gevlab/spectrum.hpp"

namespace gevlab {

enum class Regime { Overdamped, Critical, Underdamped };

// Characteristic discriminant b(lambda)^2 - 4 lambda decides the branch.
// Within a relative 1e-10 band of zero the critical form is used: the
// two-exponential representation degenerates there and the critical form
// is its correct limit.
Regime classifyRegime(double lambda, const DampingConfig& damping);

// Closed-form solution of w'' + lambda w + b(lambda) w' = 0 for one mode,
// parameterized by the initial pair. Evaluation stays in log-magnitude form.
class ModalSolution {
 public:
  ModalSolution(double lambda, const DampingConfig& damping, LogReal u0, LogReal u1);

  Regime regime() const { return regime_; }
  double lambda() const { return lambda_; }

  // Overdamped/Critical decay rates; muMinus == muPlus at criticality.
  // muMinus is computed by the rationalized form lambda / (b/2 + sqrt(b^2/4 - lambda)).
  double muMinus() const { return mu_minus_; }
  double muPlus() const { return mu_plus_; }
  // Underdamped decay b/2 and frequency sqrt(lambda - b^2/4).
  double mu() const { return mu_minus_; }
  double omega() const { return omega_; }

  // Amplitude pair in front of the two fundamental solutions.
  const LogReal& ampA() const { return amp_a_; }
  const LogReal& ampB() const { return amp_b_; }

  // (w(t), w'(t)); t = 0 reproduces the initial pair exactly.
  std::pair<LogReal, LogReal> eval(double t) const;

 private:
  double lambda_;
  Regime regime_;
  double mu_minus_ = 0.0;  // slow rate (or common rate)
  double mu_plus_ = 0.0;   // fast rate
  double omega_ = 0.0;
  LogReal u0_, u1_;
  LogReal amp_a_, amp_b_;
  LogReal osc_s_;  // underdamped: (mu u1 + lambda u0)/omega, the sin coefficient of -w'
};

// One-call form: exact (w(t), w'(t)) from real initial data.
std::pair<LogReal, LogReal> solveMode(double lambda, const DampingConfig& damping,
                                      double u0, double u1, double t);

// Applies the closed-form propagator to every mode. evolve(s, 0) is the
// identity; the per-mode semigroup property holds to rounding.
State evolve(const State& state0, const DampingConfig& damping, double t);

}  // namespace gevlab

#endif
