#ifndef GEVLAB_TESTS_ORACLES_HPP
#define GEVLAB_TESTS_ORACLES_HPP

// Test-only oracles, independent of the implementation paths they check.

#include <cmath>

namespace gevlab::test {

// Slow decay rate of an overdamped mode straight from the quadratic formula
// (the implementation uses the rationalized form; this one does not).
inline double quadraticFormulaMuMinus(double lambda, double alpha, double c) {
  const double b = c * std::pow(lambda, alpha);
  return b / 2.0 - std::sqrt(b * b / 4.0 - lambda);
}

// Hand-differentiated d/dt of Phi = u'^2 + lambda u^2 + (1/2) b^2 u^2 + b u u'
// for one mode, using u'' = -lambda u - b u' and the chain rule. Independent
// of both the finite-difference path and the dissipation formula.
inline double singleModePhiDerivative(double lambda, double b, double u, double uPrime) {
  const double uSecond = -lambda * u - b * uPrime;
  return 2.0 * uPrime * uSecond + 2.0 * lambda * u * uPrime + b * b * u * uPrime +
         b * (uPrime * uPrime + u * uSecond);
}

}  // namespace gevlab::test

#endif
