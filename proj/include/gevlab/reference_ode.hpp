#ifndef GEVLAB_REFERENCE_ODE_HPP
#define GEVLAB_REFERENCE_ODE_HPP

#include <utility>

#include "gevlab/spectrum.hpp"

namespace gevlab {

// Independent cross-check integrator for one mode of u'' + lambda u + b(lambda) u' = 0.
// Classic fixed-step RK4 on the 2x2 first-order system; shares nothing with the
// closed-form solver it is used to validate. The step shrinks below baseStep
// when the fast rate b would leave the RK4 stability region or when the
// oscillation frequency would push the oracle's own phase error near the
// tolerances it arbitrates.
std::pair<double, double> referenceRk4Mode(double lambda, const DampingConfig& damping,
                                           double u0, double u1, double T,
                                           double baseStep = 1e-4);

}  // namespace gevlab

#endif
