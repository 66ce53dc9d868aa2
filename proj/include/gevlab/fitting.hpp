#ifndef GEVLAB_FITTING_HPP
#define GEVLAB_FITTING_HPP

#include <span>
#include <vector>

namespace gevlab {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LinearFit linearFit(std::span<const double> x, std::span<const double> y);

// Least squares for y ~ E k log k + b k + g log k + d, returning E.
// The g log k column absorbs the known lambda^{-K} coefficient profile of the
// counterexample data, which otherwise biases the leading exponent at finite k.
double growthExponentFit(std::span<const double> k, std::span<const double> y);

}  // namespace gevlab

#endif
