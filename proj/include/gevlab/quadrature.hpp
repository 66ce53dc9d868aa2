#ifndef GEVLAB_QUADRATURE_HPP
#define GEVLAB_QUADRATURE_HPP

#include <functional>

namespace gevlab {

// Adaptive Simpson with Richardson correction. Throws QuadratureError when a
// panel still misses its tolerance share at depth > maxDepth.
double adaptiveSimpson(const std::function<double(double)>& f, double a, double b,
                       double tol, int maxDepth = 30);

}  // namespace gevlab

#endif
