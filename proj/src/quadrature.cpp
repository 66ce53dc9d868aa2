#include "gevlab/quadrature.hpp"

#include <cmath>

#include "gevlab/errors.hpp"

namespace gevlab {

namespace {

double recurse(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double whole, double tol, int depth, int maxDepth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth >= maxDepth)
    throw QuadratureError("adaptiveSimpson: refinement depth exceeded");
  return recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1, maxDepth) +
         recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1, maxDepth);
}

}  // namespace

double adaptiveSimpson(const std::function<double(double)>& f, double a, double b,
                       double tol, int maxDepth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return recurse(f, a, b, fa, fm, fb, whole, tol, 0, maxDepth);
}

}  // namespace gevlab
