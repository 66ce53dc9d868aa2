#ifndef GEVLAB_APPENDIX_HPP
#define GEVLAB_APPENDIX_HPP

#include <cstdint>
#include <span>

#include "gevlab/spectrum.hpp"

namespace gevlab {

// Multifactorial chain p! <= p^p <= |p|^{|p|} <= 4^{(N-1)|p|} p^p <= (4^{N-1} e)^{|p|} p!
// checked exhaustively over positive multi-indices with |p| <= maxTotal.
struct ChainCheckResult {
  bool allHold = true;
  double worstRatio = -std::numeric_limits<double>::infinity();  // max (lhs - rhs) in log units
  std::uint64_t tuplesChecked = 0;
};

ChainCheckResult multiIndexChainCheck(int components, int maxTotal);

// (p+q)^{p+q} <= 2^{2(p+q)} p^p q^q, exhaustive over 1 <= p, q <= maxP.
bool twoComponentStepCheck(int maxP);

// (1+h)^beta <= 1 + h^beta over the supplied grids.
bool scalarPowerInequalityCheck(std::span<const double> betaGrid, std::span<const double> hGrid);

// |A^beta u|^2 <= |u|^2 + |Au|^2, plus the interpolation/Young route
// |A^beta u|^2 <= |Au|^{2 beta} |u|^{2(1-beta)} <= |u|^2 + |Au|^2.
bool diagonalOperatorInequalityCheck(const DiagonalVector& v, double beta);

}  // namespace gevlab

#endif
