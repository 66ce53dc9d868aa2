#ifndef GEVLAB_NORMS_HPP
#define GEVLAB_NORMS_HPP

#include <functional>

#include "gevlab/spectrum.hpp"

namespace gevlab {

// |A^k v| = (sum_n lambda_n^{2k} v_n^2)^{1/2}; k may be fractional.
LogReal powerNorm(const DiagonalVector& v, double k);

struct EnergyNormSet {
  LogReal h;     // |u|
  LogReal half;  // |A^{1/2} u|
  LogReal vnorm; // ||u|| = (|u|^2 + |A^{1/2}u|^2)^{1/2}
  LogReal enorm; // |(u, u')|_E = (||u||^2 + |u'|^2)^{1/2}
};

EnergyNormSet energyNorms(const DiagonalVector& u, const DiagonalVector& uPrime);

// sum_n w(lambda_n) a_n b_n, signed. Covers (Bu, u'), (Au, Bu), |B^{1/2}u'|^2.
SignedSum weightedInner(const DiagonalVector& a, const DiagonalVector& b,
                        const std::function<double(double)>& weight);

// sqrt of a sum of squared norms, all in log domain.
LogReal hypotLog(std::span<const LogReal> norms);

}  // namespace gevlab

#endif
