#ifndef GEVLAB_WAVE1D_HPP
#define GEVLAB_WAVE1D_HPP

#include <vector>

#include "gevlab/gevrey.hpp"
#include "gevlab/spectrum.hpp"

namespace gevlab {

// Dirichlet interval (0, L): lambda_n = (n pi / L)^2, phi_n = sqrt(2/L) sin(n pi x / L).
// [windowA, windowB] is the compact subinterval where sup norms are measured;
// the regularity statements are interior ones.
struct WaveDomain {
  double length = 0.0;
  double windowA = 0.0;
  double windowB = 0.0;

  static WaveDomain interval(double length);  // window defaults to [0.2 L, 0.8 L]
  static WaveDomain interval(double length, double a, double b);

  SpectrumPtr makeSpectrum(std::size_t count) const;
};

struct SpatialSample {
  int p = 0;          // spatial derivative order
  double logSup = 0.0;  // log max over the x grid of |d^p_x u|
};

struct SpatialDerivCurve {
  double t = 0.0;
  std::vector<SpatialSample> entries;
};

// d^p_x u(x) = sum_n u_n (n pi / L)^p sqrt(2/L) trig(n pi x / L), trig cycling
// sin, cos, -sin, -cos with p mod 4. Cancellation in the signed sum is
// reported through the returned flag.
SignedSum reconstruct(const DiagonalVector& u, const WaveDomain& domain, double x, int p);

SpatialDerivCurve spatialDerivCurve(const DiagonalVector& u, const WaveDomain& domain, double t,
                                    std::span<const int> ps, std::size_t xPoints = 257,
                                    int threads = 1);

// Regression of logSup(p)/p on log p, exactly as the operator-power fit; the
// damping parameters feed the tail-adequacy guard at k = max(p)/2.
GevreyFit spatialGevreyFit(const DiagonalVector& u, const WaveDomain& domain,
                           const DampingConfig& damping, double t, std::span<const int> ps,
                           std::size_t xPoints = 257, int threads = 1);

// Solutions on (0, 3L) supported on multiples-of-3 modes solve the same
// equation on (0, L): mode 3m maps to mode m with the eigenvalue preserved.
DiagonalVector threeToOneEmbedding(const DiagonalVector& u3);

}  // namespace gevlab

#endif
