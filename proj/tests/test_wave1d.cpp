#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gevlab/modal.hpp"
#include "gevlab/rng.hpp"
#include "gevlab/wave1d.hpp"

using namespace gevlab;

namespace {
constexpr double kPi = std::numbers::pi;

DiagonalVector thm41WaveData(SpectrumPtr spec3, double bigK, std::size_t mMax, double t) {
  // Multiples-of-3 slow-branch data on (0, 3 pi), evolved analytically to t.
  const DampingConfig damping(0.75, 1.0);
  DiagonalVector u(spec3);
  for (std::size_t m = 5; m <= mMax; ++m) {
    const std::size_t k = 3 * m;
    const double lam = spec3->lambda(k);
    const double b = damping.symbol(lam);
    const double mu = lam / (b / 2.0 + std::sqrt(b * b / 4.0 - lam));
    u[k - 1] = LogReal(1, -bigK * std::log(lam) - mu * t);
  }
  return u;
}
}  // namespace

TEST_CASE("reconstruct: single mode values and eigenfunction relation") {
  const WaveDomain dom = WaveDomain::interval(2.0);
  auto spec = dom.makeSpectrum(8);
  const DiagonalVector e1 = DiagonalVector::basisVector(spec, 1);

  // u = phi_1: at x = L/2 the value is sqrt(2/L) sin(pi/2) = sqrt(2/L)
  const SignedSum mid = reconstruct(e1, dom, 1.0, 0);
  CHECK(mid.value.toReal() == doctest::Approx(std::sqrt(1.0)).epsilon(1e-14));

  // second derivative of an eigenfunction: -lambda_1 times the function
  const double x = 0.7;
  const double v0 = reconstruct(e1, dom, x, 0).value.toReal();
  const double v2 = reconstruct(e1, dom, x, 2).value.toReal();
  CHECK(v2 == doctest::Approx(-spec->lambda(1) * v0).epsilon(1e-13));
}

TEST_CASE("reconstruct: d^2/dx^2 u = -A u pointwise") {
  const WaveDomain dom = WaveDomain::interval(kPi);
  auto spec = dom.makeSpectrum(64);
  const CounterRng rng(6);
  std::vector<double> vals(64);
  for (std::size_t i = 0; i < 64; ++i) vals[i] = rng.symmetric(i) * std::pow(i + 1.0, -2.0);
  const DiagonalVector u = DiagonalVector::fromReals(spec, vals);
  const DiagonalVector au = u.applyPower(1.0);
  for (double x : {0.7, 1.3, 2.2}) {
    const double left = reconstruct(u, dom, x, 2).value.toReal();
    const double right = -reconstruct(au, dom, x, 0).value.toReal();
    CHECK(left == doctest::Approx(right).epsilon(1e-10));
  }
}

TEST_CASE("reconstruct: even-order triangle inequality bound") {
  const WaveDomain dom = WaveDomain::interval(kPi);
  auto spec = dom.makeSpectrum(32);
  const CounterRng rng(14);
  std::vector<double> vals(32);
  for (std::size_t i = 0; i < 32; ++i) vals[i] = rng.symmetric(i) * std::pow(i + 1.0, -1.5);
  const DiagonalVector u = DiagonalVector::fromReals(spec, vals);
  for (int q : {1, 2, 3}) {
    double bound = 0.0;
    for (std::size_t n = 1; n <= 32; ++n)
      bound += std::pow(spec->lambda(n), q) * std::abs(u[n - 1].toReal()) * std::sqrt(2.0 / kPi);
    for (double x : {1.0, 1.9}) {
      const double val = std::abs(reconstruct(u, dom, x, 2 * q).value.toReal());
      CHECK(val <= bound * (1 + 1e-12));
    }
  }
}

TEST_CASE("three-to-one embedding: index map and eigenvalues") {
  auto spec3 = Spectrum::dirichlet1d(3.0 * kPi, 9);
  DiagonalVector u3(spec3);
  u3[2] = LogReal::one();  // mode k = 3
  const DiagonalVector u1 = threeToOneEmbedding(u3);
  CHECK(u1.size() == 3);
  CHECK(u1.spectrum()->lambda(1) == doctest::Approx(1.0));
  CHECK(u1[0].toReal() == doctest::Approx(1.0));
  CHECK(u1[1].isZero());

  // support violation
  DiagonalVector bad(spec3);
  bad[1] = LogReal::one();  // mode k = 2
  CHECK_THROWS_AS(threeToOneEmbedding(bad), SupportError);

  // power norms are identical (coefficients are copied and eigenvalues match)
  auto spec3b = Spectrum::dirichlet1d(3.0 * kPi, 60);
  DiagonalVector w(spec3b);
  const CounterRng rng(2);
  for (std::size_t m = 1; m <= 20; ++m)
    w[3 * m - 1] = LogReal::fromReal(rng.symmetric(m) * std::pow(m, -2.0));
  const DiagonalVector w1 = threeToOneEmbedding(w);
  for (double k : {0.0, 1.0, 3.5}) {
    CHECK(powerNorm(w1, k).logmag == doctest::Approx(powerNorm(w, k).logmag).epsilon(1e-13));
  }

  // pointwise values on the common window differ by exactly sqrt(3): the
  // (0, 3 pi) eigenfunctions carry sqrt(2/(3 pi)) instead of sqrt(2/pi)
  const WaveDomain dom3 = WaveDomain::interval(3.0 * kPi);
  const WaveDomain dom1 = WaveDomain::interval(kPi);
  for (double x : {0.9, 1.7, 2.8}) {
    const double v3 = reconstruct(w, dom3, x, 0).value.toReal();
    const double v1 = reconstruct(w1, dom1, x, 0).value.toReal();
    CHECK(v3 == doctest::Approx(v1 / std::sqrt(3.0)).epsilon(1e-12));
  }
}

TEST_CASE("spatial fit: single eigenfunction degenerates to order ~ 0") {
  const WaveDomain dom = WaveDomain::interval(kPi);
  auto spec = dom.makeSpectrum(1200);
  const DiagonalVector e5 = DiagonalVector::basisVector(spec, 5);
  std::vector<int> ps;
  for (int p = 2; p <= 40; p += 2) ps.push_back(p);
  const GevreyFit fit = spatialGevreyFit(e5, dom, DampingConfig(0.5, 1.0), 1.0, ps, 129);
  CHECK(std::abs(fit.sigmaHat) < 0.05);
  CHECK(fit.logRHat == doctest::Approx(std::log(5.0)).epsilon(0.1));
}

TEST_CASE("spatial fit tail guard raises TruncationError") {
  const WaveDomain dom = WaveDomain::interval(kPi);
  auto spec = dom.makeSpectrum(16);
  const DiagonalVector e1 = DiagonalVector::basisVector(spec, 1);
  std::vector<int> ps;
  for (int p = 2; p <= 60; p += 2) ps.push_back(p);
  CHECK_THROWS_AS(spatialGevreyFit(e1, dom, DampingConfig(0.5, 1.0), 1.0, ps, 65),
                  TruncationError);
}

TEST_CASE("embedded and original data give the same fitted spatial order") {
  // The interior statement lives on the subinterval (0, pi): measure both the
  // (0, 3 pi) solution and its embedding over the same window there. The
  // remaining gap is the sqrt(3) amplitude offset entering the fit as d/p.
  const double t = 16.0;
  const std::size_t mMax = 120;
  auto spec3 = Spectrum::dirichlet1d(3.0 * kPi, 3 * mMax);
  const DiagonalVector u3 = thm41WaveData(spec3, 1.5, mMax, t);
  const DiagonalVector u1 = threeToOneEmbedding(u3);

  std::vector<int> ps;
  for (int p = 20; p <= 60; p += 2) ps.push_back(p);
  const DampingConfig damping(0.75, 1.0);
  const WaveDomain dom3 = WaveDomain::interval(3.0 * kPi, 0.2 * kPi, 0.8 * kPi);
  const WaveDomain dom1 = WaveDomain::interval(kPi);
  const GevreyFit f3 = spatialGevreyFit(u3, dom3, damping, t, ps, 257);
  const GevreyFit f1 = spatialGevreyFit(u1, dom1, damping, t, ps, 257);
  CHECK(std::abs(f3.sigmaHat - f1.sigmaHat) <= 0.05);
}

TEST_CASE("spatial order tracks half the operator order on matched windows") {
  // same embedded data: operator powers k and spatial orders p = 2k probe the
  // same scale, so s_hat should sit near sigma_hat / 2
  const double t = 16.0;
  const std::size_t mMax = 1300;
  auto spec3 = Spectrum::dirichlet1d(3.0 * kPi, 3 * mMax);
  const DiagonalVector u1 = threeToOneEmbedding(thm41WaveData(spec3, 1.5, mMax, t));

  std::vector<int> ps;
  for (int p = 40; p <= 200; p += 2) ps.push_back(p);
  const DampingConfig damping(0.75, 1.0);
  const GevreyFit spatial =
      spatialGevreyFit(u1, WaveDomain::interval(kPi), damping, t, ps, 257);

  std::vector<double> ks;
  for (int k = 20; k <= 100; ++k) ks.push_back(k);
  const PowerNormCurve curve = powerNormCurve(u1, ks, t);
  const GevreyFit op = fitGevreyOrder(curve, 20, 100);
  CHECK(std::abs(spatial.sigmaHat - ellipticOrderMap(op.sigmaHat, 2)) <= 0.15);
}
