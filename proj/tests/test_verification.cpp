#include <doctest.h>

#include <cmath>

#include "gevlab/config.hpp"
#include "gevlab/quadrature.hpp"
#include "gevlab/rng.hpp"
#include "gevlab/verification.hpp"
#include "oracles.hpp"

using namespace gevlab;

namespace {

State randomState(SpectrumPtr spec, std::uint64_t seed, double q = 2.0) {
  return randomVxHState(std::move(spec), seed, q, q);
}

CounterexampleSpec overdampedSpec(std::size_t modes, double bigK = 1.5, std::size_t n0 = 5) {
  CounterexampleSpec spec;
  spec.variant = CounterexampleSpec::Variant::Overdamped;
  spec.bigK = bigK;
  spec.n0 = n0;
  spec.spectrum = Spectrum::powerLaw(1.0, 2.0, modes);
  spec.damping = DampingConfig(0.75, 1.0);
  return spec;
}

CounterexampleSpec oscillatorySpec(std::size_t modes, double bigK = 1.5) {
  CounterexampleSpec spec;
  spec.variant = CounterexampleSpec::Variant::Oscillatory;
  spec.bigK = bigK;
  spec.n0 = 1;
  spec.spectrum = Spectrum::powerLaw(1.0, 2.0, modes);
  spec.damping = DampingConfig(0.25, 1.0);
  return spec;
}

}  // namespace

TEST_CASE("adaptive Simpson on smooth and stiff integrands") {
  const double smooth = adaptiveSimpson([](double x) { return std::sin(x); }, 0.0, 3.0, 1e-12);
  CHECK(smooth == doctest::Approx(1.0 - std::cos(3.0)).epsilon(1e-11));
  const double stiff =
      adaptiveSimpson([](double x) { return std::exp(-2000.0 * x); }, 0.0, 1.0, 1e-14);
  CHECK(stiff == doctest::Approx(1.0 / 2000.0).epsilon(1e-9));
  CHECK_THROWS_AS(
      adaptiveSimpson([](double x) { return x > 0.3141592653 ? 1.0 : 0.0; }, 0.0, 1.0, 1e-300, 8),
      QuadratureError);
}

TEST_CASE("energy identity: zero data") {
  auto spec = Spectrum::fromValues({1.0, 2.0});
  const State zero{DiagonalVector(spec), DiagonalVector(spec)};
  const std::vector<double> grid{0.5, 1.0};
  const EnergyReport rep = energyIdentityCheck(zero, DampingConfig(0.5, 1.0), grid, 1e-4);
  for (double p : rep.phi) CHECK(p == 0.0);
  for (double r : rep.rhs) CHECK(r == 0.0);
  CHECK(rep.maxRelViolation == 0.0);
  CHECK(rep.sandwichHolds);
}

TEST_CASE("energy identity: single mode at lambda = 1, alpha = 1/2, c = 1") {
  auto spec = Spectrum::fromValues({1.0});
  const DampingConfig damping(0.5, 1.0);
  const State st{DiagonalVector::fromReals(spec, std::vector<double>{1.0}),
                 DiagonalVector::fromReals(spec, std::vector<double>{0.5})};
  const std::vector<double> grid{0.25, 0.5, 1.0, 2.0};
  const EnergyReport rep = energyIdentityCheck(st, damping, grid, 1e-4);
  CHECK(rep.maxRelViolation < 1e-6);
  CHECK(rep.sandwichHolds);

  // cross-check the central differences against the chain-rule derivative of
  // Phi evaluated on the closed-form trajectory
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const State at = evolve(st, damping, grid[i]);
    const double oracle = test::singleModePhiDerivative(1.0, damping.symbol(1.0),
                                                        at.u[0].toReal(), at.v[0].toReal());
    CHECK(rep.dPhiFd[i] == doctest::Approx(oracle).epsilon(1e-6));
    CHECK(rep.rhs[i] == doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("energy identity: 100-mode power law, alpha = 0.7") {
  auto spec = Spectrum::powerLaw(1.0, 2.0, 100);
  const State st = randomState(spec, 321);
  const std::vector<double> grid{0.25, 0.5, 1.0, 1.5, 2.0};
  const EnergyReport rep = energyIdentityCheck(st, DampingConfig(0.7, 1.0), grid, 1e-4);
  CHECK(rep.maxRelViolation < 1e-5);
  CHECK(rep.sandwichHolds);
}

TEST_CASE("energy identity validates the step against the grid") {
  auto spec = Spectrum::fromValues({1.0});
  const State st{DiagonalVector::basisVector(spec, 1), DiagonalVector(spec)};
  CHECK_THROWS_AS(energyIdentityCheck(st, DampingConfig(0.5, 1.0), std::vector<double>{0.1, 0.2}, 0.05),
                  DomainError);
}

TEST_CASE("integral inequality: zero data, closed-form single mode, random sweep") {
  auto spec1 = Spectrum::fromValues({25.0});
  const DampingConfig damping(0.75, 1.0);

  const State zero{DiagonalVector(spec1), DiagonalVector(spec1)};
  const IntegralInequalityResult z = integralInequalityCheck(zero, damping, 1.0);
  CHECK(z.lhs == 0.0);
  CHECK(z.rhs == 0.0);
  CHECK(z.holds);

  // pure slow-mode data: u = e^{-mu s}, so the integrand is
  // (b mu^2 + lambda b) e^{-2 mu s} with an elementary antiderivative
  const double lam = 25.0;
  const double b = std::pow(lam, 0.75);
  const double mu = lam / (b / 2.0 + std::sqrt(b * b / 4.0 - lam));
  const State st{DiagonalVector::fromReals(spec1, std::vector<double>{1.0}),
                 DiagonalVector::fromReals(spec1, std::vector<double>{-mu})};
  const IntegralInequalityResult r = integralInequalityCheck(st, damping, 1.0);
  const double exact = (b * mu * mu + lam * b) * (1.0 - std::exp(-2.0 * mu)) / (2.0 * mu);
  CHECK(r.lhs == doctest::Approx(exact).epsilon(1e-10));
  CHECK(r.holds);

  const CounterRng rng(17);
  auto spec = Spectrum::powerLaw(1.0, 2.0, 200);
  int held = 0;
  const double alphas[] = {0.3, 0.5, 0.8};
  for (int i = 0; i < 12; ++i) {
    const DampingConfig d(alphas[i % 3], rng.uniform(100 + i, 0.3, 2.5));
    const State s0 = randomState(spec, rng.bits(200 + i));
    if (integralInequalityCheck(s0, d, 1.0).holds) ++held;
  }
  CHECK(held == 12);
}

TEST_CASE("smoothing estimate: single eigenvector gives a finite K'") {
  auto spec = Spectrum::fromValues({9.0});
  const State st{DiagonalVector::basisVector(spec, 1), DiagonalVector(spec)};
  const std::vector<int> ms{1, 2, 3, 4};
  const SmoothingFitResult fit = smoothingEstimateFit(st, DampingConfig(0.4, 1.0), 1.0, ms);
  CHECK(std::isfinite(fit.kPrimeHat));
  CHECK(fit.kPrimeHat > 0.0);
}

TEST_CASE("smoothing estimate: stable under doubling and homogeneous in the data") {
  const CounterexampleSpec spec = overdampedSpec(4000, 1.26);
  const State st = buildCounterexample(spec);
  std::vector<int> m8, m16;
  for (int m = 1; m <= 8; ++m) m8.push_back(m);
  for (int m = 1; m <= 16; ++m) m16.push_back(m);
  const double k8 = smoothingEstimateFit(st, spec.damping, 1.0, m8).kPrimeHat;
  const double k16 = smoothingEstimateFit(st, spec.damping, 1.0, m16).kPrimeHat;
  CHECK(std::abs(k16 - k8) / k8 < 0.10);

  // scaling the data leaves K' unchanged
  State scaled = st;
  for (std::size_t i = 0; i < scaled.u.size(); ++i) {
    if (!scaled.u[i].isZero()) scaled.u[i].logmag += std::log(10.0);
    if (!scaled.v[i].isZero()) scaled.v[i].logmag += std::log(10.0);
  }
  const double kScaled = smoothingEstimateFit(scaled, spec.damping, 1.0, m8).kPrimeHat;
  CHECK(kScaled == doctest::Approx(k8).epsilon(1e-9));
}

TEST_CASE("smoothing estimate requires a coercive spectrum") {
  auto spec = Spectrum::fromValues({0.5, 2.0});
  const State st{DiagonalVector::basisVector(spec, 1), DiagonalVector(spec)};
  const std::vector<int> ms{1, 2, 3, 4, 5};
  CHECK_THROWS_AS(smoothingEstimateFit(st, DampingConfig(0.4, 1.0), 1.0, ms), DomainError);
}

TEST_CASE("e^t growth bound") {
  // coercive data: the E norm cannot grow at all
  auto spec = Spectrum::powerLaw(1.0, 2.0, 40);
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(0.25 * i);
  const CounterRng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const State st = randomState(spec, rng.bits(trial));
    const EnormGrowthResult r =
        enormGrowthCheck(st, DampingConfig(rng.uniform(100 + trial, 0.1, 0.9), 1.0), grid);
    CHECK(r.holds);
  }

  // single tiny eigenvalue
  auto tiny = Spectrum::fromValues({1e-4});
  const State st{DiagonalVector::fromReals(tiny, std::vector<double>{0.3}),
                 DiagonalVector::fromReals(tiny, std::vector<double>{1.0})};
  const EnormGrowthResult r = enormGrowthCheck(st, DampingConfig(0.3, 1.0), grid);
  CHECK(r.holds);

  // zero data
  const State zero{DiagonalVector(tiny), DiagonalVector(tiny)};
  CHECK(enormGrowthCheck(zero, DampingConfig(0.3, 1.0), grid).holds);
}

TEST_CASE("counterexample validation") {
  // minimal overdamped start for lambda_n = n^2, alpha = 3/4, c = 1:
  // lambda^{1/2} > 4 forces lambda > 16, i.e. n0 = 5
  CounterexampleSpec spec = overdampedSpec(64);
  CHECK(spec.minimalStartIndex() == 5);
  CHECK_NOTHROW(spec.validate());

  spec.n0 = 4;
  CHECK_THROWS_AS(spec.validate(), SpecError);
  spec.n0 = 5;

  // K must exceed 1 + 1/(2 eps) = 1.25
  spec.bigK = 1.2;
  CHECK_THROWS_AS(spec.validate(), SpecError);
  spec.bigK = 1.5;

  // wrong alpha side
  spec.damping = DampingConfig(0.4, 1.0);
  CHECK_THROWS_AS(spec.validate(), SpecError);

  // oscillatory start: lambda^{1/2} > 1/4 holds from n = 1
  CounterexampleSpec osc = oscillatorySpec(64);
  CHECK(osc.minimalStartIndex() == 1);
  CHECK_NOTHROW(osc.validate());

  // half variant splits on c, rejects the critical c = 2
  CounterexampleSpec half = overdampedSpec(64);
  half.variant = CounterexampleSpec::Variant::Half;
  half.damping = DampingConfig(0.5, 2.0);
  half.n0 = 1;
  CHECK_THROWS_AS(half.validate(), SpecError);
  half.damping = DampingConfig(0.5, 3.0);
  CHECK_NOTHROW(half.validate());
  half.damping = DampingConfig(0.5, 1.0);
  CHECK_NOTHROW(half.validate());
}

TEST_CASE("counterexample V x H summability") {
  // K = 1.5, eps = 2: sum c_n^2 lambda_n = sum n^{-6} n^2 converges; the
  // series-comparison margins are eps(2K-1)-1 = 3 and eps(2K-2(1-a))-1 = 4
  const CounterexampleSpec spec = overdampedSpec(64);
  const auto [vMargin, hMargin] = spec.summabilityMargins();
  CHECK(vMargin == doctest::Approx(3.0));
  CHECK(hMargin == doctest::Approx(4.0));

  // partial sums behave like a convergent series: doubling the mode count
  // moves the squared E norm by less than the analytic tail bound. Per-mode
  // terms are c_n^2 (1 + lambda_n) + c_n^2 mu_n^2 <= 3 n^{-4} for large n.
  const State a = buildCounterexample(overdampedSpec(2000));
  const State b = buildCounterexample(overdampedSpec(4000));
  const double na = energyNorms(a.u, a.v).enorm.toReal();
  const double nb = energyNorms(b.u, b.v).enorm.toReal();
  const double tail = 3.0 / (3.0 * std::pow(1999.0, 3.0));  // integral bound on 3 sum n^{-4}
  CHECK(nb >= na);
  CHECK(nb * nb - na * na <= tail);
}

TEST_CASE("counterexample evolution is the pure slow branch") {
  const CounterexampleSpec spec = overdampedSpec(64);
  const State st0 = buildCounterexample(spec);
  const State st = evolve(st0, spec.damping, 2.0);
  for (std::size_t n = spec.n0; n <= 64; ++n) {
    const double lam = spec.spectrum->lambda(n);
    const double b = std::pow(lam, 0.75);
    const double mu = lam / (b / 2.0 + std::sqrt(b * b / 4.0 - lam));
    const double expected = -spec.bigK * std::log(lam) - mu * 2.0;
    CHECK(st.u[n - 1].sign == 1);
    CHECK(st.u[n - 1].logmag == doctest::Approx(expected).epsilon(1e-12));
  }

  const CounterexampleSpec osc = oscillatorySpec(64);
  const State o0 = buildCounterexample(osc);
  const State ot = evolve(o0, osc.damping, 1.5);
  for (std::size_t n = 1; n <= 64; ++n) {
    const double lam = osc.spectrum->lambda(n);
    const double b = std::pow(lam, 0.25);
    const double omega = std::sqrt(lam - b * b / 4.0);
    const double amp = std::pow(lam, -osc.bigK) * std::exp(-b / 2.0 * 1.5);
    const double expected = amp * std::cos(omega * 1.5);
    CHECK(ot.u[n - 1].toReal() == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("lower bound: overdamped exponent 1/(1-alpha) = 4") {
  const CounterexampleSpec spec = overdampedSpec(40200);
  std::vector<double> ks;
  for (int k = 20; k <= 200; ++k) ks.push_back(k);
  const LowerBoundResult lb = lowerBoundCheck(spec, 1.0, 0.0, ks);
  CHECK(lb.theoryExponent == doctest::Approx(4.0));
  CHECK(std::abs(lb.fittedExponent - 4.0) <= 0.1);
  CHECK(lb.dominated);
}

TEST_CASE("lower bound: oscillatory integrated exponent 2/alpha = 8") {
  const CounterexampleSpec spec = oscillatorySpec(40200);
  std::vector<double> ks;
  for (int k = 20; k <= 200; ++k) ks.push_back(k);
  const LowerBoundResult lb = lowerBoundCheck(spec, 1.0, 2.0, ks);
  CHECK(lb.theoryExponent == doctest::Approx(8.0));
  CHECK(std::abs(lb.fittedExponent - 8.0) <= 0.2);
  CHECK(lb.dominated);
}

TEST_CASE("lower bound: half variant reaches the 4k exponent on both routes") {
  std::vector<double> ks;
  for (int k = 20; k <= 120; ++k) ks.push_back(k);
  for (double c : {3.0, 1.0}) {
    CounterexampleSpec spec = overdampedSpec(14500);
    spec.variant = CounterexampleSpec::Variant::Half;
    spec.damping = DampingConfig(0.5, c);
    spec.n0 = 1;
    const LowerBoundResult lb = lowerBoundCheck(spec, 1.0, 2.0, ks);
    CHECK(lb.theoryExponent == doctest::Approx(4.0));
    CHECK(std::abs(lb.fittedExponent - 4.0) <= 0.2);
    CHECK(lb.dominated);
  }
}
