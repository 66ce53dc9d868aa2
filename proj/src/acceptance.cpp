#include "gevlab/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gevlab/appendix.hpp"
#include "gevlab/config.hpp"
#include "gevlab/gevrey.hpp"
#include "gevlab/io.hpp"
#include "gevlab/modal.hpp"
#include "gevlab/norms.hpp"
#include "gevlab/parallel.hpp"
#include "gevlab/reference_ode.hpp"
#include "gevlab/rng.hpp"
#include "gevlab/verification.hpp"
#include "gevlab/wave1d.hpp"

namespace gevlab {

namespace {

double elapsedSeconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> integerGrid(double lo, double hi, double step = 1.0) {
  std::vector<double> ks;
  for (double k = lo; k <= hi + 1e-9; k += step) ks.push_back(k);
  return ks;
}

std::string fmt(double v, int prec = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
  return buf;
}

void maybeWriteCurve(const AcceptanceOptions& opt, const std::string& name,
                     const PowerNormCurve& curve) {
  if (!opt.outDir) return;
  CsvWriter csv(*opt.outDir / name, "config_hash=" + opt.configHash + " version=" +
                                        std::string(kToolVersion),
                {"k", "logM"});
  for (const CurveSample& s : curve.entries) csv.rowDoubles({s.k, s.logM});
}

// Pinned experiment configurations. Window [20, 200] matches the acceptance
// window everywhere; evaluation times for the counterexample order fits are
// chosen where the finite-window fit bias of the k log k regression is small
// (see README on finite-k bias).
struct PinchConfig {
  double alpha;
  double bigK;
  std::size_t n0;
  double tUpper;   // evaluation time for the order fit
  double tLower;   // evaluation time for the lower-bound fit
  double theta;    // integration upper limit (oscillatory)
};

constexpr PinchConfig kPinchOverdamped{0.75, 1.26, 5, 14.0, 1.0, 0.0};
constexpr PinchConfig kPinchOscillatory{0.25, 1.50, 1, 64.0, 1.0, 2.0};

State evolvedCounterexample(const CounterexampleSpec& spec, double t) {
  return evolve(buildCounterexample(spec), spec.damping, t);
}

CounterexampleSpec pinchSpec(const PinchConfig& pc, std::size_t modes,
                             CounterexampleSpec::Variant variant) {
  CounterexampleSpec spec;
  spec.variant = variant;
  spec.bigK = pc.bigK;
  spec.n0 = pc.n0;
  spec.spectrum = Spectrum::powerLaw(1.0, 2.0, modes);
  spec.damping = DampingConfig(pc.alpha, 1.0);
  return spec;
}

}  // namespace

CriterionResult runCriterionModalOracle(const AcceptanceOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult res{1, "modal solver vs RK4 oracle", false, "", {}};
  const CounterRng rng = CounterRng(opt.seed).stream(1);
  double worst = 0.0;
  constexpr int kTrials = 100;
  for (int i = 0; i < kTrials; ++i) {
    const std::uint64_t base = static_cast<std::uint64_t>(i) * 8;
    const double lambda = std::pow(10.0, rng.uniform(base + 0, -2.0, 4.0));
    const double alpha = rng.uniform(base + 1, 0.005, 0.995);
    const double c = rng.uniform(base + 2, 0.1, 4.0);
    const double u0 = rng.symmetric(base + 3);
    const double u1 = rng.symmetric(base + 4);
    const DampingConfig damping(alpha, c);
    const auto [lu, lv] = solveMode(lambda, damping, u0, u1, 1.0);
    const auto [ru, rv] = referenceRk4Mode(lambda, damping, u0, u1, 1.0);
    const double ue = lu.toReal(), ve = lv.toReal();
    const double den = std::max({std::abs(ue), std::abs(ve), std::abs(ru), std::abs(rv), 1e-280});
    worst = std::max(worst, std::max(std::abs(ue - ru), std::abs(ve - rv)) / den);
  }
  const double secs = elapsedSeconds(t0);
  res.pass = worst < 1e-8 && secs < 10.0;
  res.detail = "max rel err " + fmt(worst, 3) + " (tol 1e-8), " + fmt(secs, 3) + " s (budget 10 s)";
  res.metrics = {{"max_rel_err", worst}, {"seconds", secs}, {"trials", kTrials}};
  return res;
}

CriterionResult runCriterionUpperBound(const AcceptanceOptions& opt) {
  CriterionResult res{2, "smoothing-order upper bound", true, "", nlohmann::json::array()};
  const auto ks = integerGrid(20, 200);
  for (double alpha : {0.25, 0.5, 0.75}) {
    const auto t0 = std::chrono::steady_clock::now();
    const double sigma = gevreyOrderTheory(alpha);
    const DampingConfig damping(alpha, 1.0);
    SpectrumPtr spec = Spectrum::powerLaw(1.0, 2.0, 2048);
    const CounterRng rng = CounterRng(opt.seed).stream(2);
    const State st0 = randomVxHState(spec, rng.bits(static_cast<std::uint64_t>(alpha * 100)), 2.0, 2.0);
    const State st = evolve(st0, damping, 1.0);
    const PowerNormCurve curve = powerNormCurve(st.u, ks, 1.0, 1.0, opt.threads);
    const GevreyFit fit = fitGevreyOrder(curve, 20, 200);
    const MembershipResult memb = checkMembership(curve, sigma);
    const double secs = elapsedSeconds(t0);
    const bool ok = fit.sigmaHat <= sigma + 0.15 && memb.isConsistent && secs < 60.0;
    res.pass = res.pass && ok;
    res.detail += (res.detail.empty() ? "" : "; ") + ("alpha=" + fmt(alpha, 3) + ": sigmaHat=" +
                  fmt(fit.sigmaHat) + " <= " + fmt(sigma + 0.15) + ", consistent=" +
                  (memb.isConsistent ? "yes" : "NO"));
    res.metrics.push_back({{"alpha", alpha},
                           {"sigma", sigma},
                           {"sigma_hat", fit.sigmaHat},
                           {"consistent", memb.isConsistent},
                           {"trend_slope", memb.trendSlope},
                           {"seconds", secs}});
    if (opt.outDir) maybeWriteCurve(opt, "c2_curve_alpha" + fmt(alpha, 2) + ".csv", curve);
  }
  return res;
}

CriterionResult runCriterionOptimalityPinch(const AcceptanceOptions& opt) {
  CriterionResult res{3, "optimality pinch (lower + upper exponents)", true, "", {}};
  const auto ks = integerGrid(20, 200);

  // Overdamped construction: direct lower bound at t = 1, order fit at tUpper.
  {
    const PinchConfig& pc = kPinchOverdamped;
    const double theory = 1.0 / (1.0 - pc.alpha);
    const std::size_t modesBound = 40200;  // contains the selected mode at k = 200
    const CounterexampleSpec specBound =
        pinchSpec(pc, modesBound, CounterexampleSpec::Variant::Overdamped);
    const LowerBoundResult lb = lowerBoundCheck(specBound, pc.tLower, 0.0, ks);
    const bool lbOk = std::abs(lb.fittedExponent - theory) <= 0.05 * theory && lb.dominated;

    const std::size_t modesUpper =
        std::max<std::size_t>(adequateModeCount(1.0, 2.0, pc.alpha, pc.tUpper, 200.0), pc.n0 + 8);
    const CounterexampleSpec specUpper =
        pinchSpec(pc, modesUpper, CounterexampleSpec::Variant::Overdamped);
    const State st = evolvedCounterexample(specUpper, pc.tUpper);
    const PowerNormCurve curve = powerNormCurve(st.u, ks, pc.tUpper, 1.0, opt.threads);
    const GevreyFit fit = fitGevreyOrder(curve, 20, 200);
    const double sigma = gevreyOrderTheory(pc.alpha);
    const bool upOk = fit.sigmaHat >= sigma - 0.15 && fit.sigmaHat <= sigma + 0.15;

    res.pass = res.pass && lbOk && upOk;
    res.detail += "overdamped: lower E=" + fmt(lb.fittedExponent) + " (theory " + fmt(theory) +
                  " +-5%), sigmaHat=" + fmt(fit.sigmaHat) + " in [" + fmt(sigma - 0.15) + ", " +
                  fmt(sigma + 0.15) + "]";
    res.metrics["overdamped"] = {{"lower_exponent", lb.fittedExponent},
                                 {"lower_theory", theory},
                                 {"dominated", lb.dominated},
                                 {"sigma_hat", fit.sigmaHat},
                                 {"sigma", sigma},
                                 {"t_upper", pc.tUpper},
                                 {"modes_upper", modesUpper}};
    if (opt.outDir) {
      maybeWriteCurve(opt, "c3_overdamped_curve.csv", curve);
      CsvWriter csv(*opt.outDir / "c3_overdamped_bound.csv",
                    "config_hash=" + opt.configHash + " version=" + std::string(kToolVersion),
                    {"k", "log_bound"});
      for (const auto& [k, lB] : lb.boundCurve) csv.rowDoubles({k, lB});
    }
  }

  // Oscillatory construction: integrated lower bound over [1, 2], order fit at tUpper.
  {
    const PinchConfig& pc = kPinchOscillatory;
    const double theory = 2.0 / pc.alpha;
    const std::size_t modesBound = 40200;
    const CounterexampleSpec specBound =
        pinchSpec(pc, modesBound, CounterexampleSpec::Variant::Oscillatory);
    const LowerBoundResult lb = lowerBoundCheck(specBound, pc.tLower, pc.theta, ks);
    const bool lbOk = std::abs(lb.fittedExponent - theory) <= 0.05 * theory && lb.dominated;

    const double peak = peakLambdaOscillatory(pc.alpha, 1.0, pc.tUpper, 200.0);
    const std::size_t modesUpper =
        static_cast<std::size_t>(std::ceil(std::sqrt(4.0 * peak))) + 16;
    const CounterexampleSpec specUpper =
        pinchSpec(pc, modesUpper, CounterexampleSpec::Variant::Oscillatory);
    const State st = evolvedCounterexample(specUpper, pc.tUpper);
    const PowerNormCurve curve = powerNormCurve(st.u, ks, pc.tUpper, 1.0, opt.threads);
    const GevreyFit fit = fitGevreyOrder(curve, 20, 200);
    const double sigma = gevreyOrderTheory(pc.alpha);
    const bool upOk = fit.sigmaHat >= sigma - 0.15 && fit.sigmaHat <= sigma + 0.15;

    res.pass = res.pass && lbOk && upOk;
    res.detail += "; oscillatory: lower E=" + fmt(lb.fittedExponent) + " (theory " + fmt(theory) +
                  " +-5%), sigmaHat=" + fmt(fit.sigmaHat) + " in [" + fmt(sigma - 0.15) + ", " +
                  fmt(sigma + 0.15) + "]";
    res.metrics["oscillatory"] = {{"lower_exponent", lb.fittedExponent},
                                  {"lower_theory", theory},
                                  {"dominated", lb.dominated},
                                  {"sigma_hat", fit.sigmaHat},
                                  {"sigma", sigma},
                                  {"t_upper", pc.tUpper},
                                  {"modes_upper", modesUpper}};
    if (opt.outDir) {
      maybeWriteCurve(opt, "c3_oscillatory_curve.csv", curve);
      CsvWriter csv(*opt.outDir / "c3_oscillatory_bound.csv",
                    "config_hash=" + opt.configHash + " version=" + std::string(kToolVersion),
                    {"k", "log_bound"});
      for (const auto& [k, lB] : lb.boundCurve) csv.rowDoubles({k, lB});
    }
  }
  return res;
}

CriterionResult runCriterionEnergyIdentity(const AcceptanceOptions& opt) {
  CriterionResult res{4, "energy identity, Phi sandwich, integral inequality", true, "", {}};
  const std::vector<double> tGrid{0.25, 0.5, 1.0, 1.5, 2.0};
  double worst = 0.0;
  bool sandwich = true;
  const CounterRng rng = CounterRng(opt.seed).stream(4);
  int cfgIndex = 0;
  for (double alpha : {0.25, 0.5, 0.75}) {
    for (double c : {0.5, 1.0, 2.0}) {
      for (std::size_t modes : {std::size_t{20}, std::size_t{200}}) {
        SpectrumPtr spec = Spectrum::powerLaw(1.0, 2.0, modes);
        const State st0 =
            randomVxHState(spec, rng.bits(static_cast<std::uint64_t>(cfgIndex++)), 2.0, 2.0);
        const EnergyReport rep =
            energyIdentityCheck(st0, DampingConfig(alpha, c), tGrid, 1e-4);
        worst = std::max(worst, rep.maxRelViolation);
        sandwich = sandwich && rep.sandwichHolds;
      }
    }
  }
  const bool identityOk = worst < 1e-5 && sandwich;

  int holdCount = 0;
  constexpr int kTrials = 100;
  const std::array<double, 3> alphas{0.3, 0.5, 0.8};
  for (int i = 0; i < kTrials; ++i) {
    const double alpha = alphas[static_cast<std::size_t>(i) % 3];
    const std::uint64_t base = 1000 + static_cast<std::uint64_t>(i) * 4;
    const double c = rng.uniform(base, 0.3, 2.5);
    SpectrumPtr spec = Spectrum::powerLaw(1.0, 2.0, 200);
    const State st0 = randomVxHState(spec, rng.bits(base + 1), 2.0, 2.0);
    const IntegralInequalityResult ir = integralInequalityCheck(st0, DampingConfig(alpha, c), 1.0);
    if (ir.holds) ++holdCount;
  }
  const bool integralOk = holdCount == kTrials;

  res.pass = identityOk && integralOk;
  res.detail = "max rel violation " + fmt(worst, 3) + " (tol 1e-5), sandwich " +
               (sandwich ? "holds" : "VIOLATED") + ", integral inequality " +
               std::to_string(holdCount) + "/" + std::to_string(kTrials);
  res.metrics = {{"max_rel_violation", worst},
                 {"sandwich_holds", sandwich},
                 {"integral_trials_held", holdCount},
                 {"integral_trials", kTrials}};
  return res;
}

CriterionResult runCriterionNonCoerciveGrowth(const AcceptanceOptions& opt) {
  CriterionResult res{5, "non-coercive e^t energy growth", true, "", {}};
  const CounterRng rng = CounterRng(opt.seed).stream(5);
  std::vector<double> tGrid;
  for (int i = 0; i <= 25; ++i) tGrid.push_back(5.0 * i / 25.0);
  double worstRatio = 0.0;
  constexpr int kTrials = 100;
  bool allHold = true;
  for (int i = 0; i < kTrials; ++i) {
    const std::uint64_t base = static_cast<std::uint64_t>(i) * 64;
    std::vector<double> lams{1e-4};
    for (int m = 0; m < 9; ++m) lams.push_back(std::pow(10.0, rng.uniform(base + m, -4.0, 2.0)));
    SpectrumPtr spec = Spectrum::fromValues(lams);
    const double alpha = rng.uniform(base + 16, 0.05, 0.95);
    const double c = rng.uniform(base + 17, 0.1, 4.0);
    std::vector<double> u0(10), u1(10);
    for (int m = 0; m < 10; ++m) {
      u0[static_cast<std::size_t>(m)] = rng.symmetric(base + 20 + static_cast<std::uint64_t>(m));
      u1[static_cast<std::size_t>(m)] = rng.symmetric(base + 40 + static_cast<std::uint64_t>(m));
    }
    const State st0{DiagonalVector::fromReals(spec, u0), DiagonalVector::fromReals(spec, u1)};
    const EnormGrowthResult gr = enormGrowthCheck(st0, DampingConfig(alpha, c), tGrid);
    allHold = allHold && gr.holds;
    worstRatio = std::max(worstRatio, gr.maxRatio);
  }
  res.pass = allHold;
  res.detail = "max |U(t)|_E^2 / (e^t |U(0)|_E^2) = " + fmt(worstRatio, 8) + " over 100 trials";
  res.metrics = {{"max_ratio", worstRatio}, {"trials", kTrials}, {"all_hold", allHold}};
  return res;
}

CriterionResult runCriterionWaveAnalyticity(const AcceptanceOptions& opt) {
  CriterionResult res{6, "wave interior regularity (analytic at 1/2, Gevrey-2 at 3/4)", true, "", {}};

  // alpha = 1/2 on (0, pi): generic data is analytic in space at t = 1.
  {
    const WaveDomain dom = WaveDomain::interval(std::numbers::pi);
    SpectrumPtr spec = dom.makeSpectrum(900);
    const CounterRng rng = CounterRng(opt.seed).stream(6);
    const State st0 = randomVxHState(spec, rng.bits(0), 2.0, 2.0);
    const DampingConfig damping(0.5, 1.0);
    const State st = evolve(st0, damping, 1.0);
    std::vector<int> ps;
    for (int p = 40; p <= 400; p += 4) ps.push_back(p);
    const GevreyFit fit = spatialGevreyFit(st.u, dom, damping, 1.0, ps, 257, opt.threads);
    const bool ok = fit.sigmaHat <= 1.1;
    res.pass = res.pass && ok;
    res.detail += "alpha=1/2: s_hat=" + fmt(fit.sigmaHat) + " (<= 1.1)";
    res.metrics["analytic_half"] = {{"s_hat", fit.sigmaHat}, {"p_max", 400}};
  }

  // alpha = 3/4, three-to-one construction: exact interior order 2 on (0, pi).
  {
    const double tEval = 16.0;
    const double bigK = 1.5;
    const std::size_t mCount = 470;  // tail-adequate for p <= 120 at t = 16
    SpectrumPtr spec3 = Spectrum::dirichlet1d(3.0 * std::numbers::pi, 3 * mCount);
    const DampingConfig damping(0.75, 1.0);
    // Initial data on (0, 3pi) spanned by sin(3m x/3) modes only, with the
    // slow-decay amplitudes; modes start at the overdamped threshold.
    State st3{DiagonalVector(spec3), DiagonalVector(spec3)};
    for (std::size_t m = 5; m <= mCount; ++m) {
      const std::size_t k = 3 * m;
      const double lam = spec3->lambda(k);
      const double b = damping.symbol(lam);
      const double mu = lam / (b / 2.0 + std::sqrt(b * b / 4.0 - lam));
      const LogReal cn(1, -bigK * std::log(lam));
      st3.u[k - 1] = cn;
      st3.v[k - 1] = LogReal(-1, cn.logmag + std::log(mu));
    }
    const State evolved3 = evolve(st3, damping, tEval);
    const DiagonalVector embedded = threeToOneEmbedding(evolved3.u);
    const WaveDomain dom = WaveDomain::interval(std::numbers::pi);
    std::vector<int> ps;
    for (int p = 20; p <= 120; p += 2) ps.push_back(p);
    const GevreyFit fit = spatialGevreyFit(embedded, dom, damping, tEval, ps, 257, opt.threads);
    const bool ok = fit.sigmaHat >= 1.85 && fit.sigmaHat <= 2.15;
    res.pass = res.pass && ok;
    res.detail += "; alpha=3/4 embedded: s_hat=" + fmt(fit.sigmaHat) + " (2 +- 0.15)";
    res.metrics["embedded_three_to_one"] = {{"s_hat", fit.sigmaHat}, {"t", tEval}, {"modes", mCount}};
  }
  return res;
}

CriterionResult runCriterionAppendix(const AcceptanceOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult res{7, "appendix inequality sweeps", false, "", {}};

  bool chainOk = true;
  std::uint64_t tuples = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 4; ++n) {
    const ChainCheckResult r = multiIndexChainCheck(n, 16);
    chainOk = chainOk && r.allHold;
    tuples += r.tuplesChecked;
    worst = std::max(worst, r.worstRatio);
  }
  const double chainSecs = elapsedSeconds(t0);

  const bool stepOk = twoComponentStepCheck(500);

  std::vector<double> betas, hs;
  for (int i = 0; i <= 100; ++i) betas.push_back(i / 100.0);
  for (int i = 0; i < 9901; ++i)
    hs.push_back(std::pow(10.0, -8.0 + 18.0 * i / 9900.0));
  const bool scalarOk = scalarPowerInequalityCheck(betas, hs);

  const CounterRng rng = CounterRng(opt.seed).stream(7);
  bool diagOk = true;
  constexpr int kTrials = 10000;
  for (int i = 0; i < kTrials && diagOk; ++i) {
    const std::uint64_t base = static_cast<std::uint64_t>(i) * 32;
    const std::size_t modes = 2 + rng.bits(base) % 7;
    std::vector<double> lams, vals;
    for (std::size_t m = 0; m < modes; ++m) {
      lams.push_back(std::pow(10.0, rng.uniform(base + 1 + m, -3.0, 3.0)));
      vals.push_back(rng.symmetric(base + 16 + m));
    }
    SpectrumPtr spec = Spectrum::fromValues(lams);
    std::sort(vals.begin(), vals.end());  // pairing irrelevant, keep deterministic
    const DiagonalVector v = DiagonalVector::fromReals(spec, vals);
    const double beta = rng.uniform(base + 30, 0.0, 1.0);
    diagOk = diagOk && diagonalOperatorInequalityCheck(v, beta);
  }

  res.pass = chainOk && stepOk && scalarOk && diagOk && chainSecs < 5.0;
  res.detail = "chain " + std::to_string(tuples) + " tuples worst log-gap " + fmt(worst, 3) +
               " in " + fmt(chainSecs, 3) + " s; two-component " + (stepOk ? "ok" : "FAIL") +
               "; scalar sweep " + (scalarOk ? "ok" : "FAIL") + "; diagonal trials " +
               (diagOk ? "ok" : "FAIL");
  res.metrics = {{"chain_tuples", tuples},
                 {"chain_worst_log_gap", worst},
                 {"chain_seconds", chainSecs},
                 {"two_component_ok", stepOk},
                 {"scalar_ok", scalarOk},
                 {"diagonal_ok", diagOk}};
  return res;
}

CriterionResult runCriterionPowerRescaling(const AcceptanceOptions& opt) {
  CriterionResult res{8, "order halves on the square-root power grid", false, "", {}};
  const PinchConfig& pc = kPinchOverdamped;
  const std::size_t modes =
      std::max<std::size_t>(adequateModeCount(1.0, 2.0, pc.alpha, pc.tUpper, 200.0), pc.n0 + 8);
  const CounterexampleSpec spec = pinchSpec(pc, modes, CounterexampleSpec::Variant::Overdamped);
  const State st = evolvedCounterexample(spec, pc.tUpper);

  const PowerNormCurve curve = powerNormCurve(st.u, integerGrid(20, 200), pc.tUpper, 1.0, opt.threads);
  const GevreyFit fit = fitGevreyOrder(curve, 20, 200);

  // Same vector viewed through A^{1/2}: j-th power of the new operator is the
  // j/2-th power of A.
  const PowerNormCurve halfCurve =
      powerNormCurve(st.u, integerGrid(40, 400), pc.tUpper, 0.5, opt.threads);
  const GevreyFit halfFit = fitGevreyOrder(halfCurve, 40, 400);
  const GevreyFit predicted = rescaleOrderUnderPower(fit, 0.5);

  const double err = std::abs(halfFit.sigmaHat - fit.sigmaHat / 2.0);
  const double errPredicted = std::abs(halfFit.sigmaHat - predicted.sigmaHat);
  res.pass = err <= 0.1 && errPredicted <= 0.1;
  res.detail = "sigmaHat=" + fmt(fit.sigmaHat) + ", half-grid refit=" + fmt(halfFit.sigmaHat) +
               ", |refit - sigmaHat/2| = " + fmt(err, 3) + " (tol 0.1)";
  res.metrics = {{"sigma_hat", fit.sigmaHat},
                 {"half_grid_sigma_hat", halfFit.sigmaHat},
                 {"halving_error", err}};
  return res;
}

std::vector<CriterionResult> runAllCriteria(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;
  out.push_back(runCriterionModalOracle(opt));
  out.push_back(runCriterionUpperBound(opt));
  out.push_back(runCriterionOptimalityPinch(opt));
  out.push_back(runCriterionEnergyIdentity(opt));
  out.push_back(runCriterionNonCoerciveGrowth(opt));
  out.push_back(runCriterionWaveAnalyticity(opt));
  out.push_back(runCriterionAppendix(opt));
  out.push_back(runCriterionPowerRescaling(opt));
  return out;
}

}  // namespace gevlab
