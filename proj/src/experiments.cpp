#include "gevlab/experiments.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "gevlab/acceptance.hpp"
#include "gevlab/appendix.hpp"
#include "gevlab/gevrey.hpp"
#include "gevlab/io.hpp"
#include "gevlab/modal.hpp"
#include "gevlab/rng.hpp"
#include "gevlab/verification.hpp"
#include "gevlab/wave1d.hpp"

namespace gevlab {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string metaLine(const ExperimentConfig& cfg, const std::string& command) {
  return "config_hash=" + cfg.hash + " version=" + std::string(kToolVersion) +
         " command=" + command;
}

const SpectrumConfig& requireSpectrum(const ExperimentConfig& cfg) {
  if (!cfg.spectrum) throw ConfigError("spectrum: required for this command");
  return *cfg.spectrum;
}

const DampingConfig& requireDamping(const ExperimentConfig& cfg) {
  if (!cfg.damping) throw ConfigError("damping: required for this command");
  return *cfg.damping;
}

const InitialDataConfig& requireInitialData(const ExperimentConfig& cfg) {
  if (!cfg.initialData) throw ConfigError("initial_data: required for this command");
  return *cfg.initialData;
}

std::vector<double> fitGrid(const FitConfig& f) {
  std::vector<double> ks;
  for (double k = f.kMin; k <= f.kMax + 1e-9; k += f.kStep) ks.push_back(k);
  return ks;
}

void exportVector(const fs::path& path, const std::string& meta, const DiagonalVector& v) {
  CsvWriter csv(path, meta, {"n", "lambda", "sign", "logmag"});
  for (std::size_t i = 0; i < v.size(); ++i)
    csv.row({std::to_string(i + 1), formatDouble(v.spectrum()->lambda(i + 1)),
             std::to_string(v[i].sign), formatDouble(v[i].logmag)});
}

int runSimulate(const ExperimentConfig& cfg, const RunOptions& opt, bool withFit) {
  PowerNormCurve curve;
  const std::string meta = metaLine(cfg, withFit ? "fit" : "simulate");
  if (withFit && !cfg.fit.curveCsv.empty()) {
    curve.t = cfg.t;
    for (const auto& [k, logM] : readPairCsv(cfg.fit.curveCsv))
      curve.entries.push_back(CurveSample{k, logM});
  } else {
    SpectrumPtr spec = requireSpectrum(cfg).build();
    const DampingConfig& damping = requireDamping(cfg);
    const State st0 = buildInitialData(requireInitialData(cfg), spec, damping, opt.seed);
    const State st = evolve(st0, damping, cfg.t);
    const auto ks = fitGrid(cfg.fit);
    curve = powerNormCurve(st.u, ks, cfg.t, 1.0, opt.threads);
    CsvWriter csv(opt.outDir / "curve.csv", meta, {"k", "logM"});
    for (const CurveSample& s : curve.entries) csv.rowDoubles({s.k, s.logM});
    exportVector(opt.outDir / "state_u.csv", meta, st.u);
    exportVector(opt.outDir / "state_v.csv", meta, st.v);
  }

  if (!withFit) return kExitOk;

  const GevreyFit fit = fitGevreyOrder(curve, cfg.fit.kMin, cfg.fit.kMax);
  json body{{"sigma_hat", fit.sigmaHat},
            {"log_r_hat", fit.logRHat},
            {"residual", fit.residual},
            {"window", {fit.kMin, fit.kMax}},
            {"t", cfg.t}};
  int code = kExitOk;
  if (cfg.fit.sigma) {
    const MembershipResult memb = checkMembership(curve, *cfg.fit.sigma);
    body["membership"] = {{"sigma", *cfg.fit.sigma},
                          {"is_consistent", memb.isConsistent},
                          {"log_r_required", memb.logRRequired},
                          {"trend_slope", memb.trendSlope}};
  }
  writeJsonFile(opt.outDir / "fit.json", body, cfg.hash);
  return code;
}

int runEnergy(const ExperimentConfig& cfg, const RunOptions& opt) {
  SpectrumPtr spec = requireSpectrum(cfg).build();
  const DampingConfig& damping = requireDamping(cfg);
  const State st0 = buildInitialData(requireInitialData(cfg), spec, damping, opt.seed);
  if (cfg.timeGrid.empty()) throw ConfigError("time.grid: required for the energy command");
  const EnergyReport rep = energyIdentityCheck(st0, damping, cfg.timeGrid, cfg.energyStep);

  const std::string meta = metaLine(cfg, "energy");
  CsvWriter csv(opt.outDir / "energy.csv", meta, {"t", "phi", "dphi_fd", "rhs", "rel_violation"});
  for (std::size_t i = 0; i < rep.tGrid.size(); ++i) {
    const double rel = std::abs(rep.dPhiFd[i] - rep.rhs[i]) / std::max(std::abs(rep.rhs[i]), 1e-300);
    csv.rowDoubles({rep.tGrid[i], rep.phi[i], rep.dPhiFd[i], rep.rhs[i], rel});
  }

  const IntegralInequalityResult ir = integralInequalityCheck(st0, damping, cfg.timeGrid.back());
  json body{{"max_rel_violation", rep.maxRelViolation},
            {"h", rep.h},
            {"sandwich_holds", rep.sandwichHolds},
            {"integral_inequality",
             {{"lhs", ir.lhs}, {"rhs", ir.rhs}, {"holds", ir.holds}, {"t", cfg.timeGrid.back()}}}};
  writeJsonFile(opt.outDir / "energy.json", body, cfg.hash);

  const bool pass = rep.maxRelViolation < 1e-5 && rep.sandwichHolds && ir.holds;
  return pass ? kExitOk : kExitTheoremFailed;
}

int runCounterexample(const ExperimentConfig& cfg, const RunOptions& opt) {
  SpectrumPtr spec = requireSpectrum(cfg).build();
  const DampingConfig& damping = requireDamping(cfg);
  const InitialDataConfig& data = requireInitialData(cfg);
  if (data.kind != "counterexample")
    throw ConfigError("initial_data.kind: counterexample required for this command");
  const CounterexampleSpec cs = counterexampleFromConfig(data, spec, damping);
  const double theta = cfg.theta > 0.0 ? cfg.theta : cfg.t + 1.0;
  const LowerBoundResult lb = lowerBoundCheck(cs, cfg.t, theta, fitGrid(cfg.fit));

  const std::string meta = metaLine(cfg, "counterexample");
  CsvWriter csv(opt.outDir / "lower_bound.csv", meta, {"k", "log_bound"});
  for (const auto& [k, lB] : lb.boundCurve) csv.rowDoubles({k, lB});

  const auto [vMargin, hMargin] = cs.summabilityMargins();
  json body{{"fitted_exponent", lb.fittedExponent},
            {"theory_exponent", lb.theoryExponent},
            {"dominated", lb.dominated},
            {"n0", cs.n0},
            {"big_k", cs.bigK},
            {"t", cfg.t},
            {"theta", theta},
            {"vxh_margins", {vMargin, hMargin}}};
  writeJsonFile(opt.outDir / "counterexample.json", body, cfg.hash);
  return lb.dominated ? kExitOk : kExitTheoremFailed;
}

int runWave(const ExperimentConfig& cfg, const RunOptions& opt) {
  if (!cfg.wave) throw ConfigError("wave: required for this command");
  const WaveConfig& wc = *cfg.wave;
  SpectrumPtr spec = requireSpectrum(cfg).build();
  if (spec->kind() != SpectrumKind::Dirichlet1D)
    throw ConfigError("spectrum.kind: dirichlet_1d required for the wave command");
  if (std::abs(spec->domainLength().value() - wc.length) > 1e-12 * wc.length)
    throw ConfigError("wave.length: must match spectrum.length");
  const DampingConfig& damping = requireDamping(cfg);
  const State st0 = buildInitialData(requireInitialData(cfg), spec, damping, opt.seed);
  const State st = evolve(st0, damping, cfg.t);

  DiagonalVector u = st.u;
  WaveDomain dom = wc.windowA ? WaveDomain::interval(wc.length, *wc.windowA, *wc.windowB)
                              : WaveDomain::interval(wc.length);
  if (wc.embedThreeToOne) {
    u = threeToOneEmbedding(st.u);
    dom = WaveDomain::interval(wc.length / 3.0);
    if (wc.windowA) dom = WaveDomain::interval(wc.length / 3.0, *wc.windowA, *wc.windowB);
  }

  std::vector<int> ps;
  for (int p = wc.pMin; p <= wc.pMax; p += wc.pStep) ps.push_back(p);
  const SpatialDerivCurve sc = spatialDerivCurve(u, dom, cfg.t, ps, wc.xPoints, opt.threads);
  const GevreyFit fit = spatialGevreyFit(u, dom, damping, cfg.t, ps, wc.xPoints, opt.threads);

  const std::string meta = metaLine(cfg, "wave");
  CsvWriter spatial(opt.outDir / "spatial.csv", meta, {"p", "log_sup"});
  for (const SpatialSample& s : sc.entries)
    spatial.rowDoubles({static_cast<double>(s.p), s.logSup});

  // Snapshot u(t, x) across the full interval for plotting.
  bool cancellationSeen = false;
  {
    CsvWriter snap(opt.outDir / "snapshot.csv", meta, {"x", "u"});
    const std::size_t points = 513;
    for (std::size_t i = 1; i + 1 <= points; ++i) {
      const double x = dom.length * static_cast<double>(i) / static_cast<double>(points);
      const SignedSum val = reconstruct(u, dom, x, 0);
      cancellationSeen = cancellationSeen || val.cancellation;
      snap.rowDoubles({x, val.value.toReal()});
    }
  }

  json body{{"s_hat", fit.sigmaHat},
            {"log_r_hat", fit.logRHat},
            {"residual", fit.residual},
            {"p_window", {wc.pMin, wc.pMax}},
            {"t", cfg.t},
            {"embedded", wc.embedThreeToOne},
            {"cancellation_flagged", cancellationSeen}};
  writeJsonFile(opt.outDir / "wave.json", body, cfg.hash);
  if (cancellationSeen) {
    std::cerr << "wave: snapshot reconstruction raised CancellationWarning\n";
    return kExitNumericalGuard;
  }
  return kExitOk;
}

int runAppendix(const ExperimentConfig& cfg, const RunOptions& opt) {
  const AppendixConfig& ac = cfg.appendix;
  json chain = json::array();
  bool allHold = true;
  for (int n = 1; n <= ac.components; ++n) {
    const ChainCheckResult r = multiIndexChainCheck(n, ac.maxTotal);
    allHold = allHold && r.allHold;
    chain.push_back({{"components", n},
                     {"tuples", r.tuplesChecked},
                     {"worst_log_gap", r.worstRatio},
                     {"all_hold", r.allHold}});
  }
  const bool stepOk = twoComponentStepCheck(ac.maxP);

  std::vector<double> betas, hs;
  for (std::size_t i = 0; i < ac.scalarBetaPoints; ++i)
    betas.push_back(static_cast<double>(i) / static_cast<double>(ac.scalarBetaPoints - 1));
  for (std::size_t i = 0; i < ac.scalarHPoints; ++i)
    hs.push_back(std::pow(10.0, -8.0 + 18.0 * static_cast<double>(i) /
                                     static_cast<double>(ac.scalarHPoints - 1)));
  const bool scalarOk = scalarPowerInequalityCheck(betas, hs);

  CounterRng rng(opt.seed);
  bool diagOk = true;
  for (std::size_t i = 0; i < ac.diagonalTrials && diagOk; ++i) {
    const std::uint64_t base = i * 32;
    const std::size_t modes = 2 + rng.bits(base) % 7;
    std::vector<double> lams, vals;
    for (std::size_t m = 0; m < modes; ++m) {
      lams.push_back(std::pow(10.0, rng.uniform(base + 1 + m, -3.0, 3.0)));
      vals.push_back(rng.symmetric(base + 16 + m));
    }
    SpectrumPtr spec = Spectrum::fromValues(lams);
    const DiagonalVector v = DiagonalVector::fromReals(spec, vals);
    diagOk = diagOk && diagonalOperatorInequalityCheck(v, rng.uniform(base + 30, 0.0, 1.0));
  }

  json body{{"multi_index_chain", chain},
            {"two_component_step_ok", stepOk},
            {"scalar_power_ok", scalarOk},
            {"diagonal_operator_ok", diagOk},
            {"diagonal_trials", ac.diagonalTrials}};
  writeJsonFile(opt.outDir / "appendix.json", body, cfg.hash);
  return (allHold && stepOk && scalarOk && diagOk) ? kExitOk : kExitTheoremFailed;
}

json stripVolatile(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key().find("seconds") != std::string::npos) continue;
      out[it.key()] = stripVolatile(it.value());
    }
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(stripVolatile(v));
    return out;
  }
  return j;
}

int runSuite(const ExperimentConfig& cfg, const RunOptions& opt) {
  AcceptanceOptions ao;
  ao.seed = opt.seed;
  ao.threads = opt.threads;
  ao.outDir = opt.outDir;
  ao.configHash = cfg.hash;
  const std::vector<CriterionResult> results = runAllCriteria(ao);
  json list = json::array();
  bool allPass = true;
  for (const CriterionResult& r : results) {
    allPass = allPass && r.pass;
    list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                    {"metrics", stripVolatile(r.metrics)}});
    std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
              << " -- " << r.detail << "\n";
  }
  writeJsonFile(opt.outDir / "summary.json", json{{"criteria", list}, {"all_pass", allPass},
                                                  {"seed", opt.seed}},
                cfg.hash);
  return allPass ? kExitOk : kExitTheoremFailed;
}

}  // namespace

int runCommand(const std::string& command, const ExperimentConfig& cfg, const RunOptions& opt) {
  std::filesystem::create_directories(opt.outDir);
  if (command == "simulate") return runSimulate(cfg, opt, false);
  if (command == "fit") return runSimulate(cfg, opt, true);
  if (command == "energy") return runEnergy(cfg, opt);
  if (command == "counterexample") return runCounterexample(cfg, opt);
  if (command == "wave") return runWave(cfg, opt);
  if (command == "appendix") return runAppendix(cfg, opt);
  if (command == "suite") return runSuite(cfg, opt);
  throw ConfigError("unknown command '" + command +
                    "' (expected simulate | fit | energy | counterexample | wave | appendix | suite)");
}

}  // namespace gevlab
