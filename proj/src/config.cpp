#include "gevlab/config.hpp"

#include <cmath>
#include <sstream>

#include "gevlab/io.hpp"
#include "gevlab/rng.hpp"

namespace gevlab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

const json& member(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing required field");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double numberIn(const json& j, const std::string& path, double lo, double hi, bool openLo,
                bool openHi) {
  const double v = number(j, path);
  const bool loOk = openLo ? v > lo : v >= lo;
  const bool hiOk = openHi ? v < hi : v <= hi;
  if (!loOk || !hiOk) {
    std::ostringstream msg;
    msg << "value " << v << " outside " << (openLo ? "(" : "[") << lo << ", " << hi
        << (openHi ? ")" : "]");
    fail(path, msg.str());
  }
  return v;
}

std::size_t positiveInteger(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) fail(path, "expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

std::vector<double> numberList(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

SpectrumConfig parseSpectrum(const json& j, const std::string& path) {
  SpectrumConfig cfg;
  cfg.kind = member(j, path, "kind").get<std::string>();
  if (cfg.kind == "power_law") {
    cfg.delta = numberIn(member(j, path, "delta"), path + ".delta", 0.0, 1e300, true, true);
    cfg.epsilon = numberIn(member(j, path, "epsilon"), path + ".epsilon", 0.0, 64.0, true, true);
    cfg.count = positiveInteger(member(j, path, "count"), path + ".count");
  } else if (cfg.kind == "dirichlet_1d") {
    cfg.length = numberIn(member(j, path, "length"), path + ".length", 0.0, 1e300, true, true);
    cfg.count = positiveInteger(member(j, path, "count"), path + ".count");
  } else if (cfg.kind == "explicit") {
    cfg.values = numberList(member(j, path, "values"), path + ".values");
    if (cfg.values.empty()) fail(path + ".values", "must be nonempty");
    for (std::size_t i = 0; i < cfg.values.size(); ++i)
      if (!(cfg.values[i] > 0.0)) fail(path + ".values[" + std::to_string(i) + "]", "eigenvalues must be positive");
    cfg.count = cfg.values.size();
  } else {
    fail(path + ".kind", "one of power_law | dirichlet_1d | explicit expected, got '" + cfg.kind + "'");
  }
  return cfg;
}

DampingConfig parseDamping(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("terms")) {
    const json& terms = member(j, path, "terms");
    if (!terms.is_array() || terms.empty()) fail(path + ".terms", "expected a nonempty array");
    std::vector<DampingTerm> list;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string tp = path + ".terms[" + std::to_string(i) + "]";
      DampingTerm term;
      term.c = numberIn(member(terms[i], tp, "c"), tp + ".c", 0.0, 1e300, true, true);
      term.alpha = numberIn(member(terms[i], tp, "alpha"), tp + ".alpha", 0.0, 1.0, true, true);
      list.push_back(term);
    }
    return DampingConfig(std::move(list));
  }
  const double alpha = numberIn(member(j, path, "alpha"), path + ".alpha", 0.0, 1.0, true, true);
  const double c = numberIn(member(j, path, "c"), path + ".c", 0.0, 1e300, true, true);
  return DampingConfig(alpha, c);
}

InitialDataConfig parseInitialData(const json& j, const std::string& path) {
  InitialDataConfig cfg;
  cfg.kind = member(j, path, "kind").get<std::string>();
  if (cfg.kind == "random_vxh") {
    if (j.contains("decay_q0"))
      cfg.decayQ0 = numberIn(j["decay_q0"], path + ".decay_q0", 1.5, 64.0, false, true);
    if (j.contains("decay_q1"))
      cfg.decayQ1 = numberIn(j["decay_q1"], path + ".decay_q1", 0.5, 64.0, false, true);
  } else if (cfg.kind == "counterexample") {
    cfg.variant = member(j, path, "variant").get<std::string>();
    if (cfg.variant != "overdamped" && cfg.variant != "oscillatory" && cfg.variant != "half")
      fail(path + ".variant", "one of overdamped | oscillatory | half expected");
    cfg.bigK = numberIn(member(j, path, "big_k"), path + ".big_k", 0.0, 64.0, true, true);
    if (j.contains("n0")) cfg.n0 = positiveInteger(j["n0"], path + ".n0");
    if (j.contains("mode_stride"))
      cfg.modeStride = positiveInteger(j["mode_stride"], path + ".mode_stride");
  } else if (cfg.kind == "explicit") {
    cfg.u0 = numberList(member(j, path, "u0"), path + ".u0");
    cfg.u1 = numberList(member(j, path, "u1"), path + ".u1");
  } else if (cfg.kind == "basis") {
    cfg.mode = positiveInteger(member(j, path, "mode"), path + ".mode");
  } else {
    fail(path + ".kind", "one of random_vxh | counterexample | explicit | basis expected, got '" +
                             cfg.kind + "'");
  }
  return cfg;
}

}  // namespace

SpectrumPtr SpectrumConfig::build() const {
  if (kind == "power_law") return Spectrum::powerLaw(delta, epsilon, count);
  if (kind == "dirichlet_1d") return Spectrum::dirichlet1d(length, count);
  return Spectrum::fromValues(values);
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  return parse(readFile(path));
}

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  cfg.rawText = text;
  cfg.hash = hexHash(fnv1a64(text));

  if (j.contains("spectrum")) cfg.spectrum = parseSpectrum(j["spectrum"], "spectrum");
  if (j.contains("damping")) cfg.damping = parseDamping(j["damping"], "damping");
  if (j.contains("initial_data")) cfg.initialData = parseInitialData(j["initial_data"], "initial_data");

  if (j.contains("time")) {
    const json& tj = j["time"];
    if (tj.contains("t")) cfg.t = numberIn(tj["t"], "time.t", 0.0, 1e300, false, true);
    if (tj.contains("grid")) {
      cfg.timeGrid = numberList(tj["grid"], "time.grid");
      for (std::size_t i = 0; i < cfg.timeGrid.size(); ++i) {
        if (cfg.timeGrid[i] < 0.0) fail("time.grid[" + std::to_string(i) + "]", "must be nonnegative");
        if (i > 0 && cfg.timeGrid[i] <= cfg.timeGrid[i - 1])
          fail("time.grid[" + std::to_string(i) + "]", "must be strictly increasing");
      }
    }
    if (tj.contains("theta")) cfg.theta = numberIn(tj["theta"], "time.theta", 0.0, 1e300, true, true);
  }
  if (j.contains("energy") && j["energy"].contains("h"))
    cfg.energyStep = numberIn(j["energy"]["h"], "energy.h", 0.0, 1.0, true, true);

  if (j.contains("fit")) {
    const json& f = j["fit"];
    if (f.contains("k_min")) cfg.fit.kMin = numberIn(f["k_min"], "fit.k_min", 1.0, 1e6, false, true);
    if (f.contains("k_max")) cfg.fit.kMax = numberIn(f["k_max"], "fit.k_max", 2.0, 1e6, false, true);
    if (f.contains("k_step")) cfg.fit.kStep = numberIn(f["k_step"], "fit.k_step", 0.0, 1e6, true, true);
    if (cfg.fit.kMax <= cfg.fit.kMin) fail("fit.k_max", "must exceed fit.k_min");
    if (f.contains("sigma")) cfg.fit.sigma = numberIn(f["sigma"], "fit.sigma", 0.0, 64.0, true, true);
    if (f.contains("curve_csv")) {
      if (!f["curve_csv"].is_string()) fail("fit.curve_csv", "expected a file path string");
      cfg.fit.curveCsv = f["curve_csv"].get<std::string>();
    }
  }

  if (j.contains("wave")) {
    const json& w = j["wave"];
    WaveConfig wc;
    wc.length = numberIn(member(w, "wave", "length"), "wave.length", 0.0, 1e300, true, true);
    if (w.contains("window")) {
      const auto win = numberList(w["window"], "wave.window");
      if (win.size() != 2) fail("wave.window", "expected [a, b]");
      wc.windowA = win[0];
      wc.windowB = win[1];
      if (!(0.0 < win[0] && win[0] < win[1] && win[1] < wc.length))
        fail("wave.window", "need 0 < a < b < length");
    }
    if (w.contains("p_min")) wc.pMin = static_cast<int>(positiveInteger(w["p_min"], "wave.p_min"));
    if (w.contains("p_max")) wc.pMax = static_cast<int>(positiveInteger(w["p_max"], "wave.p_max"));
    if (w.contains("p_step")) wc.pStep = static_cast<int>(positiveInteger(w["p_step"], "wave.p_step"));
    if (wc.pMax <= wc.pMin) fail("wave.p_max", "must exceed wave.p_min");
    if (w.contains("x_points")) wc.xPoints = positiveInteger(w["x_points"], "wave.x_points");
    if (w.contains("embed_three_to_one")) {
      if (!w["embed_three_to_one"].is_boolean()) fail("wave.embed_three_to_one", "expected a boolean");
      wc.embedThreeToOne = w["embed_three_to_one"].get<bool>();
    }
    cfg.wave = wc;
  }

  if (j.contains("appendix")) {
    const json& a = j["appendix"];
    if (a.contains("components"))
      cfg.appendix.components = static_cast<int>(positiveInteger(a["components"], "appendix.components"));
    if (a.contains("max_total"))
      cfg.appendix.maxTotal = static_cast<int>(positiveInteger(a["max_total"], "appendix.max_total"));
    if (a.contains("max_p"))
      cfg.appendix.maxP = static_cast<int>(positiveInteger(a["max_p"], "appendix.max_p"));
    if (a.contains("diagonal_trials"))
      cfg.appendix.diagonalTrials = positiveInteger(a["diagonal_trials"], "appendix.diagonal_trials");
  }
  return cfg;
}

State randomVxHState(SpectrumPtr spectrum, std::uint64_t seed, double q0, double q1) {
  CounterRng rng(seed);
  State st{DiagonalVector(spectrum), DiagonalVector(spectrum)};
  const std::size_t n = spectrum->count();
  for (std::size_t i = 0; i < n; ++i) {
    const double weight0 = std::pow(static_cast<double>(i + 1), -q0);
    const double weight1 = std::pow(static_cast<double>(i + 1), -q1);
    st.u[i] = LogReal::fromReal(rng.symmetric(2 * i) * weight0);
    st.v[i] = LogReal::fromReal(rng.symmetric(2 * i + 1) * weight1);
  }
  return st;
}

CounterexampleSpec counterexampleFromConfig(const InitialDataConfig& cfg, SpectrumPtr spectrum,
                                            const DampingConfig& damping) {
  CounterexampleSpec spec;
  if (cfg.variant == "overdamped")
    spec.variant = CounterexampleSpec::Variant::Overdamped;
  else if (cfg.variant == "oscillatory")
    spec.variant = CounterexampleSpec::Variant::Oscillatory;
  else
    spec.variant = CounterexampleSpec::Variant::Half;
  spec.bigK = cfg.bigK;
  spec.spectrum = std::move(spectrum);
  spec.damping = damping;
  spec.n0 = cfg.n0;
  if (spec.n0 == 0) {
    const std::size_t n = spec.minimalStartIndex();
    if (n == 0) throw SpecError("counterexample: no admissible start mode in the spectrum");
    spec.n0 = n;
  }
  return spec;
}

State buildInitialData(const InitialDataConfig& cfg, SpectrumPtr spectrum,
                       const DampingConfig& damping, std::uint64_t seed) {
  if (cfg.kind == "random_vxh") return randomVxHState(spectrum, seed, cfg.decayQ0, cfg.decayQ1);
  if (cfg.kind == "counterexample") {
    State st = buildCounterexample(counterexampleFromConfig(cfg, spectrum, damping));
    if (cfg.modeStride > 1) {
      for (std::size_t n = 1; n <= st.u.size(); ++n) {
        if (n % cfg.modeStride != 0) {
          st.u[n - 1] = LogReal::zero();
          st.v[n - 1] = LogReal::zero();
        }
      }
    }
    return st;
  }
  if (cfg.kind == "basis") {
    State st{DiagonalVector::basisVector(spectrum, cfg.mode), DiagonalVector(spectrum)};
    return st;
  }
  if (cfg.u0.size() != spectrum->count() || cfg.u1.size() != spectrum->count())
    throw ConfigError("initial_data.u0/u1: length must equal spectrum.count");
  return State{DiagonalVector::fromReals(spectrum, cfg.u0),
               DiagonalVector::fromReals(spectrum, cfg.u1)};
}

}  // namespace gevlab
