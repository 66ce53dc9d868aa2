#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gevlab/config.hpp"
#include "gevlab/io.hpp"

using namespace gevlab;
namespace fs = std::filesystem;

namespace {

fs::path scratchDir() {
  const fs::path p = fs::temp_directory_path() / "gevlab_test_cli";
  fs::create_directories(p);
  return p;
}

void writeText(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

int runCli(const std::string& args) {
  const std::string cmd = std::string(GEVLAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("config parsing: happy path") {
  const ExperimentConfig cfg = ExperimentConfig::parse(R"({
    "spectrum": {"kind": "power_law", "delta": 1.0, "epsilon": 2.0, "count": 64},
    "damping": {"alpha": 0.75, "c": 1.0},
    "initial_data": {"kind": "random_vxh", "decay_q0": 2.0, "decay_q1": 2.0},
    "time": {"t": 1.5},
    "fit": {"k_min": 20, "k_max": 60}
  })");
  CHECK(cfg.spectrum->count == 64);
  CHECK(cfg.damping->alpha() == doctest::Approx(0.75));
  CHECK(cfg.t == doctest::Approx(1.5));
  CHECK(cfg.fit.kMax == doctest::Approx(60.0));
  CHECK(cfg.hash.size() == 16);
}

TEST_CASE("config parsing reports the offending field path") {
  const auto expectError = [](const std::string& text, const std::string& needle) {
    try {
      ExperimentConfig::parse(text);
      FAIL_CHECK("expected ConfigError for " << needle);
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expectError(R"({"damping": {"alpha": 1.5, "c": 1.0}})", "damping.alpha");
  expectError(R"({"damping": {"alpha": 0.5, "c": -1.0}})", "damping.c");
  expectError(R"({"spectrum": {"kind": "banana"}})", "spectrum.kind");
  expectError(R"({"spectrum": {"kind": "power_law", "delta": 1.0}})", "spectrum.epsilon");
  expectError(R"({"initial_data": {"kind": "counterexample", "variant": "overdamped"}})",
              "initial_data.big_k");
  expectError(R"({"time": {"grid": [0.5, 0.25]}})", "time.grid[1]");
  expectError(R"({"wave": {"length": 3.0, "window": [2.0, 1.0]}})", "wave.window");
  expectError("{not json", "invalid JSON");
}

TEST_CASE("random VxH data is deterministic in the seed") {
  auto spec = Spectrum::powerLaw(1.0, 2.0, 16);
  const State a = randomVxHState(spec, 42, 2.0, 2.0);
  const State b = randomVxHState(spec, 42, 2.0, 2.0);
  const State c = randomVxHState(spec, 43, 2.0, 2.0);
  CHECK(a.u[3].logmag == b.u[3].logmag);
  CHECK(a.u[3].logmag != c.u[3].logmag);
  // decay profile keeps the V norm summable
  for (std::size_t i = 0; i < 16; ++i)
    CHECK(std::abs(a.u[i].toReal()) <= std::pow(i + 1.0, -2.0));
}

TEST_CASE("cli: malformed config exits 2 and mentions the field") {
  const fs::path dir = scratchDir();
  writeText(dir / "bad.json", R"({"damping": {"alpha": 1.5, "c": 1.0}})");
  CHECK(runCli("simulate --config " + (dir / "bad.json").string()) == 2);

  // diagnostics go to stderr and carry the field path
  const std::string cmd = std::string(GEVLAB_CLI_PATH) + " simulate --config " +
                          (dir / "bad.json").string() + " 2> " + (dir / "err.txt").string();
  const int rc = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(rc) == 2);
  const std::string err = readFile(dir / "err.txt");
  CHECK(err.find("damping.alpha") != std::string::npos);
}

TEST_CASE("cli: unknown command exits 2, missing file exits 2") {
  const fs::path dir = scratchDir();
  writeText(dir / "min.json", "{}");
  CHECK(runCli("frobnicate --config " + (dir / "min.json").string()) == 2);
  CHECK(runCli("simulate --config " + (dir / "missing.json").string()) == 2);
}

TEST_CASE("cli: appendix command passes with trimmed budgets") {
  const fs::path dir = scratchDir();
  writeText(dir / "app.json", R"({
    "appendix": {"components": 3, "max_total": 10, "max_p": 60, "diagonal_trials": 200}
  })");
  CHECK(runCli("appendix --config " + (dir / "app.json").string() + " --out " +
               (dir / "out_app").string()) == 0);
  CHECK(fs::exists(dir / "out_app" / "appendix.json"));
}

TEST_CASE("cli: simulate is byte-reproducible for a fixed seed") {
  const fs::path dir = scratchDir();
  writeText(dir / "sim.json", R"({
    "spectrum": {"kind": "power_law", "delta": 1.0, "epsilon": 2.0, "count": 48},
    "damping": {"alpha": 0.6, "c": 1.0},
    "initial_data": {"kind": "random_vxh"},
    "time": {"t": 1.0},
    "fit": {"k_min": 2, "k_max": 20}
  })");
  const std::string base = "simulate --config " + (dir / "sim.json").string();
  CHECK(runCli(base + " --seed 42 --out " + (dir / "a").string()) == 0);
  CHECK(runCli(base + " --seed 42 --out " + (dir / "b").string()) == 0);
  CHECK(runCli(base + " --seed 7 --out " + (dir / "c").string()) == 0);
  CHECK(readFile(dir / "a" / "curve.csv") == readFile(dir / "b" / "curve.csv"));
  CHECK(readFile(dir / "a" / "curve.csv") != readFile(dir / "c" / "curve.csv"));
  // metadata line leads every CSV
  CHECK(readFile(dir / "a" / "curve.csv").rfind("# config_hash=", 0) == 0);
}

TEST_CASE("cli: fit on the overdamped counterexample reports sigma near 4") {
  const fs::path dir = scratchDir();
  // evaluation time and mode count sized so the window [20, 200] is within
  // the tail-adequacy rule (see README on finite-k bias)
  writeText(dir / "fit.json.in", R"({
    "spectrum": {"kind": "power_law", "delta": 1.0, "epsilon": 2.0, "count": 6600},
    "damping": {"alpha": 0.75, "c": 1.0},
    "initial_data": {"kind": "counterexample", "variant": "overdamped", "big_k": 1.26, "n0": 5},
    "time": {"t": 14.0},
    "fit": {"k_min": 20, "k_max": 200, "sigma": 4.0}
  })");
  CHECK(runCli("fit --config " + (dir / "fit.json.in").string() + " --out " +
               (dir / "out_fit").string()) == 0);
  const auto body = nlohmann::json::parse(readFile(dir / "out_fit" / "fit.json"));
  CHECK(std::abs(body["sigma_hat"].get<double>() - 4.0) < 0.2);
  CHECK(body["membership"]["is_consistent"].get<bool>());
}

TEST_CASE("cli: fit accepts an imported curve CSV") {
  const fs::path dir = scratchDir();
  {
    std::ofstream csv(dir / "curve_in.csv");
    csv << "# imported\nk,logM\n";
    for (int k = 2; k <= 40; ++k)
      csv << k << ","
          << formatDouble(k * std::log(2.0) + 1.5 * k * std::log(static_cast<double>(k)))
          << "\n";
  }
  writeText(dir / "fitcsv.json", R"({
    "fit": {"k_min": 2, "k_max": 40, "curve_csv": ")" + (dir / "curve_in.csv").string() + R"("}
  })");
  CHECK(runCli("fit --config " + (dir / "fitcsv.json").string() + " --out " +
               (dir / "out_csvfit").string()) == 0);
  const auto body = nlohmann::json::parse(readFile(dir / "out_csvfit" / "fit.json"));
  CHECK(body["sigma_hat"].get<double>() == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(body["log_r_hat"].get<double>() == doctest::Approx(std::log(2.0)).epsilon(1e-7));
}

TEST_CASE("cli: truncation guard exits 3") {
  const fs::path dir = scratchDir();
  // 16 modes cannot support spatial orders up to 60 at t = 1
  writeText(dir / "wave.json.in", R"({
    "spectrum": {"kind": "dirichlet_1d", "length": 3.14159265358979312, "count": 16},
    "damping": {"alpha": 0.5, "c": 1.0},
    "initial_data": {"kind": "random_vxh"},
    "time": {"t": 1.0},
    "wave": {"length": 3.14159265358979312, "p_min": 2, "p_max": 60, "p_step": 2, "x_points": 65}
  })");
  CHECK(runCli("wave --config " + (dir / "wave.json.in").string() + " --out " +
               (dir / "out_wave").string()) == 3);
}
