#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gevlab/experiments.hpp"
#include "gevlab/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"gevrey-lab: spectral laboratory for fractionally damped wave equations"};
  app.set_version_flag("--version", std::string(gevlab::kToolVersion));

  std::string command;
  app.add_option("command", command,
                 "simulate | fit | energy | counterexample | wave | appendix | suite")
      ->required();
  std::string configPath;
  app.add_option("--config", configPath, "experiment config (JSON)")->required();
  gevlab::RunOptions opt;
  std::string outDir = "out";
  app.add_option("--out", outDir, "output directory (default: out)");
  app.add_option("--threads", opt.threads, "worker threads (1 = reproducibility reference)");
  app.add_option("--seed", opt.seed, "seed for the counter-based RNG");

  CLI11_PARSE(app, argc, argv);
  opt.outDir = outDir;

  try {
    const gevlab::ExperimentConfig cfg = gevlab::ExperimentConfig::load(configPath);
    return gevlab::runCommand(command, cfg, opt);
  } catch (const gevlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return gevlab::kExitConfigError;
  } catch (const gevlab::TruncationError& e) {
    std::cerr << "numerical guard: " << e.what() << "\n";
    return gevlab::kExitNumericalGuard;
  } catch (const gevlab::SpecError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return gevlab::kExitConfigError;
  } catch (const gevlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gevlab::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return gevlab::kExitConfigError;
  }
}
