#ifndef GEVLAB_EXPERIMENTS_HPP
#define GEVLAB_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include "gevlab/config.hpp"

namespace gevlab {

struct RunOptions {
  std::filesystem::path outDir = "out";
  std::uint64_t seed = 42;
  int threads = 1;
};

// Exit codes: 0 all checks pass, 1 a verified-theorem check failed,
// 2 config/validation error (thrown as ConfigError before this runs),
// 3 numerical guard tripped (TruncationError, escalated CancellationWarning).
inline constexpr int kExitOk = 0;
inline constexpr int kExitTheoremFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalGuard = 3;

int runCommand(const std::string& command, const ExperimentConfig& cfg, const RunOptions& opt);

}  // namespace gevlab

#endif
