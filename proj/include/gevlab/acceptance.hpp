#ifndef GEVLAB_ACCEPTANCE_HPP
#define GEVLAB_ACCEPTANCE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gevlab {

struct AcceptanceOptions {
  std::uint64_t seed = 42;
  int threads = 1;
  // When set, per-criterion artifacts (CSV/JSON) are written under this
  // directory; the content is deterministic for a fixed seed.
  std::optional<std::filesystem::path> outDir;
  std::string configHash = "0000000000000000";
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;       // human-readable metrics
  nlohmann::json metrics;   // machine-readable metrics
};

CriterionResult runCriterionModalOracle(const AcceptanceOptions& opt);        // 1
CriterionResult runCriterionUpperBound(const AcceptanceOptions& opt);         // 2
CriterionResult runCriterionOptimalityPinch(const AcceptanceOptions& opt);    // 3
CriterionResult runCriterionEnergyIdentity(const AcceptanceOptions& opt);     // 4
CriterionResult runCriterionNonCoerciveGrowth(const AcceptanceOptions& opt);  // 5
CriterionResult runCriterionWaveAnalyticity(const AcceptanceOptions& opt);    // 6
CriterionResult runCriterionAppendix(const AcceptanceOptions& opt);           // 7
CriterionResult runCriterionPowerRescaling(const AcceptanceOptions& opt);     // 8

// Criteria 1-8 in order (9, byte-identical reruns, is exercised by running the
// CLI suite twice and comparing output trees).
std::vector<CriterionResult> runAllCriteria(const AcceptanceOptions& opt);

}  // namespace gevlab

#endif
