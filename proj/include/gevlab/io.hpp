#ifndef GEVLAB_IO_HPP
#define GEVLAB_IO_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gevlab {

inline constexpr std::string_view kToolVersion = "gevrey-lab 0.1.0";

// FNV-1a 64-bit; stable across platforms so output headers are reproducible.
std::uint64_t fnv1a64(std::string_view data);

std::string hexHash(std::uint64_t h);

// Fixed "%.17g" rendering: round-trips doubles and keeps outputs byte-stable.
std::string formatDouble(double v);

// CSV with a leading '#' metadata line (config hash + tool version), then a
// header row, then data rows.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::string& meta,
            const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  void rowDoubles(const std::vector<double>& cells);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

// JSON summaries carry the same metadata as top-level fields ('#' comments
// would break JSON parsers).
void writeJsonFile(const std::filesystem::path& path, nlohmann::json body,
                   const std::string& configHash);

std::string readFile(const std::filesystem::path& path);

// Parses a two-column numeric CSV (leading '#' lines and one header row
// skipped) into (first, second) pairs.
std::vector<std::pair<double, double>> readPairCsv(const std::filesystem::path& path);

}  // namespace gevlab

#endif
