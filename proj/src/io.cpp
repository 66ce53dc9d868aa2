#include "gevlab/io.hpp"

#include <cstdio>
#include <sstream>

#include "gevlab/errors.hpp"

namespace gevlab {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hexHash(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string formatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::string& meta,
                     const std::vector<std::string>& columns)
    : out_(path), columns_(columns.size()) {
  if (!out_) throw ConfigError("cannot open output file: " + path.string());
  out_ << "# " << meta << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw ConfigError("CSV row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
  out_ << "\n";
}

void CsvWriter::rowDoubles(const std::vector<double>& cells) {
  std::vector<std::string> s;
  s.reserve(cells.size());
  for (double c : cells) s.push_back(formatDouble(c));
  row(s);
}

void writeJsonFile(const std::filesystem::path& path, nlohmann::json body,
                   const std::string& configHash) {
  body["config_hash"] = configHash;
  body["tool_version"] = std::string(kToolVersion);
  body["schema_version"] = 1;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path.string());
  out << body.dump(2) << "\n";
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<double, double>> readPairCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read file: " + path.string());
  std::vector<std::pair<double, double>> rows;
  std::string line;
  bool headerSkipped = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!headerSkipped) {
      headerSkipped = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ConfigError(path.string() + ": expected two CSV columns");
    try {
      rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw ConfigError(path.string() + ": non-numeric CSV cell in '" + line + "'");
    }
  }
  if (rows.empty()) throw ConfigError(path.string() + ": no data rows");
  return rows;
}

}  // namespace gevlab
