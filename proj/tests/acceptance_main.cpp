// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 9 (byte-identical reruns) invokes the CLI given by
// --cli twice and compares the output trees.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gevlab/acceptance.hpp"
#include "gevlab/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Args {
  std::string cliPath;
  std::uint64_t seed = 42;
  int threads = 1;
};

Args parseArgs(int argc, char** argv) {
  Args a;
  for (int i = 1; i < argc; ++i) {
    const std::string flag = argv[i];
    if (flag == "--cli" && i + 1 < argc) {
      a.cliPath = argv[++i];
    } else if (flag == "--seed" && i + 1 < argc) {
      a.seed = std::stoull(argv[++i]);
    } else if (flag == "--threads" && i + 1 < argc) {
      a.threads = std::stoi(argv[++i]);
    } else {
      std::cerr << "usage: gevlab_acceptance [--cli <gevrey-lab>] [--seed n] [--threads n]\n";
      std::exit(2);
    }
  }
  return a;
}

void printLine(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name << " -- "
            << detail << "\n";
}

std::vector<fs::path> sortedFiles(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(fs::relative(e.path(), dir));
  std::sort(files.begin(), files.end());
  return files;
}

bool runReproducibility(const Args& args, std::string& detail) {
  if (args.cliPath.empty()) {
    detail = "no --cli path supplied";
    return false;
  }
  const fs::path work = fs::temp_directory_path() / "gevlab_acceptance_c9";
  fs::remove_all(work);
  fs::create_directories(work);
  {
    std::ofstream cfg(work / "suite.json");
    cfg << "{}\n";
  }
  const auto runOnce = [&](const std::string& sub) {
    const std::string cmd = args.cliPath + " suite --config " + (work / "suite.json").string() +
                            " --out " + (work / sub).string() + " --threads 1 --seed " +
                            std::to_string(args.seed) + " 2> " + (work / (sub + ".log")).string();
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  const int codeA = runOnce("a");
  const int codeB = runOnce("b");
  if (codeA != codeB || codeA > 1) {
    detail = "suite exit codes " + std::to_string(codeA) + " vs " + std::to_string(codeB);
    return false;
  }
  const auto filesA = sortedFiles(work / "a");
  const auto filesB = sortedFiles(work / "b");
  if (filesA != filesB) {
    detail = "output file sets differ";
    return false;
  }
  for (const fs::path& rel : filesA) {
    if (gevlab::readFile(work / "a" / rel) != gevlab::readFile(work / "b" / rel)) {
      detail = "byte mismatch in " + rel.string();
      return false;
    }
  }
  detail = std::to_string(filesA.size()) + " files byte-identical across reruns (exit " +
           std::to_string(codeA) + ")";
  return codeA == 0;
}

}  // namespace

int main(int argc, char** argv) {
  const Args args = parseArgs(argc, argv);
  gevlab::AcceptanceOptions opt;
  opt.seed = args.seed;
  opt.threads = args.threads;

  bool allPass = true;
  for (const gevlab::CriterionResult& r : gevlab::runAllCriteria(opt)) {
    printLine(r.id, r.name, r.pass, r.detail);
    allPass = allPass && r.pass;
  }

  std::string detail;
  const bool repro = runReproducibility(args, detail);
  printLine(9, "suite reruns byte-identical", repro, detail);
  allPass = allPass && repro;

  std::cout << (allPass ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
  return allPass ? 0 : 1;
}
