#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "relfree/classifier.hpp"

namespace relfree {

// Exit codes shared by the CLI: 0 analyzed, 1 malformed input,
// 2 outside every implemented theorem, 3 relation found by verify.
enum ExitCode : int { kExitOk = 0, kExitParse = 1, kExitScope = 2, kExitRelation = 3 };

struct FileResult {
  std::filesystem::path path;
  int exit_code = kExitOk;
  std::string verdict;  // empty on error
  std::string json;     // rendered report, empty on error
  std::string error;
};

struct AnalyzeOptions {
  ClassifyOptions classify;
  bool verbose = false;
};

FileResult analyze_file(const std::filesystem::path& path, const AnalyzeOptions& opts = {});

// The presentation files (*.rel) of a directory, sorted by name.
std::vector<std::filesystem::path> presentation_files(const std::filesystem::path& dir);

// Independent per-file analyses; results in input order. The parallel
// version must agree byte for byte with the serial one.
std::vector<FileResult> analyze_batch_serial(const std::vector<std::filesystem::path>& files,
                                             const AnalyzeOptions& opts = {});
std::vector<FileResult> analyze_batch(const std::vector<std::filesystem::path>& files,
                                      const AnalyzeOptions& opts = {});

}  // namespace relfree
