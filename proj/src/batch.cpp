#include "relfree/batch.hpp"

#include <algorithm>

#include "relfree/errors.hpp"
#include "relfree/presentation_file.hpp"
#include "relfree/report.hpp"

namespace relfree {

FileResult analyze_file(const std::filesystem::path& path, const AnalyzeOptions& opts) {
  FileResult r;
  r.path = path;
  try {
    RelativePresentation p = load_presentation(path);
    Classification c = classify(p, opts.classify);
    r.verdict = to_string(c.verdict);
    r.json = render_json(report_json(p, c, {opts.verbose}));
    r.exit_code = c.verdict == Verdict::OutOfScope ? kExitScope : kExitOk;
  } catch (const ParseError& e) {
    r.exit_code = kExitParse;
    r.error = e.what();
  } catch (const ScopeError& e) {
    r.exit_code = kExitScope;
    r.error = e.what();
  } catch (const std::exception& e) {
    // Arithmetic overflow and the like: still no report, and the batch
    // must not die inside a parallel region.
    r.exit_code = kExitParse;
    r.error = e.what();
  }
  return r;
}

std::vector<std::filesystem::path> presentation_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".rel") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FileResult> analyze_batch_serial(const std::vector<std::filesystem::path>& files,
                                             const AnalyzeOptions& opts) {
  std::vector<FileResult> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(analyze_file(f, opts));
  return out;
}

std::vector<FileResult> analyze_batch(const std::vector<std::filesystem::path>& files,
                                      const AnalyzeOptions& opts) {
  std::vector<FileResult> out(files.size());
  const int n = static_cast<int>(files.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>(i);
    out[k] = analyze_file(files[k], opts);
  }
  return out;
}

}  // namespace relfree
