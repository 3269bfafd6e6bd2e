#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "relfree/batch.hpp"
#include "relfree/errors.hpp"
#include "relfree/presentation_file.hpp"
#include "relfree/presentation_model.hpp"
#include "relfree/report.hpp"

namespace fs = std::filesystem;
using namespace relfree;

namespace {

int run_analyze(const std::string& target, bool json, bool verbose) {
  AnalyzeOptions opts;
  opts.verbose = verbose;
  if (fs::is_directory(target)) {
    auto files = presentation_files(target);
    auto results = analyze_batch(files, opts);
    int worst = kExitOk;
    for (const auto& r : results) {
      worst = std::max(worst, r.exit_code);
      if (!r.error.empty()) {
        std::cout << r.path.filename().string() << ": error (exit " << r.exit_code << "): " << r.error << "\n";
        continue;
      }
      std::ofstream(r.path.string() + ".report.json") << r.json;
      std::cout << r.path.filename().string() << ": " << r.verdict << "\n";
    }
    return worst;
  }

  try {
    RelativePresentation p = load_presentation(target);
    Classification c = classify(p, opts.classify);
    if (json) {
      std::cout << render_json(report_json(p, c, {verbose}));
    } else {
      std::cout << render_text(p, c, {verbose});
    }
    return c.verdict == Verdict::OutOfScope ? kExitScope : kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ScopeError& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return kExitScope;
  }
}

int run_verify(const std::string& path, const std::string& u_text, const std::string& v_text,
               std::size_t depth) {
  try {
    RelativePresentation p = load_presentation(path);
    RelativeWord u = parse_word(u_text, p.sig);
    RelativeWord v = parse_word(v_text, p.sig);
    auto model = PresentationModel::build(p);
    if (!model) {
      std::cerr << "no computable model for this presentation\n";
      return kExitScope;
    }
    auto r = model->check_pair(u, v, depth);
    std::cout << "model: " << model->describe() << "\n";
    if (r.pass) {
      std::cout << "pass: no relation of length <= " << depth << " (" << r.words_checked << " words)\n";
      return kExitOk;
    }
    std::cout << "counterexample: " << format_pair_word(r.counterexample) << "\n";
    return kExitRelation;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ScopeError& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return kExitScope;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free subgroups of one-relator relative presentations"};
  app.require_subcommand(1);

  std::string target;
  bool json = false, verbose = false;
  auto* analyze = app.add_subcommand("analyze", "classify a presentation file or a directory of *.rel files");
  analyze->add_option("path", target, "presentation file or directory")->required();
  analyze->add_flag("--json", json, "print the JSON report");
  analyze->add_flag("--trace-verbose", verbose, "include intermediate words");

  std::string vpath, u, v;
  std::size_t depth = 10;
  auto* verify = app.add_subcommand("verify", "bounded relation search for a pair in a computable model");
  verify->add_option("path", vpath, "presentation file")->required();
  verify->add_option("--u", u, "first element, e.g. \"g1\"")->required();
  verify->add_option("--v", v, "second element, e.g. \"t^-1 g t\"")->required();
  verify->add_option("--depth", depth, "maximal relation length")->check(CLI::Range(1, 24));

  auto* oracle = app.add_subcommand("oracle", "brute-force reference evaluations");
  oracle->require_subcommand(1);
  std::string seq, power_word, matrix;
  auto* o_complexity = oracle->add_subcommand("complexity", "complexity class of a cyclic sign sequence");
  o_complexity->add_option("--seq", seq, "e.g. \"++-\"")->required();
  auto* o_power = oracle->add_subcommand("power", "proper-power decomposition of a free-group word");
  o_power->add_option("word", power_word, "e.g. \"x1 x2 x1 x2\"")->required();
  auto* o_snf = oracle->add_subcommand("snf", "Smith invariants by gcd of minors");
  o_snf->add_option("matrix", matrix, "rows separated by ';'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (*analyze) return run_analyze(target, json, verbose);
  if (*verify) return run_verify(vpath, u, v, depth);

  try {
    if (*o_complexity) {
      std::cout << oracle::to_string(oracle::complexity(oracle::parse_signs(seq))) << "\n";
    } else if (*o_power) {
      std::string prefix;
      auto w = oracle::parse_word(power_word, &prefix);
      auto p = oracle::proper_power(w);
      if (p) {
        std::cout << "root " << oracle::format_word(p->root, prefix) << ", k=" << p->exponent << "\n";
      } else {
        std::cout << "not a proper power\n";
      }
    } else if (*o_snf) {
      auto d = oracle::smith_invariants(oracle::parse_matrix(matrix));
      for (std::size_t i = 0; i < d.size(); ++i) std::cout << (i ? " " : "") << d[i];
      std::cout << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
