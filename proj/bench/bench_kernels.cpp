// Serial reference vs OpenMP timings for the bounded relation check and
// batch analysis. Results of both versions must agree.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "relfree/batch.hpp"
#include "relfree/bounded_check.hpp"
#include "relfree/models.hpp"

using namespace relfree;

namespace {

template <class F>
double time_it(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const RelationSearchResult& a, const RelationSearchResult& b) {
  return a.pass == b.pass && a.counterexample == b.counterexample && a.words_checked == b.words_checked;
}

template <class Model>
bool bench_check(const char* name, const Model& model, const typename Model::Elem& u,
                 const typename Model::Elem& v, std::size_t depth) {
  RelationSearchResult s, p;
  double ts = time_it([&] { s = bounded_no_relation_check_serial(model, u, v, depth); });
  double tp = time_it([&] { p = bounded_no_relation_check(model, u, v, depth); });
  std::printf("%-28s depth %2zu  words %10llu  serial %8.3f s  parallel %8.3f s  speedup %5.2f  %s\n", name, depth,
              static_cast<unsigned long long>(s.words_checked), ts, tp, ts / tp, same(s, p) ? "agree" : "DIFFER");
  return same(s, p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernel benchmark"};
  std::size_t depth = 12;
  int copies = 5;
  std::string data_dir = RELFREE_DATA;
  app.add_option("--depth", depth, "bounded check depth")->check(CLI::Range(1, 16));
  app.add_option("--copies", copies, "times the presentation directory is repeated in the batch")
      ->check(CLI::Range(1, 1000));
  app.add_option("--data", data_dir, "directory of .rel files");
  CLI11_PARSE(app, argc, argv);

  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  bool ok = true;

  BackendModel f2{Backend::free(2)};
  ok &= bench_check("free group F_2 (g1, g2)", f2, Element{{1}}, Element{{2}}, depth);

  BackendModel z2{Backend::free_abelian(2)};
  ok &= bench_check("Z^2 (relation at 4)", z2, Element{{1, 0}}, Element{{0, 1}}, depth);

  AmalgamModel am{Amalgam(Backend::free_abelian(2), Element{{1, 0}}, Backend::free_abelian(2), Element{{-1, 0}})};
  ReducedSequence u = am.amalgam.normal_form({{Side::A, Element{{0, 1}}}});
  ReducedSequence v = am.amalgam.normal_form({{Side::B, Element{{0, 1}}}, {Side::A, Element{{0, 1}}},
                                              {Side::B, Element{{0, -1}}}});
  ok &= bench_check("amalgam Z^2 *_Z Z^2", am, u, v, depth);

  std::vector<std::filesystem::path> files;
  auto base = presentation_files(data_dir);
  for (int i = 0; i < copies; ++i) files.insert(files.end(), base.begin(), base.end());
  std::vector<FileResult> s, p;
  double ts = time_it([&] { s = analyze_batch_serial(files); });
  double tp = time_it([&] { p = analyze_batch(files); });
  bool agree = s.size() == p.size();
  for (std::size_t i = 0; agree && i < s.size(); ++i) agree = s[i].json == p[i].json && s[i].exit_code == p[i].exit_code;
  std::printf("%-28s files %4zu  serial %8.3f s  parallel %8.3f s  speedup %5.2f  %s\n", "batch analyze", files.size(),
              ts, tp, ts / tp, agree ? "agree" : "DIFFER");
  ok &= agree;
  return ok ? 0 : 1;
}
