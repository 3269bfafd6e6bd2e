#include "doctest.h"
#include "relfree/bounded_check.hpp"
#include "relfree/models.hpp"
#include "support.hpp"

using namespace relfree;
using namespace relfree::testing;

namespace {

bool conjugate_up_to_inverse(const std::vector<int>& x, const std::vector<int>& y) {
  FreeWord a(x.begin(), x.end()), b(y.begin(), y.end());
  return cyclic_normal_form(free_cyclic_reduce(a).core) == cyclic_normal_form(free_cyclic_reduce(b).core);
}

}  // namespace

TEST_CASE("pair word formatting") {
  CHECK(format_pair_word(std::vector<int>{-1, 2, 1, -2, -2}) == "u^-1 v u v^-2");
  CHECK(format_pair_word(std::vector<int>{1, 1, -2}) == "u^2 v^-1");
}

TEST_CASE("free basis passes") {
  AmalgamModel fp{Amalgam::free_product(Backend::cyclic(), Backend::cyclic())};
  auto u = fp.amalgam.normal_form({{Side::A, Element{{1}}}});
  auto v = fp.amalgam.normal_form({{Side::B, Element{{1}}}});
  auto r = bounded_no_relation_check(fp, u, v, 8);
  CHECK(r.pass);
  CHECK(r.words_checked == 13120);
  BackendModel f2{Backend::free(2)};
  CHECK(bounded_no_relation_check(f2, Element{{1}}, Element{{2}}, 8).pass);
}

TEST_CASE("a and a^2 satisfy a relation of length 3") {
  for (auto b : {Backend::cyclic(), Backend::free(2), Backend::free_abelian(2)}) {
    BackendModel m{b};
    Element a = b.generator(1);
    auto r = bounded_no_relation_check(m, a, b.power(a, 2), 3);
    CHECK_FALSE(r.pass);
    CHECK(r.counterexample.size() == 3);
    CHECK(format_pair_word(r.counterexample) == "u^2 v^-1");
  }
}

TEST_CASE("BS(1,2) generators satisfy the relator") {
  Bs12Model m;
  auto r = bounded_no_relation_check(m, bs12_generator(1), bs12_generator(2), 5);
  CHECK_FALSE(r.pass);
  CHECK(r.counterexample.size() == 5);
  CHECK(format_pair_word(r.counterexample) == "u v^2 u^-1 v^-1");
  CHECK(conjugate_up_to_inverse(r.counterexample, {-1, 2, 1, -2, -2}));
  CHECK(bounded_no_relation_check(m, bs12_generator(1), bs12_generator(2), 4).pass);
}

TEST_CASE("parallel search returns the serial counterexample") {
  struct Case {
    Backend b;
    int size;
  };
  for (const auto& c : {Case{Backend::free(2), 2}, Case{Backend::free_abelian(2), 1}, Case{Backend::free(3), 1}}) {
    BackendModel m{c.b};
    for (int i = 0; i < 60; ++i) {
      Element u = random_element(c.b, c.size), v = random_element(c.b, c.size);
      auto depth = static_cast<std::size_t>(uniform(1, 6));
      auto s = bounded_no_relation_check_serial(m, u, v, depth);
      auto p = bounded_no_relation_check(m, u, v, depth);
      CHECK(s.pass == p.pass);
      CHECK(s.counterexample == p.counterexample);
      if (s.pass) CHECK(s.words_checked == p.words_checked);
      // Monotone in depth.
      if (s.pass && depth > 1) CHECK(bounded_no_relation_check(m, u, v, depth - 1).pass);
    }
  }
}
