#include <array>
#include <functional>

#include "doctest.h"
#include "relfree/hnn.hpp"
#include "relfree/normal_forms.hpp"
#include "support.hpp"

using namespace relfree;
using namespace relfree::testing;

namespace {

const Backend kZ = Backend::cyclic();
const Backend kZ2 = Backend::free_abelian(2);

Syllable A(std::vector<std::int64_t> v) { return {Side::A, Element{std::move(v)}}; }
Syllable B(std::vector<std::int64_t> v) { return {Side::B, Element{std::move(v)}}; }

// Sanov: a -> [[1,2],[0,1]], b -> [[1,0],[2,1]] freely generate.
using Mat = std::array<std::int64_t, 4>;
Mat mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}
const std::array<Mat, 4> kSanov{Mat{1, 2, 0, 1}, Mat{1, -2, 0, 1}, Mat{1, 0, 2, 1}, Mat{1, 0, -2, 1}};
const std::array<Syllable, 4> kLetters{Syllable{Side::A, Element{{1}}}, Syllable{Side::A, Element{{-1}}},
                                       Syllable{Side::B, Element{{1}}}, Syllable{Side::B, Element{{-1}}}};

std::vector<Syllable> random_syllables(const Backend& a, const Backend& b, int n) {
  std::vector<Syllable> w;
  for (int i = 0; i < n; ++i) {
    bool side_a = uniform(0, 1) == 0;
    w.push_back({side_a ? Side::A : Side::B, random_element(side_a ? a : b, 2)});
  }
  return w;
}

}  // namespace

TEST_CASE("free product normal form") {
  auto x = free_product_nf({A({1}), B({1}), B({-1}), A({1})}, kZ, kZ);
  CHECK(x.syllables == std::vector<Syllable>{A({2})});
  auto y = free_product_nf({A({1}), B({1}), A({-1}), B({1})}, kZ, kZ);
  CHECK(y.syllables.size() == 4);
  CHECK(free_product_nf({A({1}), A({-1})}, kZ, kZ).is_identity());
}

TEST_CASE("amalgam normal form examples") {
  Amalgam am(kZ2, Element{{1, 0}}, kZ2, Element{{-1, 0}});
  CHECK(amalgam_nf({A({1, 0}), B({1, 0})}, am).is_identity());
  auto two = amalgam_nf({A({0, 1}), B({0, 1})}, am);
  CHECK(two.syllables.size() == 2);
  CHECK_FALSE(two.is_identity());
  // a1 a2 c1 = a2 (a1 c1) = a2.
  CHECK(amalgam_nf({A({1, 0}), A({0, 1}), B({1, 0})}, am) == amalgam_nf({A({0, 1})}, am));
  // Both sides nontrivial or both trivial.
  CHECK_THROWS(Amalgam(kZ, Element{{0}}, kZ, Element{{1}}));
}

TEST_CASE("free product and Sanov matrices agree on words up to length 8") {
  Amalgam fp = Amalgam::free_product(kZ, kZ);
  std::uint64_t words = 0;
  std::function<void(const ReducedSequence&, const Mat&, int)> walk = [&](const ReducedSequence& nf, const Mat& m,
                                                                          int left) {
    bool id_matrix = m == Mat{1, 0, 0, 1};
    CHECK(nf.is_identity() == id_matrix);
    ++words;
    if (left == 0) return;
    for (std::size_t i = 0; i < 4; ++i) {
      walk(fp.multiply(nf, fp.normal_form({kLetters[i]})), mul(m, kSanov[i]), left - 1);
    }
  };
  walk(fp.identity(), Mat{1, 0, 0, 1}, 8);
  CHECK(words == 87381);
}

TEST_CASE("normal forms are idempotent homomorphisms") {
  struct Case {
    Backend a, b;
    Element ea, eb;
  };
  std::vector<Case> cases{{kZ, kZ, Element{{0}}, Element{{0}}},
                          {kZ, kZ, Element{{2}}, Element{{3}}},
                          {kZ2, kZ2, Element{{1, 0}}, Element{{-1, 0}}},
                          {Backend::free(2), kZ2, Element{{1, 2}}, Element{{2, 1}}},
                          {Backend::free(2), Backend::free(2), Element{{1}}, Element{{2, 2}}}};
  for (const auto& c : cases) {
    Amalgam am(c.a, c.ea, c.b, c.eb);
    for (int i = 0; i < 300; ++i) {
      auto x = random_syllables(c.a, c.b, static_cast<int>(uniform(0, 6)));
      auto y = random_syllables(c.a, c.b, static_cast<int>(uniform(0, 6)));
      auto nx = amalgam_nf(x, am), ny = amalgam_nf(y, am);
      CHECK(amalgam_nf(am.to_word(nx), am) == nx);
      auto xy = x;
      xy.insert(xy.end(), y.begin(), y.end());
      CHECK(amalgam_nf(xy, am) == am.multiply(nx, ny));
      CHECK(am.multiply(nx, am.inverse(nx)).is_identity());
      if (c.ea.data == std::vector<std::int64_t>{0}) {
        CHECK(free_product_nf(xy, c.a, c.b) == amalgam_nf(xy, am));
      }
    }
  }
}

TEST_CASE("amalgam relations hold") {
  // Z *_{a^2 = b^3} Z: a^2 b^-3 is trivial, a b^-1 is not.
  Amalgam am(kZ, Element{{2}}, kZ, Element{{3}});
  CHECK(amalgam_nf({A({2}), B({-3})}, am).is_identity());
  CHECK(amalgam_nf({A({4}), B({-1}), B({-5})}, am).is_identity());
  CHECK_FALSE(amalgam_nf({A({1}), B({-1})}, am).is_identity());
  // a^2 is central: a^2 b = b a^2.
  CHECK(amalgam_nf({A({2}), B({1})}, am) == amalgam_nf({B({1}), A({2})}, am));
}

TEST_CASE("Britton reduction in BS(1,2)") {
  const Element t{{1}};
  auto reduce = [&](FreeWord w) { return britton_reduce(hnn_from_f2(w), kZ, t, 2); };
  CHECK(reduce({-1, 2, 1, -2, -2}).is_identity());
  auto r = reduce({-1, 2, 1});
  CHECK(r.stable.empty());
  CHECK(r.base == std::vector<std::int64_t>{2});
  auto s = reduce({2, 1, 2, -1});
  CHECK(s.stable.size() == 2);
  CHECK_FALSE(bs12_matrix(FreeWord{2, 1, 2, -1}).is_identity());
}

TEST_CASE("BS(1,2) matrices") {
  CHECK(bs12_matrix(FreeWord{-1, 2, 1, -2, -2}).is_identity());
  Mat2Q t = bs12_matrix(FreeWord{2});
  CHECK(t.e[0] == 1);
  CHECK(t.e[1] == 1);
  CHECK(t.e[2] == 0);
  CHECK(t.e[3] == 1);
  Mat2Q c = bs12_matrix(FreeWord{1, 2, -1});
  CHECK(c.e[1] == mpq_class(1, 2));
  for (int i = 0; i < 200; ++i) {
    auto x = random_reduced(2, static_cast<std::size_t>(uniform(0, 8)));
    auto y = random_reduced(2, static_cast<std::size_t>(uniform(0, 8)));
    CHECK(bs12_matrix(free_concat(x, y)) == bs12_matrix(x) * bs12_matrix(y));
    CHECK((bs12_matrix(x) * bs12_matrix(x).inverse()).is_identity());
  }
}

TEST_CASE("Britton and matrices agree on reduced words up to length 8") {
  const Element t{{1}};
  FreeWord w;
  std::function<void(const Mat2Q&)> walk = [&](const Mat2Q& m) {
    CHECK(britton_reduce(hnn_from_f2(w), kZ, t, 2).is_identity() == m.is_identity());
    if (w.size() == 8) return;
    for (Letter x : {1, -1, 2, -2}) {
      if (!w.empty() && w.back() == -x) continue;
      w.push_back(x);
      walk(m * bs12_generator(x));
      w.pop_back();
    }
  };
  walk(Mat2Q::identity());
}
