#include "doctest.h"
#include "oracles.hpp"
#include "relfree/backend.hpp"
#include "relfree/errors.hpp"
#include "relfree/integer_matrix.hpp"
#include "support.hpp"

using namespace relfree;
using namespace relfree::testing;

TEST_CASE("evaluate on token products") {
  std::vector<GenPower> z{{1, 1}, {1, -4}};
  CHECK(Backend::cyclic().evaluate(z) == Element{{-3}});
  std::vector<GenPower> z2{{1, 1}, {2, 1}, {1, 1}};
  CHECK(Backend::free_abelian(2).evaluate(z2) == Element{{2, 1}});
  std::vector<GenPower> f2{{1, 1}, {2, 1}, {2, -1}};
  CHECK(Backend::free(2).evaluate(f2) == Element{{1}});
  std::vector<GenPower> bad{{3, 1}};
  CHECK_THROWS_AS(Backend::free(2).evaluate(bad), PreconditionError);
}

TEST_CASE("backend flags") {
  CHECK(Backend::cyclic().is_cyclic());
  CHECK(Backend::free(1).is_cyclic());
  CHECK_FALSE(Backend::free_abelian(2).is_cyclic());
  CHECK(Backend::free(2).has_free_subgroup());
  CHECK_FALSE(Backend::free(1).has_free_subgroup());
  CHECK_FALSE(Backend::free_abelian(5).has_free_subgroup());
  CHECK(Backend::free(3).strong_up());
  CHECK_FALSE(Backend::free(2).is_trivial());
  CHECK_THROWS(Backend::free(0));
  CHECK_THROWS(Backend::free_abelian(0));
}

TEST_CASE("cyclic membership") {
  auto z = Backend::cyclic();
  CHECK(cyclic_membership(z, Element{{6}}, Element{{3}}) == 2);
  CHECK(cyclic_membership(z, Element{{7}}, Element{{3}}) == std::nullopt);
  CHECK(cyclic_membership(z, Element{{0}}, Element{{0}}) == 0);
  CHECK(cyclic_membership(z, Element{{1}}, Element{{0}}) == std::nullopt);

  auto z2 = Backend::free_abelian(2);
  CHECK(cyclic_membership(z2, Element{{2, 1}}, Element{{1, 0}}) == std::nullopt);
  CHECK(cyclic_membership(z2, Element{{-4, 6}}, Element{{2, -3}}) == -2);

  auto f2 = Backend::free(2);
  CHECK(cyclic_membership(f2, Element{{1, 2, 1, 2}}, Element{{1, 2}}) == 2);
  CHECK(cyclic_membership(f2, Element{{-2, -1}}, Element{{1, 2}}) == -1);
  CHECK(cyclic_membership(f2, Element{{1, 1}}, Element{{1, 2}}) == std::nullopt);
  // Conjugated generator: (b a b^-1)^3 = b a^3 b^-1.
  CHECK(cyclic_membership(f2, Element{{2, 1, 1, 1, -2}}, Element{{2, 1, -2}}) == 3);
}

TEST_CASE("cyclic membership agrees with powers") {
  for (auto b : {Backend::cyclic(), Backend::free_abelian(3), Backend::free(2), Backend::free(3)}) {
    for (int i = 0; i < 200; ++i) {
      Element a = random_nontrivial(b, 3);
      std::int64_t k = uniform(-4, 4);
      Element g = b.power(a, k);
      auto got = cyclic_membership(b, g, a);
      REQUIRE(got.has_value());
      CHECK(b.power(a, *got) == g);
      Element h = random_element(b, 3);
      if (auto m = cyclic_membership(b, h, a)) CHECK(b.power(a, *m) == h);
    }
  }
}

TEST_CASE("cyclic index") {
  CHECK(cyclic_index(Backend::cyclic(), Element{{-3}}) == GroupIndex::finite(3));
  CHECK(cyclic_index(Backend::free(1), Element{{-1, -1}}) == GroupIndex::finite(2));
  CHECK(cyclic_index(Backend::free_abelian(2), Element{{1, 0}}).is_infinite());
  CHECK(cyclic_index(Backend::free(2), Element{{1}}).is_infinite());
  CHECK_THROWS_AS(cyclic_index(Backend::cyclic(), Element{{0}}), PreconditionError);
}

TEST_CASE("evaluate is a homomorphism on token concatenation") {
  for (auto b : {Backend::free_abelian(2), Backend::free(2), Backend::free(3)}) {
    for (int i = 0; i < 300; ++i) {
      Element x = random_element(b, 5), y = random_element(b, 5);
      auto tx = b.to_tokens(x), ty = b.to_tokens(y);
      CHECK(b.evaluate(tx) == x);
      std::vector<GenPower> both = tx;
      both.insert(both.end(), ty.begin(), ty.end());
      CHECK(b.evaluate(both) == b.multiply(x, y));
      CHECK(b.multiply(x, b.inverse(x)) == b.identity());
    }
  }
}

TEST_CASE("smith invariants match the gcd-of-minors oracle") {
  CHECK(smith_invariants({{2, 0}, {0, 3}}) == IntVector{1, 6});
  CHECK(smith_invariants({{0, 2}}) == IntVector{2});
  CHECK(abelianization_divisors({{0, 2}}, 2) == IntVector{2, 0});
  CHECK(abelianization_divisors({{-1, 1}}, 2) == IntVector{1, 0});
  for (int i = 0; i < 200; ++i) {
    auto rows = static_cast<std::size_t>(uniform(1, 4)), cols = static_cast<std::size_t>(uniform(1, 4));
    IntMatrix m(rows, IntVector(cols));
    for (auto& r : m)
      for (auto& x : r) x = uniform(-9, 9);
    CHECK(smith_invariants(m) == oracle::smith_invariants(m));
  }
}

TEST_CASE("coset representatives are constant on cosets") {
  for (int i = 0; i < 300; ++i) {
    int r = static_cast<int>(uniform(2, 4));
    IntVector sigma(static_cast<std::size_t>(r));
    do {
      for (auto& x : sigma) x = uniform(-5, 5);
    } while (!is_primitive(sigma));
    CosetComplement cc(sigma);
    IntVector tau(sigma.size());
    for (auto& x : tau) x = uniform(-9, 9);
    IntVector shifted = tau;
    std::int64_t j = uniform(-3, 3);
    for (std::size_t k = 0; k < tau.size(); ++k) shifted[k] += j * sigma[k];
    CHECK(cc.rep(tau) == cc.rep(shifted));
    CHECK(cc.multiple(shifted) == cc.multiple(tau) + j);
    CHECK(cc.quotient_coordinates(tau) == cc.quotient_coordinates(shifted));
    IntVector back = cc.rep(tau);
    for (std::size_t k = 0; k < tau.size(); ++k) back[k] += cc.multiple(tau) * sigma[k];
    CHECK(back == tau);
    CHECK(cc.rep(IntVector(sigma.size(), 0)) == IntVector(sigma.size(), 0));
  }
  CHECK_THROWS_AS(CosetComplement({2, 4}), PreconditionError);
}

TEST_CASE("complement basis sends sigma to e1") {
  for (int i = 0; i < 200; ++i) {
    IntVector sigma(3);
    do {
      for (auto& x : sigma) x = uniform(-7, 7);
    } while (!is_primitive(sigma));
    IntMatrix u = complement_basis(sigma);
    for (std::size_t row = 0; row < 3; ++row) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < 3; ++c) s += u[row][c] * sigma[c];
      CHECK(s == (row == 0 ? 1 : 0));
    }
    CHECK(smith_invariants(u) == IntVector{1, 1, 1});
  }
}
