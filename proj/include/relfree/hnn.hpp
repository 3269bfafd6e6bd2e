#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "relfree/backend.hpp"
#include "relfree/free_word.hpp"

namespace relfree {

// g_0 s^{e_1} g_1 ... s^{e_k} g_k over an infinite cyclic base <c>, each
// base element stored as its exponent and each stable letter as +-1.
struct HnnWord {
  std::vector<std::int64_t> base{0};  // k + 1 entries
  std::vector<int> stable;            // k entries, each +1 or -1

  bool is_identity() const { return stable.empty() && base.size() == 1 && base[0] == 0; }
  bool operator==(const HnnWord&) const = default;
};

// The word over F_2 read with letter 1 (a) as the stable letter and letter 2
// (b) as the base generator. BS(1,2) = <g, t | g^-1 t g = t^2> is the case
// a = g, b = t.
HnnWord hnn_from_f2(std::span<const Letter> w);

// Britton reduction in <base, s | s^-1 x s = x^m for x in <a>>, base infinite
// cyclic, a a nontrivial element of it, m != 0. Pinches s^-1 a^j s -> a^{jm}
// and s a^{jm} s^-1 -> a^j are removed until none remain; the result is
// the identity iff h represents 1.
HnnWord britton_reduce(const HnnWord& h, const Backend& base, const Element& a, std::int64_t m);

// Exact 2x2 rational matrix.
struct Mat2Q {
  std::array<mpq_class, 4> e{1, 0, 0, 1};  // row-major

  static Mat2Q identity() { return {}; }
  Mat2Q operator*(const Mat2Q& rhs) const;
  Mat2Q inverse() const;
  bool is_identity() const { return e[0] == 1 && e[1] == 0 && e[2] == 0 && e[3] == 1; }
  bool operator==(const Mat2Q& rhs) const { return e == rhs.e; }
};

// Faithful representation of BS(1,2): g -> diag(1/2, 1), t -> [[1,1],[0,1]];
// letter 1 is g, letter 2 is t.
Mat2Q bs12_matrix(std::span<const Letter> w);
Mat2Q bs12_generator(Letter x);

}  // namespace relfree
