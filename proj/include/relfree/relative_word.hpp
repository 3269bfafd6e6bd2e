#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "relfree/backend.hpp"

namespace relfree {

// The ambient free product G * T: a coefficient backend G and a T-part
// backend (F_n for ordinary presentations, Z^r for generalized ones).
struct Signature {
  Backend coeff;
  Backend tpart;

  bool operator==(const Signature&) const = default;
};

enum class Factor { Coefficient, TPart };

struct Piece {
  Factor factor;
  Element value;
};

// An element of G * T in reduced alternating form
//
//   g_0 tau_1 g_1 tau_2 ... tau_k g_k
//
// with every tau_i nontrivial and every interior g_i (0 < i < k) nontrivial.
// g_0 and g_k may be trivial. The empty word is k = 0, g_0 = 1.
class RelativeWord {
 public:
  explicit RelativeWord(Signature sig);

  static RelativeWord from_pieces(Signature sig, const std::vector<Piece>& pieces);
  static RelativeWord coefficient(Signature sig, Element g);
  static RelativeWord tpart(Signature sig, Element tau);

  const Signature& signature() const { return sig_; }
  const std::vector<Element>& coefficients() const { return coeffs_; }
  const std::vector<Element>& syllables() const { return syllables_; }
  std::size_t syllable_count() const { return syllables_.size(); }
  bool empty() const;

  // Number of nontrivial coefficients.
  std::size_t nontrivial_coefficients() const;
  // Free-product syllable length (nontrivial pieces).
  std::size_t length() const { return syllables_.size() + nontrivial_coefficients(); }

  // Cyclically reduced in G * T: cyclic syllable sequence alternates, and a
  // word lying in a single free factor is cyclically reduced there.
  bool is_cyclically_reduced() const;

  std::vector<Piece> pieces() const;

  RelativeWord operator*(const RelativeWord& rhs) const;
  RelativeWord inverse() const;
  RelativeWord power(std::int64_t k) const;
  // x^y = y^-1 x y.
  RelativeWord conjugate_by(const RelativeWord& y) const;

  bool operator==(const RelativeWord& rhs) const {
    return coeffs_ == rhs.coeffs_ && syllables_ == rhs.syllables_;
  }

 private:
  void push(const Piece& p);
  static bool is_cyclically_reduced_word(const Element& e);

  Signature sig_;
  std::vector<Element> coeffs_;     // k + 1 entries
  std::vector<Element> syllables_;  // k entries
};

// Token grammar: word := token+; token := sym ("^" int)?;
// sym := "g" int? | "x" int | "t". "g" aliases g1 and "t" aliases x1; a
// lone "1" is the identity.
// Throws ParseError on unknown symbols, exponent overflow, or indices
// beyond the declared ranks.
RelativeWord parse_word(std::string_view text, const Signature& sig);

// Inverse of parse_word on reduced words; "1" for the empty word.
std::string format_word(const RelativeWord& w);

struct CyclicReduceResult {
  RelativeWord core;        // cyclically reduced
  RelativeWord conjugator;  // w == conjugator^-1 * core * conjugator
};

CyclicReduceResult cyclic_reduce(const RelativeWord& w);

// Sum of exponents of x_j over all T-syllables (coordinate j for Z^r).
std::int64_t exponent_sum(const RelativeWord& w, int j);

// w' : the T-syllables concatenated and freely reduced. T-part must be free.
FreeWord erase_coefficients(const RelativeWord& w);

// For T-part of rank one: w or w^-1, whichever has non-negative t-exponent sum.
RelativeWord normalize_orientation(const RelativeWord& w);

// Product of all T-syllables, in order, evaluated in T.
Element t_product(const RelativeWord& w);

// Conjugacy in G * T.
bool are_conjugate(const RelativeWord& a, const RelativeWord& b);

}  // namespace relfree
