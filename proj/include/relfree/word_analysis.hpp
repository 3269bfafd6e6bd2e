#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relfree/integer_matrix.hpp"
#include "relfree/relative_word.hpp"

namespace relfree {

// Three-way split of the complexity of a cyclically reduced word over
// G * <t>: Zero when every t-exponent has the same sign; One when both signs
// occur but one sign never appears in two cyclically adjacent positions;
// Higher otherwise.
enum class ComplexityClass { Zero, One, Higher };

std::string to_string(ComplexityClass c);

struct UnimodularityReport {
  enum class Flavor { Cyclic, General };

  Flavor flavor = Flavor::Cyclic;
  std::int64_t exponent_sum = 0;  // cyclic flavor only
  bool cond_infinite_order = false;
  bool cond_normal = false;
  bool cond_quotient_strong_up = false;
  bool overall = false;
  std::string diagnostic;
};

// Exponent sum of t equals 1. T-part must have rank one.
UnimodularityReport is_unimodular_cyclic(const RelativeWord& w);

// The three conditions on sigma = product of the T-syllables: infinite
// order, <sigma> normal in T, T/<sigma> strong-UP. For Z^r the last one is
// decided as "sigma primitive" (then the quotient is Z^(r-1), orderable).
UnimodularityReport is_unimodular_general(const RelativeWord& w);

// Exponent of a single T-syllable when the T-part has rank one.
std::int64_t syllable_exponent(const Backend& tpart, const Element& tau);

// Signs of the t-letters of w, multi-letter syllables split into letters.
std::vector<int> exponent_signs(const RelativeWord& w);

ComplexityClass complexity_of_signs(std::span<const int> signs);

// Requires w cyclically reduced with a rank-one T-part; throws
// PreconditionError on an empty exponent sequence.
ComplexityClass complexity(const RelativeWord& w);

struct ProperPower {
  FreeWord root;
  std::int64_t exponent;
};

// (u, k) with v = u^k, k >= 2 maximal. Requires v cyclically reduced and
// nonempty.
std::optional<ProperPower> is_proper_power(std::span<const Letter> v);

// c t prod_{i=0..m} (b_i a_i^t), with a_i^t = t^-1 a_i t.
struct Form1 {
  Signature sig;
  Element c;
  std::vector<std::pair<Element, Element>> pairs;  // (b_i, a_i)

  std::size_t m() const { return pairs.size() - 1; }
  const Element& a_last() const { return pairs.back().second; }
  const Element& b_first() const { return pairs.front().first; }
  RelativeWord rebuild() const;
};

// Requires w unimodular with a cyclic reduction of complexity One; the
// result is conjugate to w.
Form1 to_form1(const RelativeWord& w);

struct CosetEntry {
  Element coefficient;   // g_i
  IntVector label;       // image of the prefix in T / <t>
  IntVector rep;         // c_x
  std::int64_t k = 0;    // prefix == c_x + k t
};

// w == (prod_i p_i g_i p_i^-1) * t, where p_i is the product of the
// T-syllables preceding g_i and t the product of all of them.
struct CosetForm {
  Signature sig;
  Element t;
  std::vector<CosetEntry> entries;
  std::vector<IntVector> x1;  // distinct labels, sorted

  RelativeWord reassemble() const;
};

// True when the T-syllables generate a cyclic subgroup of the (free
// abelian) T-part.
bool tsyllables_generate_cyclic(const RelativeWord& w);

// Coset data without the noncyclicity requirement. Requires a free abelian
// T-part and general unimodularity.
CosetForm compute_coset_form(const RelativeWord& w);

// As compute_coset_form, additionally requiring the T-syllables to generate
// a noncyclic subgroup (then |X1| >= 2).
CosetForm coset_rewrite(const RelativeWord& w);

}  // namespace relfree
