#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "relfree/free_word.hpp"

namespace relfree {

// Endomorphism of F_2 = <a, b> (letters +-1, +-2) given by the images of
// the generators.
struct F2Automorphism {
  FreeWord image_a{1};
  FreeWord image_b{2};

  static F2Automorphism identity() { return {}; }

  FreeWord apply(std::span<const Letter> w) const;
  // (next o this): first this, then next.
  F2Automorphism then(const F2Automorphism& next) const;

  auto operator<=>(const F2Automorphism&) const = default;
  bool operator==(const F2Automorphism&) const = default;
};

// The nontrivial Whitehead automorphisms of F_2: seven signed permutations
// of {a, b} and twelve transvection/partial-conjugation moves.
const std::vector<F2Automorphism>& whitehead_automorphisms();

struct WhiteheadResult {
  std::size_t minimal_length = 0;
  // Cyclic normal forms (least rotation over w and w^-1) of every
  // minimal-length cyclic word in the Aut(F_2)-orbit, sorted. Each stands
  // for its full rotation/inversion class; see expanded().
  std::vector<FreeWord> canonical_set;
  FreeWord minimal_word;          // first minimal representative reached
  F2Automorphism to_minimal;      // input -> minimal_word, up to rotation and inversion
  // For each canonical word, an automorphism taking minimal_word to it
  // (up to rotation and inversion).
  std::map<FreeWord, F2Automorphism> paths;

  bool contains(std::span<const Letter> w) const;
  // All rotations of every member and of its inverse, sorted.
  std::vector<FreeWord> expanded() const;
};

// Greedy Whitehead descent to minimal length, then breadth-first closure
// over length-preserving moves. Letters must be +-1 or +-2.
WhiteheadResult whitehead_minimize(std::span<const Letter> v);

}  // namespace relfree
