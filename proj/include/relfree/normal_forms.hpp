#pragma once

#include <cstdint>
#include <vector>

#include "relfree/backend.hpp"

namespace relfree {

enum class Side { A, B };

struct Syllable {
  Side side;
  Element value;

  bool operator==(const Syllable&) const = default;
};

// Normal form in A *_C B for cyclic C: alternating nontrivial coset
// representatives followed by c^trailing, c the generator of C on the A
// side. The identity is the empty sequence with trailing 0.
struct ReducedSequence {
  std::vector<Syllable> syllables;
  std::int64_t trailing = 0;

  bool is_identity() const { return syllables.empty() && trailing == 0; }
  bool operator==(const ReducedSequence&) const = default;
};

// Left cosets x<a> in a backend, with a fixed representative per coset:
// Hermite-reduced vectors for Z^r, shortest-then-lexicographic words for F_r.
class CyclicCosetChooser {
 public:
  struct Split {
    Element rep;
    std::int64_t k;  // x == rep * a^k
  };

  // a may be the identity (trivial subgroup: every element is its own rep).
  CyclicCosetChooser(Backend backend, Element a);

  Split split(const Element& x) const;
  const Backend& backend() const { return backend_; }
  const Element& generator() const { return a_; }

 private:
  Backend backend_;
  Element a_;
  FreeWord core_;  // cyclic reduction of a, free backends
  FreeWord conj_;
};

// A *_{a = b} B with <a> identified to <b> via a^k <-> b^k. With both a and
// b trivial this is the free product A * B.
class Amalgam {
 public:
  Amalgam(Backend a_side, Element a, Backend b_side, Element b);
  static Amalgam free_product(Backend a_side, Backend b_side);

  const Backend& backend(Side s) const { return s == Side::A ? a_.backend() : b_.backend(); }

  ReducedSequence identity() const { return {}; }
  ReducedSequence normal_form(const std::vector<Syllable>& word) const;
  ReducedSequence multiply(const ReducedSequence& x, const ReducedSequence& y) const;
  ReducedSequence inverse(const ReducedSequence& x) const;
  // The element back as a word (syllables then the trailing power on side A).
  std::vector<Syllable> to_word(const ReducedSequence& x) const;

 private:
  void append(ReducedSequence& acc, const Syllable& s) const;
  const CyclicCosetChooser& chooser(Side s) const { return s == Side::A ? a_ : b_; }

  CyclicCosetChooser a_;
  CyclicCosetChooser b_;
};

// Normal form in the free product A * B (no amalgamation).
ReducedSequence free_product_nf(const std::vector<Syllable>& word, const Backend& a_side,
                                const Backend& b_side);

// Normal form in the amalgam; unique for the fixed coset choosers.
ReducedSequence amalgam_nf(const std::vector<Syllable>& word, const Amalgam& amalgam);

}  // namespace relfree
