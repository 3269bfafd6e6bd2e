#pragma once

#include <random>
#include <string>
#include <vector>

#include "relfree/backend.hpp"
#include "relfree/relative_word.hpp"

namespace relfree::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261019);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

// Freely reduced word of exactly `len` letters over +-1..+-rank.
inline FreeWord random_reduced(int rank, std::size_t len) {
  FreeWord w;
  while (w.size() < len) {
    Letter x = uniform(1, rank) * (uniform(0, 1) ? 1 : -1);
    if (!w.empty() && w.back() == -x) continue;
    w.push_back(x);
  }
  return w;
}

inline Element random_element(const Backend& b, int size) {
  if (b.kind() == BackendKind::Free) return Element{random_reduced(b.rank(), static_cast<std::size_t>(uniform(0, size)))};
  Element e = b.identity();
  for (auto& x : e.data) x = uniform(-size, size);
  return e;
}

inline Element random_nontrivial(const Backend& b, int size) {
  for (;;) {
    Element e = random_element(b, size);
    if (!b.is_identity(e)) return e;
  }
}

// Random word of G * T with `syllables` T-syllables.
inline RelativeWord random_relative(const Signature& sig, int syllables, int size = 2) {
  std::vector<Piece> pieces;
  for (int i = 0; i < syllables; ++i) {
    pieces.push_back({Factor::Coefficient, random_element(sig.coeff, size)});
    pieces.push_back({Factor::TPart, random_nontrivial(sig.tpart, size)});
  }
  pieces.push_back({Factor::Coefficient, random_element(sig.coeff, size)});
  return RelativeWord::from_pieces(sig, pieces);
}

}  // namespace relfree::testing
