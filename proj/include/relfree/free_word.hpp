#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace relfree {

// A letter of a free group: +i is the generator a_i, -i its inverse (i >= 1).
using Letter = std::int64_t;
using FreeWord = std::vector<Letter>;

// Free reduction of an arbitrary letter sequence.
FreeWord free_reduce(std::span<const Letter> letters);
FreeWord free_inverse(std::span<const Letter> w);
FreeWord free_concat(std::span<const Letter> a, std::span<const Letter> b);
FreeWord free_power(std::span<const Letter> w, std::int64_t k);

bool is_freely_reduced(std::span<const Letter> w);
bool is_cyclically_reduced(std::span<const Letter> w);

struct CyclicReduction {
  FreeWord core;        // cyclically reduced
  FreeWord conjugator;  // w == conjugator^-1 * core * conjugator
};

// Requires w freely reduced.
CyclicReduction free_cyclic_reduce(std::span<const Letter> w);

FreeWord rotate_left(std::span<const Letter> w, std::size_t k);

// Least cyclic rotation of w among the rotations of w and of w^-1.
// Two cyclically reduced words are conjugate up to inversion iff these agree.
FreeWord cyclic_normal_form(std::span<const Letter> w);

// Letters printed with the given symbol prefix, e.g. "x1 x2^-1" or "a b^-2".
// Runs of one letter are collapsed into powers.
std::string format_free_word(std::span<const Letter> w, const std::string& prefix,
                             bool bare_when_rank_one = false);

// Rank-two words spelled with a and b.
std::string format_f2_word(std::span<const Letter> w);

}  // namespace relfree
