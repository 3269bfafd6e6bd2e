#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relfree/free_word.hpp"

namespace relfree {

// Element of a backend group. For free abelian backends `data` is the
// exponent vector (length = rank); for free backends it is a freely reduced
// word in letters +-1..+-rank. Equality is equality of canonical forms.
struct Element {
  std::vector<std::int64_t> data;

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;
};

// One factor g_i^e of a token product.
struct GenPower {
  int index;  // 1-based generator index
  std::int64_t exponent;
};

// Index of a subgroup: a positive integer or infinity.
class GroupIndex {
 public:
  static GroupIndex finite(std::uint64_t n) { return GroupIndex(n); }
  static GroupIndex infinite() { return GroupIndex(0); }

  bool is_infinite() const { return value_ == 0; }
  std::uint64_t value() const { return value_; }

  // Strict comparison against a finite bound; infinity exceeds every bound.
  bool exceeds(std::uint64_t bound) const { return is_infinite() || value_ > bound; }

  std::string to_string() const { return is_infinite() ? "infinite" : std::to_string(value_); }
  bool operator==(const GroupIndex&) const = default;

 private:
  explicit GroupIndex(std::uint64_t v) : value_(v) {}
  std::uint64_t value_;  // 0 encodes infinity
};

enum class BackendKind { FreeAbelian, Free };

// A concrete torsion-free group with solvable word problem: Z^r or F_r,
// r >= 1. Z itself is FreeAbelian of rank 1. All of these are locally
// indicable, hence have the strong unique-product property.
class Backend {
 public:
  static Backend cyclic() { return Backend(BackendKind::FreeAbelian, 1); }
  static Backend free_abelian(int rank) { return Backend(BackendKind::FreeAbelian, rank); }
  static Backend free(int rank) { return Backend(BackendKind::Free, rank); }

  BackendKind kind() const { return kind_; }
  int rank() const { return rank_; }

  bool is_cyclic() const { return rank_ == 1; }
  bool is_trivial() const { return false; }
  bool is_abelian() const { return kind_ == BackendKind::FreeAbelian || rank_ == 1; }
  bool has_free_subgroup() const { return kind_ == BackendKind::Free && rank_ >= 2; }
  bool strong_up() const { return true; }

  Element identity() const;
  // g_i (1-based), raised to `exponent`.
  Element generator(int index, std::int64_t exponent = 1) const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element power(const Element& a, std::int64_t k) const;
  bool is_identity(const Element& a) const { return a.data.empty() || is_zero_vector(a); }

  // Throws PreconditionError when a generator index is out of range.
  Element evaluate(std::span<const GenPower> tokens) const;

  // Word length: L1 norm for Z^r, reduced length for F_r.
  std::uint64_t length(const Element& a) const;

  // The element as a sequence of generator powers (inverse of evaluate).
  std::vector<GenPower> to_tokens(const Element& a) const;

  // "Z", "Z^3", "F_2".
  std::string describe() const;

  bool operator==(const Backend&) const = default;

 private:
  Backend(BackendKind kind, int rank);
  bool is_zero_vector(const Element& a) const;

  BackendKind kind_;
  int rank_;
};

// k with g = a^k, if g lies in <a>. k is 0 iff g is the identity; when a is
// the identity only the identity is a member.
std::optional<std::int64_t> cyclic_membership(const Backend& b, const Element& g,
                                              const Element& a);

// |B : <a>|. Throws PreconditionError when a is the identity.
GroupIndex cyclic_index(const Backend& b, const Element& a);

}  // namespace relfree
