#include "relfree/backend.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "relfree/checked.hpp"
#include "relfree/errors.hpp"

namespace relfree {

Backend::Backend(BackendKind kind, int rank) : kind_(kind), rank_(rank) {
  if (rank < 1) throw PreconditionError("backend rank must be at least 1");
}

bool Backend::is_zero_vector(const Element& a) const {
  return kind_ == BackendKind::FreeAbelian &&
         std::all_of(a.data.begin(), a.data.end(), [](std::int64_t x) { return x == 0; });
}

Element Backend::identity() const {
  if (kind_ == BackendKind::FreeAbelian) {
    return Element{std::vector<std::int64_t>(static_cast<std::size_t>(rank_), 0)};
  }
  return Element{};
}

Element Backend::generator(int index, std::int64_t exponent) const {
  if (index < 1 || index > rank_) {
    throw PreconditionError("generator index " + std::to_string(index) + " out of range for " +
                            describe());
  }
  if (kind_ == BackendKind::FreeAbelian) {
    Element e = identity();
    e.data[static_cast<std::size_t>(index - 1)] = exponent;
    return e;
  }
  FreeWord letter{index};
  return Element{free_power(letter, exponent)};
}

Element Backend::multiply(const Element& a, const Element& b) const {
  if (kind_ == BackendKind::FreeAbelian) {
    Element out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = checked_add(out.data[i], b.data[i]);
    return out;
  }
  return Element{free_concat(a.data, b.data)};
}

Element Backend::inverse(const Element& a) const {
  if (kind_ == BackendKind::FreeAbelian) {
    Element out = a;
    for (auto& x : out.data) x = checked_neg(x);
    return out;
  }
  return Element{free_inverse(a.data)};
}

Element Backend::power(const Element& a, std::int64_t k) const {
  if (kind_ == BackendKind::FreeAbelian) {
    Element out = a;
    for (auto& x : out.data) x = checked_mul(x, k);
    return out;
  }
  return Element{free_power(a.data, k)};
}

Element Backend::evaluate(std::span<const GenPower> tokens) const {
  Element acc = identity();
  for (const auto& t : tokens) acc = multiply(acc, generator(t.index, t.exponent));
  return acc;
}

std::uint64_t Backend::length(const Element& a) const {
  if (kind_ == BackendKind::Free) return a.data.size();
  std::uint64_t n = 0;
  for (auto x : a.data) n += static_cast<std::uint64_t>(x < 0 ? -x : x);
  return n;
}

std::vector<GenPower> Backend::to_tokens(const Element& a) const {
  std::vector<GenPower> out;
  if (kind_ == BackendKind::FreeAbelian) {
    for (std::size_t i = 0; i < a.data.size(); ++i) {
      if (a.data[i] != 0) out.push_back({static_cast<int>(i + 1), a.data[i]});
    }
    return out;
  }
  for (Letter x : a.data) {
    int gen = static_cast<int>(std::abs(x));
    std::int64_t e = x > 0 ? 1 : -1;
    if (!out.empty() && out.back().index == gen && (out.back().exponent > 0) == (e > 0)) {
      out.back().exponent += e;
    } else {
      out.push_back({gen, e});
    }
  }
  return out;
}

std::string Backend::describe() const {
  if (kind_ == BackendKind::FreeAbelian) {
    return rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
  }
  return "F_" + std::to_string(rank_);
}

std::optional<std::int64_t> cyclic_membership(const Backend& b, const Element& g,
                                              const Element& a) {
  if (b.is_identity(g)) return 0;
  if (b.is_identity(a)) return std::nullopt;

  if (b.kind() == BackendKind::FreeAbelian) {
    std::size_t pivot = 0;
    while (a.data[pivot] == 0) ++pivot;
    if (g.data[pivot] % a.data[pivot] != 0) return std::nullopt;
    std::int64_t k = g.data[pivot] / a.data[pivot];
    for (std::size_t i = 0; i < a.data.size(); ++i) {
      std::int64_t prod;
      if (__builtin_mul_overflow(a.data[i], k, &prod) || prod != g.data[i]) return std::nullopt;
    }
    return k;
  }

  // a = c^-1 core c, so a^k = c^-1 core^k c and g in <a> iff c g c^-1 in <core>.
  auto [core, conj] = free_cyclic_reduce(a.data);
  FreeWord inner = free_concat(free_concat(conj, g.data), free_inverse(conj));
  if (inner.size() % core.size() != 0) return std::nullopt;
  auto k = static_cast<std::int64_t>(inner.size() / core.size());
  for (std::int64_t cand : {k, -k}) {
    if (free_power(core, cand) == inner) return cand;
  }
  return std::nullopt;
}

GroupIndex cyclic_index(const Backend& b, const Element& a) {
  if (b.is_identity(a)) throw PreconditionError("cyclic_index: identity has infinite-index span");
  if (b.rank() > 1) return GroupIndex::infinite();
  // Rank one: a = g^k for the unique generator g.
  std::int64_t k = b.kind() == BackendKind::FreeAbelian
                       ? a.data[0]
                       : static_cast<std::int64_t>(a.data.size());
  return GroupIndex::finite(static_cast<std::uint64_t>(k < 0 ? -k : k));
}

}  // namespace relfree
