#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace relfree {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major, rows of equal length

// Smith invariant factors d_1 | d_2 | ... of m, min(rows, cols) of them,
// all non-negative. Computed exactly (arbitrary precision internally);
// throws std::overflow_error if a factor does not fit in 64 bits.
IntVector smith_invariants(const IntMatrix& m);

// Divisors of the abelian group Z^generators / rowspace(relations), padded
// with zeros to `generators` entries: the group is the sum of Z/d_i.
IntVector abelianization_divisors(const IntMatrix& relations, int generators);

// Rank of the subgroup of Z^r generated by the rows.
int lattice_rank(const IntMatrix& rows);

std::int64_t vector_gcd(std::span<const std::int64_t> v);
inline bool is_primitive(std::span<const std::int64_t> v) { return vector_gcd(v) == 1; }

// Unimodular U with U * sigma = e_1, for primitive sigma. Deterministic:
// repeated Euclidean steps on the smallest nonzero entry, lowest index
// first on ties.
IntMatrix complement_basis(std::span<const std::int64_t> sigma);

struct HermiteSplit {
  IntVector rep;       // canonical member of tau + <a>
  std::int64_t multiple;  // tau == rep + multiple * a
};

// Reduces tau modulo the cyclic lattice <a>, a != 0: the first nonzero
// coordinate p of a is brought into [0, |a_p|).
HermiteSplit hermite_split(std::span<const std::int64_t> a, std::span<const std::int64_t> tau);

// Coset representatives of Z^r / <sigma> for primitive sigma.
class CosetComplement {
 public:
  // Throws PreconditionError if sigma is not primitive.
  explicit CosetComplement(IntVector sigma);

  const IntVector& sigma() const { return sigma_; }
  int rank() const { return static_cast<int>(sigma_.size()); }

  // rep(tau) == tau mod <sigma>, constant on cosets, rep(0) == 0.
  IntVector rep(std::span<const std::int64_t> tau) const;
  // k with tau == rep(tau) + k * sigma.
  std::int64_t multiple(std::span<const std::int64_t> tau) const;
  // Image of tau in Z^r / <sigma> ~ Z^(r-1).
  IntVector quotient_coordinates(std::span<const std::int64_t> tau) const;

 private:
  IntVector sigma_;
  IntMatrix basis_change_;  // U with U sigma = e_1
};

}  // namespace relfree
