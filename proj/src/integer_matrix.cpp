#include "relfree/integer_matrix.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "relfree/checked.hpp"
#include "relfree/errors.hpp"

namespace relfree {

namespace {

using BigMatrix = std::vector<std::vector<mpz_class>>;

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("Smith invariant exceeds 64 bits");
  return z.get_si();
}

// Brings the smallest nonzero entry of the trailing block at (t, t) into the
// corner and clears its row and column. Returns false when the block is zero.
bool clear_cross(BigMatrix& a, std::size_t t) {
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  for (;;) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) return false;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);

    bool dirty = false;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
      for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      dirty = dirty || a[i][t] != 0;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
      for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      dirty = dirty || a[t][j] != 0;
    }
    if (dirty) continue;

    // Divisibility: fold any offending row into row t and go again.
    bool folded = false;
    for (std::size_t i = t + 1; i < rows && !folded; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
          folded = true;
          break;
        }
      }
    }
    if (!folded) return true;
  }
}

}  // namespace

IntVector smith_invariants(const IntMatrix& m) {
  if (m.empty() || m[0].empty()) return {};
  BigMatrix a(m.size(), std::vector<mpz_class>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m[0].size()) throw PreconditionError("smith_invariants: ragged matrix");
    for (std::size_t j = 0; j < m[i].size(); ++j) a[i][j] = static_cast<long>(m[i][j]);
  }
  const std::size_t n = std::min(a.size(), a[0].size());
  IntVector out(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    if (!clear_cross(a, t)) break;
    out[t] = to_int64(abs(a[t][t]));
  }
  return out;
}

IntVector abelianization_divisors(const IntMatrix& relations, int generators) {
  IntVector d = smith_invariants(relations);
  d.resize(static_cast<std::size_t>(generators), 0);
  return d;
}

int lattice_rank(const IntMatrix& rows) {
  IntVector d = smith_invariants(rows);
  return static_cast<int>(std::count_if(d.begin(), d.end(), [](std::int64_t x) { return x != 0; }));
}

std::int64_t vector_gcd(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

IntMatrix complement_basis(std::span<const std::int64_t> sigma) {
  if (!is_primitive(sigma)) throw PreconditionError("complement_basis: vector is not primitive");
  const std::size_t r = sigma.size();
  IntMatrix u(r, IntVector(r, 0));
  for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
  IntVector s(sigma.begin(), sigma.end());

  auto row_sub = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    s[dst] = checked_sub(s[dst], checked_mul(q, s[src]));
    for (std::size_t j = 0; j < r; ++j) u[dst][j] = checked_sub(u[dst][j], checked_mul(q, u[src][j]));
  };

  for (;;) {
    std::size_t piv = r;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (s[i] == 0) continue;
      ++nonzero;
      if (piv == r || std::abs(s[i]) < std::abs(s[piv])) piv = i;
    }
    if (nonzero == 1) {
      std::swap(s[0], s[piv]);
      std::swap(u[0], u[piv]);
      if (s[0] < 0) {
        s[0] = -s[0];
        for (auto& x : u[0]) x = -x;
      }
      return u;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (i != piv && s[i] != 0) row_sub(i, piv, s[i] / s[piv]);
    }
  }
}

HermiteSplit hermite_split(std::span<const std::int64_t> a, std::span<const std::int64_t> tau) {
  std::size_t p = 0;
  while (p < a.size() && a[p] == 0) ++p;
  if (p == a.size()) throw PreconditionError("hermite_split: zero lattice generator");
  std::int64_t k = floor_div(tau[p], a[p]);
  if (a[p] < 0 && tau[p] % a[p] != 0) {
    // floor_div with a negative divisor overshoots: we need tau_p - k a_p in [0, |a_p|).
    k += 1;
  }
  HermiteSplit out{IntVector(tau.begin(), tau.end()), k};
  for (std::size_t i = 0; i < a.size(); ++i) out.rep[i] = checked_sub(out.rep[i], checked_mul(k, a[i]));
  return out;
}

CosetComplement::CosetComplement(IntVector sigma)
    : sigma_(std::move(sigma)), basis_change_(complement_basis(sigma_)) {}

IntVector CosetComplement::rep(std::span<const std::int64_t> tau) const {
  return hermite_split(sigma_, tau).rep;
}

std::int64_t CosetComplement::multiple(std::span<const std::int64_t> tau) const {
  return hermite_split(sigma_, tau).multiple;
}

IntVector CosetComplement::quotient_coordinates(std::span<const std::int64_t> tau) const {
  IntVector out;
  for (std::size_t i = 1; i < basis_change_.size(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < tau.size(); ++j) acc = checked_add(acc, checked_mul(basis_change_[i][j], tau[j]));
    out.push_back(acc);
  }
  return out;
}

}  // namespace relfree
