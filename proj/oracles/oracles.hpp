#pragma once

// Brute-force reference implementations. They share no code with the
// library and evaluate definitions directly; tests and `relfree oracle`
// compare the library against them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relfree::oracle {

enum class Complexity { Zero, One, Higher };
std::string to_string(Complexity c);

// Signs of the t-exponents of a cyclic word, read cyclically.
Complexity complexity(const std::vector<int>& signs);
// "++-" -> {1, 1, -1}; throws std::invalid_argument on other characters.
std::vector<int> parse_signs(std::string_view s);

using Word = std::vector<int>;  // letters +-i

Word reduce(const Word& w);

struct Power {
  Word root;
  int exponent;
};

// Largest k >= 2 with w = u^k, found by trying every reduced root u.
std::optional<Power> proper_power(const Word& w);

// Words such as "x1 x2^-1 x1" or "a b a^-1"; returns the letters and the
// prefix used ("x", "a", ...).
Word parse_word(std::string_view text, std::string* prefix = nullptr);
std::string format_word(const Word& w, const std::string& prefix);

using Matrix = std::vector<std::vector<std::int64_t>>;

// Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of the k x k minors.
std::vector<std::int64_t> smith_invariants(const Matrix& m);
// "2 0; 0 3"
Matrix parse_matrix(std::string_view text);

}  // namespace relfree::oracle
