#include "relfree/free_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace relfree {

FreeWord free_reduce(std::span<const Letter> letters) {
  FreeWord out;
  out.reserve(letters.size());
  for (Letter x : letters) {
    if (x == 0) throw std::invalid_argument("free_reduce: zero letter");
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

FreeWord free_inverse(std::span<const Letter> w) {
  FreeWord out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

FreeWord free_concat(std::span<const Letter> a, std::span<const Letter> b) {
  FreeWord out(a.begin(), a.end());
  for (Letter x : b) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

FreeWord free_power(std::span<const Letter> w, std::int64_t k) {
  if (k == 0 || w.empty()) return {};
  FreeWord base = k > 0 ? FreeWord(w.begin(), w.end()) : free_inverse(w);
  std::int64_t n = k > 0 ? k : -k;
  auto [core, conj] = free_cyclic_reduce(base);
  // conj^-1 core^n conj
  FreeWord out = free_inverse(conj);
  out.reserve(out.size() + core.size() * static_cast<std::size_t>(n) + conj.size());
  for (std::int64_t i = 0; i < n; ++i) out.insert(out.end(), core.begin(), core.end());
  out.insert(out.end(), conj.begin(), conj.end());
  return free_reduce(out);
}

bool is_freely_reduced(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == -w[i - 1]) return false;
  }
  return std::find(w.begin(), w.end(), 0) == w.end();
}

bool is_cyclically_reduced(std::span<const Letter> w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || w.front() != -w.back();
}

CyclicReduction free_cyclic_reduce(std::span<const Letter> w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  CyclicReduction r;
  r.core.assign(w.begin() + static_cast<std::ptrdiff_t>(lo),
                w.begin() + static_cast<std::ptrdiff_t>(hi));
  // w = p core p^-1 with p = w[0..lo); so conjugator = p^-1.
  r.conjugator = free_inverse(w.subspan(0, lo));
  return r;
}

FreeWord rotate_left(std::span<const Letter> w, std::size_t k) {
  FreeWord out(w.begin(), w.end());
  if (!out.empty()) {
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  }
  return out;
}

namespace {

FreeWord least_rotation(const FreeWord& w) {
  FreeWord best = w;
  FreeWord cur = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

FreeWord cyclic_normal_form(std::span<const Letter> w) {
  FreeWord core = free_cyclic_reduce(free_reduce(w)).core;
  FreeWord a = least_rotation(core);
  FreeWord b = least_rotation(free_inverse(core));
  return a < b ? a : b;
}

std::string format_free_word(std::span<const Letter> w, const std::string& prefix,
                             bool bare_when_rank_one) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    Letter gen = std::abs(w[i]);
    std::int64_t exp = 0;
    std::size_t j = i;
    while (j < w.size() && std::abs(w[j]) == gen && (w[j] > 0) == (w[i] > 0)) {
      exp += w[j] > 0 ? 1 : -1;
      ++j;
    }
    if (!out.empty()) out += ' ';
    out += prefix;
    if (!bare_when_rank_one) out += std::to_string(gen);
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

std::string format_f2_word(std::span<const Letter> w) {
  if (w.empty()) return "1";
  std::string a = format_free_word(free_reduce(FreeWord(w.begin(), w.end())), "a");
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 'a' && i + 1 < a.size() && (a[i + 1] == '1' || a[i + 1] == '2')) {
      out += a[i + 1] == '1' ? 'a' : 'b';
      ++i;
    } else {
      out += a[i];
    }
  }
  return out;
}

}  // namespace relfree
