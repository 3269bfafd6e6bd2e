#include "oracles.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace relfree::oracle {

std::string to_string(Complexity c) {
  switch (c) {
    case Complexity::Zero: return "Zero";
    case Complexity::One: return "One";
    case Complexity::Higher: return "Higher";
  }
  return "?";
}

Complexity complexity(const std::vector<int>& signs) {
  if (signs.empty()) throw std::invalid_argument("empty sign sequence");
  bool all_equal = true;
  for (int s : signs) all_equal = all_equal && s == signs[0];
  if (all_equal) return Complexity::Zero;
  bool pos_pair = false, neg_pair = false;
  const std::size_t n = signs.size();
  for (std::size_t i = 0; i < n; ++i) {
    int a = signs[i], b = signs[(i + 1) % n];
    if (a > 0 && b > 0) pos_pair = true;
    if (a < 0 && b < 0) neg_pair = true;
  }
  return pos_pair && neg_pair ? Complexity::Higher : Complexity::One;
}

std::vector<int> parse_signs(std::string_view s) {
  std::vector<int> out;
  for (char c : s) {
    if (c == '+') out.push_back(1);
    else if (c == '-') out.push_back(-1);
    else if (c != ' ') throw std::invalid_argument(std::string("bad sign character '") + c + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty sign sequence");
  return out;
}

Word reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

std::optional<Power> proper_power(const Word& input) {
  const Word w = reduce(input);
  if (w.empty()) return std::nullopt;
  int rank = 0;
  for (int x : w) rank = std::max(rank, std::abs(x));
  std::optional<Power> best;

  Word u;
  std::function<void()> visit = [&] {
    if (!u.empty()) {
      Word p = u;
      for (int k = 2;; ++k) {
        p.insert(p.end(), u.begin(), u.end());
        p = reduce(p);
        if (p.size() > w.size()) break;
        if (p == w && (!best || k > best->exponent)) best = Power{u, k};
      }
    }
    if (u.size() + 1 >= w.size()) return;
    for (int i = 1; i <= rank; ++i) {
      for (int x : {i, -i}) {
        if (u.empty() && x != w.front()) continue;
        if (!u.empty() && u.back() == -x) continue;
        u.push_back(x);
        visit();
        u.pop_back();
      }
    }
  };
  visit();
  return best;
}

Word parse_word(std::string_view text, std::string* prefix) {
  static const std::regex token(R"(([a-z])(\d*)(\^(-?\d+))?)");
  std::istringstream in{std::string(text)};
  std::string tok, seen;
  Word out;
  while (in >> tok) {
    std::smatch m;
    if (!std::regex_match(tok, m, token)) throw std::invalid_argument("bad token '" + tok + "'");
    int index;
    if (m[2].length() > 0) {
      index = std::stoi(m[2]);
      if (seen.empty()) seen = m[1];
    } else {
      index = m[1].str()[0] - 'a' + 1;
      if (seen.empty()) seen = "a";
    }
    if (index < 1) throw std::invalid_argument("bad generator index in '" + tok + "'");
    int e = m[4].matched ? std::stoi(m[4]) : 1;
    for (int i = 0; i < std::abs(e); ++i) out.push_back(e < 0 ? -index : index);
  }
  if (prefix) *prefix = seen.empty() ? "x" : seen;
  return out;
}

std::string format_word(const Word& w, const std::string& prefix) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int idx = std::abs(w[i]);
    std::string sym = prefix == "a" ? std::string(1, static_cast<char>('a' + idx - 1)) : prefix + std::to_string(idx);
    long e = static_cast<long>(j - i) * (w[i] < 0 ? -1 : 1);
    if (!out.empty()) out += ' ';
    out += sym;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

namespace {

// Laplace expansion; fine for the small matrices the oracle sees.
std::int64_t det(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  std::int64_t sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    sum += (c % 2 ? -1 : 1) * a[0][c] * det(minor);
  }
  return sum;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<std::int64_t> smith_invariants(const Matrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    std::int64_t g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Matrix sub(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        g = std::gcd(g, det(sub));
      }
    if (g == 0 || prev == 0) {
      out.push_back(0);
      prev = 0;
    } else {
      out.push_back(g / prev);
      prev = g;
    }
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  Matrix m;
  std::string s(text);
  std::stringstream rows(s);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::istringstream in(row);
    std::vector<std::int64_t> r;
    std::string tok;
    while (in >> tok) {
      std::size_t pos = 0;
      r.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument("bad matrix entry '" + tok + "'");
    }
    if (r.empty()) continue;
    if (!m.empty() && r.size() != m[0].size()) throw std::invalid_argument("ragged matrix");
    m.push_back(r);
  }
  if (m.empty()) throw std::invalid_argument("empty matrix");
  return m;
}

}  // namespace relfree::oracle
