#include "relfree/relative_word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "relfree/errors.hpp"

namespace relfree {

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

const Backend& backend_of(const Signature& sig, Factor f) {
  return f == Factor::Coefficient ? sig.coeff : sig.tpart;
}

FreeWord least_rotation_only(const FreeWord& w) {
  FreeWord best = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    FreeWord cur = rotate_left(w, i);
    if (cur < best) best = cur;
  }
  return best;
}

// Conjugacy inside a single backend.
bool factor_conjugate(const Backend& b, const Element& x, const Element& y) {
  if (b.kind() == BackendKind::FreeAbelian) return x == y;
  FreeWord cx = free_cyclic_reduce(x.data).core;
  FreeWord cy = free_cyclic_reduce(y.data).core;
  return cx.size() == cy.size() && least_rotation_only(cx) == least_rotation_only(cy);
}

}  // namespace

RelativeWord::RelativeWord(Signature sig) : sig_(std::move(sig)) {
  coeffs_.push_back(sig_.coeff.identity());
}

RelativeWord RelativeWord::from_pieces(Signature sig, const std::vector<Piece>& pieces) {
  RelativeWord w(std::move(sig));
  for (const auto& p : pieces) w.push(p);
  return w;
}

RelativeWord RelativeWord::coefficient(Signature sig, Element g) {
  return from_pieces(std::move(sig), {Piece{Factor::Coefficient, std::move(g)}});
}

RelativeWord RelativeWord::tpart(Signature sig, Element tau) {
  return from_pieces(std::move(sig), {Piece{Factor::TPart, std::move(tau)}});
}

bool RelativeWord::empty() const {
  return syllables_.empty() && sig_.coeff.is_identity(coeffs_[0]);
}

std::size_t RelativeWord::nontrivial_coefficients() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [&](const Element& g) { return !sig_.coeff.is_identity(g); }));
}

void RelativeWord::push(const Piece& p) {
  if (p.factor == Factor::Coefficient) {
    coeffs_.back() = sig_.coeff.multiply(coeffs_.back(), p.value);
    return;
  }
  if (sig_.tpart.is_identity(p.value)) return;
  if (!syllables_.empty() && sig_.coeff.is_identity(coeffs_.back())) {
    coeffs_.pop_back();
    Element merged = sig_.tpart.multiply(syllables_.back(), p.value);
    if (sig_.tpart.is_identity(merged)) {
      syllables_.pop_back();
    } else {
      syllables_.back() = std::move(merged);
      coeffs_.push_back(sig_.coeff.identity());
    }
    return;
  }
  syllables_.push_back(p.value);
  coeffs_.push_back(sig_.coeff.identity());
}

std::vector<Piece> RelativeWord::pieces() const {
  std::vector<Piece> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!sig_.coeff.is_identity(coeffs_[i])) out.push_back({Factor::Coefficient, coeffs_[i]});
    if (i < syllables_.size()) out.push_back({Factor::TPart, syllables_[i]});
  }
  return out;
}

RelativeWord RelativeWord::operator*(const RelativeWord& rhs) const {
  RelativeWord out = *this;
  for (const auto& p : rhs.pieces()) out.push(p);
  return out;
}

RelativeWord RelativeWord::inverse() const {
  auto ps = pieces();
  std::reverse(ps.begin(), ps.end());
  for (auto& p : ps) p.value = backend_of(sig_, p.factor).inverse(p.value);
  return from_pieces(sig_, ps);
}

RelativeWord RelativeWord::power(std::int64_t k) const {
  RelativeWord base = k >= 0 ? *this : inverse();
  RelativeWord out(sig_);
  for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) out = out * base;
  return out;
}

RelativeWord RelativeWord::conjugate_by(const RelativeWord& y) const {
  return y.inverse() * *this * y;
}

bool RelativeWord::is_cyclically_reduced() const {
  const std::size_t k = syllables_.size();
  const bool first_g = !sig_.coeff.is_identity(coeffs_.front());
  const bool last_g = !sig_.coeff.is_identity(coeffs_.back());
  if (k == 0) {
    return sig_.coeff.kind() != BackendKind::Free || is_cyclically_reduced_word(coeffs_[0]);
  }
  if (first_g && last_g) return false;
  if (!first_g && !last_g) {
    if (k >= 2) return false;
    return sig_.tpart.kind() != BackendKind::Free || is_cyclically_reduced_word(syllables_[0]);
  }
  return true;
}

bool RelativeWord::is_cyclically_reduced_word(const Element& e) {
  return relfree::is_cyclically_reduced(e.data);
}

RelativeWord parse_word(std::string_view text, const Signature& sig) {
  std::vector<Piece> pieces;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string sym = tok;
    std::int64_t exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      sym = tok.substr(0, caret);
      std::string_view e(tok);
      e.remove_prefix(caret + 1);
      if (!e.empty() && e.front() == '+') e.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exponent);
      if (ec == std::errc::result_out_of_range) throw ParseError("exponent overflow in '" + tok + "'");
      if (ec != std::errc() || ptr != e.data() + e.size() || e.empty()) {
        throw ParseError("malformed exponent in '" + tok + "'");
      }
      if (exponent > kMaxExponent || exponent < -kMaxExponent) {
        throw ParseError("exponent overflow in '" + tok + "'");
      }
    }
    if (sym.empty()) throw ParseError("unknown symbol in '" + tok + "'");

    Factor factor;
    int index = 1;
    std::string_view digits(sym);
    if (sym[0] == 'g') {
      factor = Factor::Coefficient;
      digits.remove_prefix(1);
    } else if (sym[0] == 'x') {
      factor = Factor::TPart;
      digits.remove_prefix(1);
      if (digits.empty()) throw ParseError("'x' needs an index in '" + tok + "'");
    } else if (sym == "t") {
      factor = Factor::TPart;
      digits = {};
    } else {
      throw ParseError("unknown symbol '" + sym + "'");
    }
    if (!digits.empty()) {
      if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("unknown symbol '" + sym + "'");
      }
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
      if (ec != std::errc()) throw ParseError("generator index overflow in '" + tok + "'");
    }
    const Backend& b = backend_of(sig, factor);
    if (index < 1 || index > b.rank()) {
      throw ParseError("rank mismatch: '" + sym + "' is not a generator of " + b.describe());
    }
    pieces.push_back({factor, b.generator(index, exponent)});
  }
  return RelativeWord::from_pieces(sig, pieces);
}

namespace {

std::string format_element(const Backend& b, const Element& e, char prefix, bool alias_t) {
  std::string out;
  for (const auto& gp : b.to_tokens(e)) {
    if (!out.empty()) out += ' ';
    if (alias_t) {
      out += 't';
    } else {
      out += prefix;
      if (b.rank() > 1 || prefix == 'x') out += std::to_string(gp.index);
    }
    if (gp.exponent != 1) out += "^" + std::to_string(gp.exponent);
  }
  return out;
}

}  // namespace

std::string format_word(const RelativeWord& w) {
  const auto& sig = w.signature();
  const bool alias_t = sig.tpart.rank() == 1;
  std::string out;
  for (const auto& p : w.pieces()) {
    std::string s = p.factor == Factor::Coefficient
                        ? format_element(sig.coeff, p.value, 'g', false)
                        : format_element(sig.tpart, p.value, 'x', alias_t);
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out.empty() ? "1" : out;
}

CyclicReduceResult cyclic_reduce(const RelativeWord& w) {
  const auto& sig = w.signature();
  RelativeWord cur = w;
  RelativeWord conj(sig);
  for (;;) {
    const auto& cs = cur.coefficients();
    const auto& ts = cur.syllables();
    const std::size_t k = ts.size();
    const bool first_g = !sig.coeff.is_identity(cs.front());
    const bool last_g = !sig.coeff.is_identity(cs.back());

    RelativeWord s(sig);
    if (k == 0) {
      if (sig.coeff.kind() != BackendKind::Free) break;
      auto red = free_cyclic_reduce(cs[0].data);
      if (red.conjugator.empty()) break;
      // cs0 = c^-1 core c, so core = c cs0 c^-1: s = c.
      s = RelativeWord::coefficient(sig, Element{red.conjugator});
    } else if (first_g && last_g) {
      s = RelativeWord::coefficient(sig, cs.back());
    } else if (!first_g && !last_g && k >= 2) {
      s = RelativeWord::tpart(sig, ts.back());
    } else if (!first_g && !last_g && k == 1 && sig.tpart.kind() == BackendKind::Free) {
      auto red = free_cyclic_reduce(ts[0].data);
      if (red.conjugator.empty()) break;
      s = RelativeWord::tpart(sig, Element{red.conjugator});
    } else {
      break;
    }
    cur = s * cur * s.inverse();
    conj = s * conj;
  }
  return {cur, conj};
}

std::int64_t exponent_sum(const RelativeWord& w, int j) {
  const Backend& t = w.signature().tpart;
  if (j < 1 || j > t.rank()) throw PreconditionError("exponent_sum: generator index out of range");
  std::int64_t sum = 0;
  for (const auto& tau : w.syllables()) {
    if (t.kind() == BackendKind::FreeAbelian) {
      sum += tau.data[static_cast<std::size_t>(j - 1)];
    } else {
      for (Letter x : tau.data) {
        if (x == j) ++sum;
        if (x == -j) --sum;
      }
    }
  }
  return sum;
}

FreeWord erase_coefficients(const RelativeWord& w) {
  if (w.signature().tpart.kind() != BackendKind::Free) {
    throw PreconditionError("erase_coefficients: T-part must be a free group");
  }
  FreeWord all;
  for (const auto& tau : w.syllables()) all.insert(all.end(), tau.data.begin(), tau.data.end());
  return free_reduce(all);
}

RelativeWord normalize_orientation(const RelativeWord& w) {
  if (w.signature().tpart.rank() != 1) {
    throw PreconditionError("normalize_orientation: T-part must have rank one");
  }
  return exponent_sum(w, 1) < 0 ? w.inverse() : w;
}

Element t_product(const RelativeWord& w) {
  const Backend& t = w.signature().tpart;
  Element acc = t.identity();
  for (const auto& tau : w.syllables()) acc = t.multiply(acc, tau);
  return acc;
}

namespace {

// Cyclic sequence of (syllable, following coefficient) pairs of a cyclically
// reduced word with at least one T-syllable.
std::vector<std::pair<Element, Element>> cyclic_pairs(const RelativeWord& w) {
  const auto& sig = w.signature();
  const auto& cs = w.coefficients();
  const auto& ts = w.syllables();
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Element after = cs[i + 1];
    if (i + 1 == ts.size()) after = sig.coeff.multiply(after, cs[0]);
    out.emplace_back(ts[i], after);
  }
  return out;
}

}  // namespace

bool are_conjugate(const RelativeWord& a, const RelativeWord& b) {
  if (!(a.signature() == b.signature())) return false;
  const auto& sig = a.signature();
  RelativeWord ca = cyclic_reduce(a).core;
  RelativeWord cb = cyclic_reduce(b).core;
  if (ca.syllable_count() != cb.syllable_count()) return false;
  if (ca.syllable_count() == 0) {
    return factor_conjugate(sig.coeff, ca.coefficients()[0], cb.coefficients()[0]);
  }
  auto pa = cyclic_pairs(ca);
  auto pb = cyclic_pairs(cb);
  if (pa.size() == 1 && sig.coeff.is_identity(pa[0].second)) {
    return sig.coeff.is_identity(pb[0].second) && factor_conjugate(sig.tpart, pa[0].first, pb[0].first);
  }
  for (std::size_t r = 0; r < pb.size(); ++r) {
    std::rotate(pb.begin(), pb.begin() + 1, pb.end());
    if (pa == pb) return true;
  }
  return false;
}

}  // namespace relfree
