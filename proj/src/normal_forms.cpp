#include "relfree/normal_forms.hpp"

#include "relfree/errors.hpp"
#include "relfree/integer_matrix.hpp"

namespace relfree {

CyclicCosetChooser::CyclicCosetChooser(Backend backend, Element a)
    : backend_(std::move(backend)), a_(std::move(a)) {
  if (backend_.kind() == BackendKind::Free && !backend_.is_identity(a_)) {
    auto red = free_cyclic_reduce(a_.data);
    core_ = std::move(red.core);
    conj_ = std::move(red.conjugator);
  }
}

CyclicCosetChooser::Split CyclicCosetChooser::split(const Element& x) const {
  if (backend_.is_identity(a_)) return {x, 0};
  if (backend_.kind() == BackendKind::FreeAbelian) {
    auto hs = hermite_split(a_.data, x.data);
    return {Element{std::move(hs.rep)}, hs.multiple};
  }
  // Every member of x<a> no longer than x is x a^j with |j| within this window.
  const auto bound = static_cast<std::int64_t>((2 * x.data.size() + 2 * conj_.size()) / core_.size() + 1);
  Element best = x;
  std::int64_t best_j = 0;
  for (std::int64_t j = -bound; j <= bound; ++j) {
    Element cand = backend_.multiply(x, backend_.power(a_, j));
    if (cand.data.size() < best.data.size() ||
        (cand.data.size() == best.data.size() && cand.data < best.data)) {
      best = std::move(cand);
      best_j = j;
    }
  }
  // best = x a^j, so x = best a^-j.
  return {best, -best_j};
}

Amalgam::Amalgam(Backend a_side, Element a, Backend b_side, Element b)
    : a_(std::move(a_side), std::move(a)), b_(std::move(b_side), std::move(b)) {
  const bool ta = a_.backend().is_identity(a_.generator());
  const bool tb = b_.backend().is_identity(b_.generator());
  if (ta != tb) {
    // Torsion-free factors: identifying a nontrivial element with the
    // identity would force it to have finite order.
    throw PreconditionError("amalgam: identified elements must both be trivial or both nontrivial");
  }
}

Amalgam Amalgam::free_product(Backend a_side, Backend b_side) {
  Element ia = a_side.identity();
  Element ib = b_side.identity();
  return Amalgam(std::move(a_side), std::move(ia), std::move(b_side), std::move(ib));
}

void Amalgam::append(ReducedSequence& acc, const Syllable& s) const {
  const CyclicCosetChooser& ch = chooser(s.side);
  const Backend& bk = ch.backend();
  Element y = bk.multiply(bk.power(ch.generator(), acc.trailing), s.value);
  if (!acc.syllables.empty() && acc.syllables.back().side == s.side) {
    y = bk.multiply(acc.syllables.back().value, y);
    acc.syllables.pop_back();
  }
  auto sp = ch.split(y);
  acc.trailing = sp.k;
  if (!bk.is_identity(sp.rep)) acc.syllables.push_back({s.side, std::move(sp.rep)});
}

ReducedSequence Amalgam::normal_form(const std::vector<Syllable>& word) const {
  ReducedSequence acc;
  for (const auto& s : word) append(acc, s);
  return acc;
}

std::vector<Syllable> Amalgam::to_word(const ReducedSequence& x) const {
  std::vector<Syllable> w = x.syllables;
  if (x.trailing != 0) w.push_back({Side::A, a_.backend().power(a_.generator(), x.trailing)});
  return w;
}

ReducedSequence Amalgam::multiply(const ReducedSequence& x, const ReducedSequence& y) const {
  ReducedSequence acc = x;
  for (const auto& s : to_word(y)) append(acc, s);
  return acc;
}

ReducedSequence Amalgam::inverse(const ReducedSequence& x) const {
  auto w = to_word(x);
  std::vector<Syllable> inv;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    inv.push_back({it->side, backend(it->side).inverse(it->value)});
  }
  return normal_form(inv);
}

ReducedSequence free_product_nf(const std::vector<Syllable>& word, const Backend& a_side,
                                const Backend& b_side) {
  ReducedSequence out;
  auto& st = out.syllables;
  for (const auto& s : word) {
    const Backend& bk = s.side == Side::A ? a_side : b_side;
    if (bk.is_identity(s.value)) continue;
    if (!st.empty() && st.back().side == s.side) {
      Element merged = bk.multiply(st.back().value, s.value);
      st.pop_back();
      if (!bk.is_identity(merged)) st.push_back({s.side, std::move(merged)});
    } else {
      st.push_back(s);
    }
  }
  return out;
}

ReducedSequence amalgam_nf(const std::vector<Syllable>& word, const Amalgam& amalgam) {
  return amalgam.normal_form(word);
}

}  // namespace relfree
