#include "relfree/word_analysis.hpp"

#include <algorithm>
#include <set>

#include "relfree/errors.hpp"

namespace relfree {

std::string to_string(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::Zero: return "Zero";
    case ComplexityClass::One: return "One";
    case ComplexityClass::Higher: return "Higher";
  }
  return "?";
}

std::int64_t syllable_exponent(const Backend& tpart, const Element& tau) {
  if (tpart.rank() != 1) throw PreconditionError("syllable_exponent: T-part must have rank one");
  if (tpart.kind() == BackendKind::FreeAbelian) return tau.data[0];
  std::int64_t e = 0;
  for (Letter x : tau.data) e += x > 0 ? 1 : -1;
  return e;
}

UnimodularityReport is_unimodular_cyclic(const RelativeWord& w) {
  if (w.signature().tpart.rank() != 1) {
    throw PreconditionError("is_unimodular_cyclic: T-part must have rank one");
  }
  UnimodularityReport r;
  r.flavor = UnimodularityReport::Flavor::Cyclic;
  r.exponent_sum = exponent_sum(w, 1);
  r.overall = r.exponent_sum == 1;
  r.cond_infinite_order = r.exponent_sum != 0;
  r.cond_normal = true;
  r.cond_quotient_strong_up = r.exponent_sum == 1 || r.exponent_sum == -1;
  if (!r.overall) r.diagnostic = "t-exponent sum is " + std::to_string(r.exponent_sum) + ", not 1";
  return r;
}

UnimodularityReport is_unimodular_general(const RelativeWord& w) {
  const Backend& t = w.signature().tpart;
  UnimodularityReport r;
  r.flavor = UnimodularityReport::Flavor::General;
  Element sigma = t_product(w);

  if (t.is_abelian()) {
    IntVector v = t.kind() == BackendKind::FreeAbelian
                      ? sigma.data
                      : IntVector{syllable_exponent(t, sigma)};
    r.cond_infinite_order = !std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
    r.cond_normal = true;
    r.cond_quotient_strong_up = is_primitive(v);
    if (!r.cond_infinite_order) {
      r.diagnostic = "product of T-syllables is trivial";
    } else if (!r.cond_quotient_strong_up) {
      r.diagnostic = "product of T-syllables is not primitive; quotient has torsion";
    }
  } else {
    // No nontrivial cyclic subgroup of a free group of rank >= 2 is normal.
    r.cond_infinite_order = !t.is_identity(sigma);
    r.cond_normal = !r.cond_infinite_order;
    r.cond_quotient_strong_up = false;
    r.diagnostic = "free T-part of rank >= 2 has no normal infinite cyclic subgroup";
  }
  r.overall = r.cond_infinite_order && r.cond_normal && r.cond_quotient_strong_up;
  return r;
}

std::vector<int> exponent_signs(const RelativeWord& w) {
  const Backend& t = w.signature().tpart;
  std::vector<int> signs;
  for (const auto& tau : w.syllables()) {
    std::int64_t e = syllable_exponent(t, tau);
    signs.insert(signs.end(), static_cast<std::size_t>(e < 0 ? -e : e), e < 0 ? -1 : 1);
  }
  return signs;
}

ComplexityClass complexity_of_signs(std::span<const int> signs) {
  if (signs.empty()) throw PreconditionError("complexity: empty exponent sequence");
  const bool has_pos = std::find(signs.begin(), signs.end(), 1) != signs.end();
  const bool has_neg = std::find(signs.begin(), signs.end(), -1) != signs.end();
  if (!(has_pos && has_neg)) return ComplexityClass::Zero;
  bool pos_pair = false;
  bool neg_pair = false;
  const std::size_t n = signs.size();
  for (std::size_t i = 0; i < n; ++i) {
    int a = signs[i];
    int b = signs[(i + 1) % n];
    if (a == b) (a > 0 ? pos_pair : neg_pair) = true;
  }
  return (pos_pair && neg_pair) ? ComplexityClass::Higher : ComplexityClass::One;
}

ComplexityClass complexity(const RelativeWord& w) {
  if (!w.is_cyclically_reduced()) throw PreconditionError("complexity: word is not cyclically reduced");
  return complexity_of_signs(exponent_signs(w));
}

std::optional<ProperPower> is_proper_power(std::span<const Letter> v) {
  if (v.empty()) throw PreconditionError("is_proper_power: empty word");
  if (!is_cyclically_reduced(v)) throw PreconditionError("is_proper_power: word is not cyclically reduced");
  const std::size_t n = v.size();
  for (std::size_t period = 1; period <= n / 2; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = v[i] == v[i - period];
    if (periodic) {
      return ProperPower{FreeWord(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(period)),
                         static_cast<std::int64_t>(n / period)};
    }
  }
  return std::nullopt;
}

RelativeWord Form1::rebuild() const {
  const Backend& t = sig.tpart;
  std::vector<Piece> ps;
  ps.push_back({Factor::Coefficient, c});
  ps.push_back({Factor::TPart, t.generator(1)});
  for (const auto& [b, a] : pairs) {
    ps.push_back({Factor::Coefficient, b});
    ps.push_back({Factor::TPart, t.generator(1, -1)});
    ps.push_back({Factor::Coefficient, a});
    ps.push_back({Factor::TPart, t.generator(1)});
  }
  return RelativeWord::from_pieces(sig, ps);
}

Form1 to_form1(const RelativeWord& input) {
  const auto& sig = input.signature();
  // Only the conjugacy class matters.
  const RelativeWord w = input.is_cyclically_reduced() ? input : cyclic_reduce(input).core;
  if (!is_unimodular_cyclic(w).overall) throw PreconditionError("to_form1: word is not unimodular");
  if (complexity(w) != ComplexityClass::One) throw PreconditionError("to_form1: complexity is not One");

  // Cyclic list of letters, each with the coefficient that follows it.
  std::vector<int> signs;
  std::vector<Element> after;
  const auto& cs = w.coefficients();
  const auto& ts = w.syllables();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::int64_t e = syllable_exponent(sig.tpart, ts[i]);
    for (std::int64_t j = 0; j < (e < 0 ? -e : e); ++j) {
      signs.push_back(e < 0 ? -1 : 1);
      after.push_back(sig.coeff.identity());
    }
    after.back() = cs[i + 1];
  }
  after.back() = sig.coeff.multiply(after.back(), cs[0]);

  const std::size_t n = signs.size();
  std::size_t j = 0;
  while (!(signs[j] == 1 && signs[(j + 1) % n] == 1)) ++j;

  Form1 f{sig, after[j], {}};
  // From letter j+1: +, then (-, +) repeated; coefficients b_i after each +,
  // a_i after each -.
  for (std::size_t p = 1; p + 1 < n; p += 2) {
    std::size_t plus = (j + p) % n;
    std::size_t minus = (j + p + 1) % n;
    if (signs[plus] != 1 || signs[minus] != -1) {
      throw PreconditionError("to_form1: exponent pattern is not the complexity-one normal form");
    }
    f.pairs.emplace_back(after[plus], after[minus]);
  }
  return f;
}

bool tsyllables_generate_cyclic(const RelativeWord& w) {
  const Backend& t = w.signature().tpart;
  if (t.kind() != BackendKind::FreeAbelian) {
    throw PreconditionError("tsyllables_generate_cyclic: T-part must be free abelian");
  }
  IntMatrix rows;
  for (const auto& tau : w.syllables()) rows.push_back(tau.data);
  return rows.empty() || lattice_rank(rows) <= 1;
}

CosetForm compute_coset_form(const RelativeWord& w) {
  const auto& sig = w.signature();
  if (sig.tpart.kind() != BackendKind::FreeAbelian) {
    throw PreconditionError("coset_rewrite: T-part must be free abelian");
  }
  if (!is_unimodular_general(w).overall) throw PreconditionError("coset_rewrite: word is not unimodular");

  Element t = t_product(w);
  CosetComplement complement(t.data);
  CosetForm form{sig, t, {}, {}};
  Element prefix = sig.tpart.identity();
  std::set<IntVector> labels;
  const auto& cs = w.coefficients();
  const auto& ts = w.syllables();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!sig.coeff.is_identity(cs[i])) {
      auto split = hermite_split(t.data, prefix.data);
      CosetEntry e{cs[i], complement.quotient_coordinates(prefix.data), split.rep, split.multiple};
      labels.insert(e.label);
      form.entries.push_back(std::move(e));
    }
    if (i < ts.size()) prefix = sig.tpart.multiply(prefix, ts[i]);
  }
  form.x1.assign(labels.begin(), labels.end());
  return form;
}

CosetForm coset_rewrite(const RelativeWord& w) {
  if (tsyllables_generate_cyclic(w)) {
    throw PreconditionError("coset_rewrite: T-syllables generate a cyclic subgroup");
  }
  return compute_coset_form(w);
}

RelativeWord CosetForm::reassemble() const {
  RelativeWord out(sig);
  for (const auto& e : entries) {
    Element prefix = sig.tpart.multiply(Element{e.rep}, sig.tpart.power(t, e.k));
    RelativeWord p = RelativeWord::tpart(sig, prefix);
    out = out * p * RelativeWord::coefficient(sig, e.coefficient) * p.inverse();
  }
  return out * RelativeWord::tpart(sig, t);
}

}  // namespace relfree
