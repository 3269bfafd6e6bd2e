#include "doctest.h"
#include "relfree/classifier.hpp"
#include "relfree/errors.hpp"
#include "relfree/presentation_model.hpp"
#include "support.hpp"

using namespace relfree;
using namespace relfree::testing;

namespace {

const Backend kZ = Backend::cyclic();
const Backend kZ2 = Backend::free_abelian(2);
const Backend kF2 = Backend::free(2);

RelativePresentation pres(const Backend& g, const Backend& t, const char* relator) {
  Signature sig{g, t};
  return RelativePresentation(sig, parse_word(relator, sig));
}

bool has_rule(const Classification& c, const std::string& rule) {
  for (const auto& s : c.trace)
    if (s.rule == rule) return true;
  return false;
}

// Swap generators 1 and 2 of a backend element.
Element swap12(const Backend& b, const Element& e) {
  if (b.rank() < 2) return e;
  Element out = e;
  if (b.kind() == BackendKind::FreeAbelian) {
    std::swap(out.data[0], out.data[1]);
  } else {
    for (auto& x : out.data) {
      if (std::abs(x) == 1) x = x > 0 ? 2 : -2;
      else if (std::abs(x) == 2) x = x > 0 ? 1 : -1;
    }
  }
  return out;
}

RelativeWord rename(const RelativeWord& w) {
  const auto& sig = w.signature();
  std::vector<Piece> ps;
  for (const auto& p : w.pieces()) {
    ps.push_back({p.factor, swap12(p.factor == Factor::Coefficient ? sig.coeff : sig.tpart, p.value)});
  }
  return RelativeWord::from_pieces(sig, ps);
}

void check_invariants(const Classification& c) {
  if (c.verdict == Verdict::NoFree) CHECK(c.reason.has_value());
  if (c.verdict != Verdict::NoFree) CHECK_FALSE(c.reason.has_value());
  if (c.verdict == Verdict::HasFree) CHECK_FALSE(c.witnesses.empty());
  for (const auto& s : c.trace) CHECK_FALSE(s.citation.empty());
  for (const auto& w : c.witnesses) {
    CHECK(w.d.has_value() == (w.provenance == "complexity-one-lemma"));
    if (w.status == WitnessStatus::BoundedVerified) CHECK(w.depth > 0);
  }
}

}  // namespace

TEST_CASE("one-generator examples") {
  auto bs = classify(pres(kZ, Backend::free(1), "g^-1 t g t^-2"));
  CHECK(bs.verdict == Verdict::NoFree);
  CHECK(bs.reason == NoFreeReason::BaumslagSolitar12);
  CHECK(bs.diagnostics.abelianization_divisors == IntVector{1, 0});
  CHECK(bs.diagnostics.complexity == ComplexityClass::One);

  auto z = classify(pres(kZ, Backend::free(1), "g t g"));
  CHECK(z.verdict == Verdict::NoFree);
  CHECK(z.reason == NoFreeReason::IsomorphicToCoefficientGroup);

  auto f = classify(pres(kF2, Backend::free(1), "g1 t g2"));
  CHECK(f.verdict == Verdict::HasFree);
  REQUIRE(f.witnesses.size() == 1);
  CHECK(format_word(f.witnesses[0].u) == "g1");
  CHECK(format_word(f.witnesses[0].v) == "g2");
  CHECK(f.witnesses[0].status == WitnessStatus::BoundedVerified);

  auto h = classify(pres(kZ, Backend::free(1), "g t g t g t^-1 g t^-1 g t"));
  CHECK(h.verdict == Verdict::HasFree);
  CHECK(h.diagnostics.complexity == ComplexityClass::Higher);
  REQUIRE(h.witnesses.size() == 1);
  CHECK(format_word(h.witnesses[0].u) == "g");
  CHECK(format_word(h.witnesses[0].v) == "t^-1 g t");
  CHECK(h.witnesses[0].status == WitnessStatus::Cited);

  auto one = classify(pres(kZ2, Backend::free(1), "t t g1^-1 t^-1 g1"));
  CHECK(one.verdict == Verdict::HasFree);
  REQUIRE(one.witnesses.size() == 2);
  CHECK(one.witnesses[0].d == 2);
  CHECK(one.witnesses[1].d == 3);

  auto out = classify(pres(kZ, Backend::free(1), "g t g t"));
  CHECK(out.verdict == Verdict::OutOfScope);
  auto none = classify(pres(kZ, Backend::free(1), "g^2"));
  CHECK(none.verdict == Verdict::OutOfScope);
}

TEST_CASE("noncyclic T examples") {
  auto ex = classify(pres(kZ, kZ2, "g x1"));
  CHECK(ex.verdict == Verdict::NoFree);
  CHECK(ex.reason == NoFreeReason::GeneralTExceptional);
  // g^2 does not generate Z.
  CHECK(classify(pres(kZ, kZ2, "g^2 x1")).verdict == Verdict::HasFree);
  // Conjugates of g t are exceptional too.
  CHECK(classify(pres(kZ, kZ2, "x2 g^-1 x1 x2^-1")).reason == NoFreeReason::GeneralTExceptional);

  auto am = classify(pres(kZ2, kZ2, "g1 x1"));
  CHECK(am.verdict == Verdict::HasFree);
  CHECK(has_rule(am, "single-syllable-amalgam"));
  REQUIRE(am.witnesses.size() == 1);
  CHECK(am.witnesses[0].status == WitnessStatus::BoundedVerified);
  CHECK(am.witnesses[0].depth == 10);

  auto fp = classify(pres(kZ, kZ2, "x1"));
  CHECK(fp.verdict == Verdict::HasFree);
  CHECK(has_rule(fp, "single-syllable-free-product"));
  CHECK(fp.witnesses[0].status == WitnessStatus::BoundedVerified);

  auto cyc = classify(pres(kZ, kZ2, "g x1^2 g^-1 x1^-1"));
  CHECK(cyc.verdict == Verdict::HasFree);
  CHECK(has_rule(cyc, "cyclic-syllable-subgroup-amalgam"));

  auto cos = classify(pres(kZ, kZ2, "g x1 g x2"));
  CHECK(cos.verdict == Verdict::HasFree);
  CHECK(has_rule(cos, "coset-decomposition"));
  CHECK(cos.diagnostics.x1_size == 2);

  CHECK(classify(pres(kZ, kZ2, "g x1^2")).verdict == Verdict::OutOfScope);
  CHECK(classify(pres(kZ, kZ2, "g x1 g x1^-1")).verdict == Verdict::OutOfScope);
}

TEST_CASE("multi-generator presentations always have free subgroups") {
  auto p = classify(pres(kZ, kF2, "g x1 g x1"));
  CHECK(has_rule(p, "erasure-proper-power"));
  auto q = classify(pres(kZ, kF2, "g x1 g x2"));
  CHECK(has_rule(q, "erasure-central-extension"));
  auto r = classify(pres(kZ, kF2, "g x1 g x1^-1"));
  CHECK(has_rule(r, "erasure-trivial"));

  const Backend coeffs[] = {kZ, kZ2, kF2};
  for (int i = 0; i < 500; ++i) {
    Signature sig{coeffs[i % 3], Backend::free(2 + i % 2)};
    RelativeWord w(sig);
    do {
      w = random_relative(sig, static_cast<int>(uniform(1, 4)));
    } while (w.nontrivial_coefficients() == 0 || cyclic_reduce(w).core.syllable_count() == 0);
    auto c = classify(RelativePresentation(sig, w));
    CHECK(c.verdict == Verdict::HasFree);
    REQUIRE_FALSE(c.trace.empty());
    CHECK(c.trace[0].rule == "multi-generator");
    check_invariants(c);
  }
}

TEST_CASE("verdicts are invariant under conjugation, inversion and renaming") {
  std::vector<Signature> sigs{{kZ, Backend::free(1)}, {kZ2, Backend::free(1)}, {kF2, Backend::free(1)},
                              {kZ, kZ2},          {kZ2, kZ2},               {kZ, Backend::free_abelian(3)},
                              {kZ, kF2}};
  for (int i = 0; i < 400; ++i) {
    const auto& sig = sigs[static_cast<std::size_t>(i) % sigs.size()];
    auto w = random_relative(sig, static_cast<int>(uniform(1, 4)));
    if (w.empty()) continue;
    auto y = random_relative(sig, static_cast<int>(uniform(0, 2)));
    auto base = classify(RelativePresentation(sig, w), {3});
    check_invariants(base);
    for (const auto& other : {w.conjugate_by(y), w.inverse(), rename(w)}) {
      auto c = classify(RelativePresentation(sig, other), {3});
      CHECK(c.verdict == base.verdict);
      CHECK(c.reason == base.reason);
    }
    if (sig.tpart.rank() == 1 && base.verdict == Verdict::NoFree) {
      bool zero = base.diagnostics.complexity == ComplexityClass::Zero &&
                  base.reason == NoFreeReason::IsomorphicToCoefficientGroup && !sig.coeff.has_free_subgroup();
      bool bs = base.diagnostics.complexity == ComplexityClass::One && sig.coeff.is_cyclic() &&
                base.reason == NoFreeReason::BaumslagSolitar12;
      CHECK((zero || bs));
    }
  }
}

TEST_CASE("verified witnesses pass again in an independently built model") {
  std::vector<RelativePresentation> ps{pres(kF2, Backend::free(1), "g1 t g2"), pres(kZ2, kZ2, "g1 x1"),
                                       pres(kZ, kZ2, "x1"), pres(kF2, kZ2, "g1 g2 x1 x2^2"),
                                       pres(kZ, Backend::free_abelian(3), "g^3 x2 x3")};
  for (const auto& p : ps) {
    auto c = classify(p, {6});
    auto model = PresentationModel::build(p);
    REQUIRE(model.has_value());
    for (const auto& w : c.witnesses) {
      CHECK(w.status == WitnessStatus::BoundedVerified);
      CHECK(model->check_pair(w.u, w.v, 6).pass);
    }
  }
}

TEST_CASE("lemma witnesses") {
  Signature z2{kZ2, Backend::free(1)};
  Form1 f{z2, kZ2.identity(), {{Element{{1, 0}}, Element{{1, 0}}}}};
  auto ws = lemma_witnesses(f);
  REQUIRE(ws.size() == 2);
  CHECK(format_word(ws[0].u) == "g2 t^-2 g2 t^2");
  CHECK(format_word(ws[0].v) == "t^-2 g2 t^2 g2");
  CHECK(format_word(ws[1].u) == "g2 t^-3 g2 t^3");
  CHECK(ws[0].status == WitnessStatus::Cited);

  Signature f2{kF2, Backend::free(1)};
  Form1 g{f2, kF2.identity(), {{Element{{1}}, Element{{1}}}}};
  auto gs = lemma_witnesses(g);
  CHECK(format_word(gs[0].u) == "g2 t^-2 g2 t^2");

  Signature z{kZ, Backend::free(1)};
  Form1 h{z, kZ.identity(), {{Element{{1}}, Element{{1}}}}};
  CHECK_THROWS_AS(lemma_witnesses(h), PreconditionError);
}

TEST_CASE("lemma witness conditions hold") {
  for (const auto& g : {kZ2, kF2, Backend::free_abelian(3), Backend::free(3)}) {
    Signature sig{g, Backend::free(1)};
    for (int i = 0; i < 50; ++i) {
      Form1 f{sig, random_element(g, 2), {{random_nontrivial(g, 2), random_nontrivial(g, 2)}}};
      auto ws = lemma_witnesses(f);
      // u = g1 h1^{t^d}: coefficients g1 and h1; v = h2^{t^d} g2.
      const auto& u = ws[0].u.coefficients();
      const auto& v = ws[0].v.coefficients();
      Element g1 = u[0], h1 = u[1], h2 = v[1], g2 = v[2];
      auto out_a = [&](const Element& x) { return !cyclic_membership(g, x, f.a_last()); };
      auto out_b = [&](const Element& x) { return !cyclic_membership(g, x, f.b_first()); };
      CHECK(out_a(h1));
      CHECK(out_a(h2));
      CHECK(out_a(g.multiply(h1, h2)));
      CHECK(out_b(g1));
      CHECK(out_b(g2));
      CHECK(out_b(g.multiply(g2, g1)));
    }
  }
}

TEST_CASE("amalgam criteria") {
  const GroupIndex idx[] = {GroupIndex::finite(1), GroupIndex::finite(2), GroupIndex::finite(3),
                            GroupIndex::finite(4), GroupIndex::infinite()};
  auto big = [](GroupIndex x) { return x.is_infinite() ? 1000u : x.value(); };
  for (auto a : idx)
    for (auto b : idx) {
      bool expected = big(a) > 1 && big(b) > 1 && std::max(big(a), big(b)) > 2;
      CHECK(fact1_criterion(a, b) == expected);
    }
  CHECK(fact1_criterion(GroupIndex::finite(2), GroupIndex::finite(3)));
  CHECK_FALSE(fact1_criterion(GroupIndex::finite(2), GroupIndex::finite(2)));
  CHECK_FALSE(fact1_criterion(GroupIndex::finite(1), GroupIndex::infinite()));
  CHECK(fact2_lift(true));
  CHECK_FALSE(fact2_lift(false));
}

TEST_CASE("BS(1,2) recognition") {
  auto yes = recognize_bs12(bs12_relator());
  CHECK(yes.answer == Bs12Answer::Yes);
  REQUIRE(yes.isomorphism);
  CHECK(yes.divisors == IntVector{1, 0});

  // a^-1 b^-1 a b^3 has abelianization Z + Z/2.
  auto no = recognize_bs12(FreeWord{-1, -2, 1, 2, 2, 2});
  CHECK(no.answer == Bs12Answer::No);
  CHECK(no.divisors == IntVector{2, 0});
  // a^-1 b^-1 a b b says a^-1 b a = b^2: BS(1,2) again.
  CHECK(recognize_bs12(FreeWord{-1, -2, 1, 2, 2}).answer == Bs12Answer::Yes);
  // Z x Z is not in the orbit.
  CHECK(recognize_bs12(FreeWord{-1, -2, 1, 2}).answer == Bs12Answer::No);
  // a^-1 b a b^-3 has divisors (2, 0).
  CHECK(recognize_bs12(FreeWord{-1, 2, 1, -2, -2, -2}).answer == Bs12Answer::No);
  CHECK_THROWS_AS(recognize_bs12(FreeWord{2, 1, -2, -2}), PreconditionError);
  CHECK_THROWS_AS(recognize_bs12(FreeWord{}), PreconditionError);

  for (int i = 0; i < 40; ++i) {
    FreeWord w = bs12_relator();
    F2Automorphism total;
    int moves = static_cast<int>(uniform(1, 4));
    for (int k = 0; k < moves; ++k) {
      const auto& phi = whitehead_automorphisms()[static_cast<std::size_t>(uniform(0, 18))];
      w = free_cyclic_reduce(phi.apply(w)).core;
    }
    auto r = recognize_bs12(w);
    CHECK(r.answer == Bs12Answer::Yes);
    REQUIRE(r.isomorphism);
    CHECK(cyclic_normal_form(r.isomorphism->apply(w)) == cyclic_normal_form(bs12_relator()));
  }
}
