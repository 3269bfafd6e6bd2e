#include "relfree/presentation_model.hpp"

#include <variant>

#include "relfree/errors.hpp"
#include "relfree/models.hpp"

namespace relfree {

namespace {

struct CoefficientIso {
  Signature sig;
  Element t_image;

  Element map(const RelativeWord& w) const {
    const Backend& g = sig.coeff;
    Element acc = g.identity();
    for (const auto& p : w.pieces()) {
      if (p.factor == Factor::Coefficient) {
        acc = g.multiply(acc, p.value);
      } else {
        acc = g.multiply(acc, g.power(t_image, syllable_exponent(sig.tpart, p.value)));
      }
    }
    return acc;
  }
};

struct AmalgamCase {
  Signature sig;
  AmalgamModel model;
  std::optional<CosetComplement> quotient;  // free product case: T -> T/<t1>

  ReducedSequence map(const RelativeWord& w) const {
    std::vector<Syllable> word;
    for (const auto& p : w.pieces()) {
      if (p.factor == Factor::Coefficient) {
        word.push_back({Side::A, p.value});
      } else if (quotient) {
        word.push_back({Side::B, Element{quotient->quotient_coordinates(p.value.data)}});
      } else {
        word.push_back({Side::B, p.value});
      }
    }
    return model.amalgam.normal_form(word);
  }
};

std::int64_t cyclic_exponent(const Backend& b, const Element& e) {
  if (b.kind() == BackendKind::FreeAbelian) return e.data[0];
  std::int64_t k = 0;
  for (Letter x : e.data) k += x > 0 ? 1 : -1;
  return k;
}

// G and T both of rank one, read as F_2 = <a, b> with a = g, b = t.
FreeWord to_f2(const RelativeWord& w) {
  const auto& sig = w.signature();
  FreeWord out;
  for (const auto& p : w.pieces()) {
    const bool coeff = p.factor == Factor::Coefficient;
    std::int64_t e = coeff ? cyclic_exponent(sig.coeff, p.value) : syllable_exponent(sig.tpart, p.value);
    Letter letter = coeff ? 1 : 2;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out.push_back(e < 0 ? -letter : letter);
  }
  return free_reduce(out);
}

struct Bs12Case {
  Signature sig;
  F2Automorphism theta;

  Mat2Q map(const RelativeWord& w) const { return bs12_matrix(theta.apply(to_f2(w))); }
};

}  // namespace

struct PresentationModel::Impl {
  Kind kind;
  std::string description;
  std::variant<CoefficientIso, AmalgamCase, Bs12Case> body;
};

PresentationModel::PresentationModel(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
PresentationModel::PresentationModel(const PresentationModel& o) : impl_(std::make_unique<Impl>(*o.impl_)) {}
PresentationModel& PresentationModel::operator=(const PresentationModel& o) {
  impl_ = std::make_unique<Impl>(*o.impl_);
  return *this;
}
PresentationModel::PresentationModel(PresentationModel&&) noexcept = default;
PresentationModel& PresentationModel::operator=(PresentationModel&&) noexcept = default;
PresentationModel::~PresentationModel() = default;

PresentationModel::Kind PresentationModel::kind() const { return impl_->kind; }
std::string PresentationModel::describe() const { return impl_->description; }

PresentationModel PresentationModel::coefficient_group(const Signature& sig, const RelativeWord& core) {
  // core == g0 t g1, so t == g0^-1 g1^-1.
  if (core.syllable_count() != 1 || syllable_exponent(sig.tpart, core.syllables()[0]) != 1) {
    throw PreconditionError("coefficient_group model: relator is not of the form g0 t g1");
  }
  const Backend& g = sig.coeff;
  Element t_image = g.multiply(g.inverse(core.coefficients()[0]), g.inverse(core.coefficients()[1]));
  return PresentationModel(std::make_unique<Impl>(
      Impl{Kind::CoefficientGroup, "coefficient group " + g.describe() + " (t = " +
                                       format_word(RelativeWord::coefficient(sig, t_image)) + ")",
           CoefficientIso{sig, t_image}}));
}

PresentationModel PresentationModel::amalgam(const Signature& sig, const Element& g1, const Element& t1) {
  AmalgamModel m{Amalgam(sig.coeff, g1, sig.tpart, sig.tpart.inverse(t1))};
  std::string desc = "amalgam " + sig.coeff.describe() + " *_{" +
                     format_word(RelativeWord::coefficient(sig, g1)) + " = (" +
                     format_word(RelativeWord::tpart(sig, t1)) + ")^-1} " + sig.tpart.describe();
  return PresentationModel(
      std::make_unique<Impl>(Impl{Kind::Amalgam, desc, AmalgamCase{sig, std::move(m), std::nullopt}}));
}

PresentationModel PresentationModel::free_product(const Signature& sig, const Element& t1) {
  if (sig.tpart.kind() != BackendKind::FreeAbelian || sig.tpart.rank() < 2) {
    throw PreconditionError("free_product model: T-part must be Z^r, r >= 2");
  }
  CosetComplement q(t1.data);
  Backend quotient = Backend::free_abelian(sig.tpart.rank() - 1);
  AmalgamModel m{Amalgam::free_product(sig.coeff, quotient)};
  std::string desc = "free product " + sig.coeff.describe() + " * " + quotient.describe() +
                     " (T / <" + format_word(RelativeWord::tpart(sig, t1)) + ">)";
  return PresentationModel(std::make_unique<Impl>(Impl{Kind::FreeProduct, desc, AmalgamCase{sig, std::move(m), q}}));
}

PresentationModel PresentationModel::baumslag_solitar(const Signature& sig, const F2Automorphism& theta) {
  if (!sig.coeff.is_cyclic() || sig.tpart.rank() != 1) {
    throw PreconditionError("BS(1,2) model: coefficient group and T-part must be cyclic");
  }
  std::string desc = "BS(1,2) matrices via a -> " + format_f2_word(theta.image_a) +
                     ", b -> " + format_f2_word(theta.image_b);
  return PresentationModel(
      std::make_unique<Impl>(Impl{Kind::BaumslagSolitar12, desc, Bs12Case{sig, theta}}));
}

std::optional<PresentationModel> PresentationModel::build(const RelativePresentation& p) {
  const auto& sig = p.sig;
  if (sig.tpart.rank() == 1) {
    RelativeWord w = normalize_orientation(p.relator);
    if (exponent_sum(w, 1) != 1) return std::nullopt;
    RelativeWord core = cyclic_reduce(w).core;
    auto cls = complexity(core);
    if (cls == ComplexityClass::Zero) return coefficient_group(sig, core);
    if (cls == ComplexityClass::One && sig.coeff.is_cyclic()) {
      auto rec = recognize_bs12(free_cyclic_reduce(to_f2(core)).core);
      if (rec.answer == Bs12Answer::Yes) return baumslag_solitar(sig, *rec.isomorphism);
    }
    return std::nullopt;
  }
  if (sig.tpart.kind() != BackendKind::FreeAbelian) return std::nullopt;
  if (!is_unimodular_general(p.relator).overall) return std::nullopt;
  RelativeWord core = cyclic_reduce(p.relator).core;
  if (core.syllable_count() != 1) return std::nullopt;
  const auto& cs = core.coefficients();
  Element g1 = sig.coeff.multiply(cs[1], cs[0]);
  if (sig.coeff.is_identity(g1)) return free_product(sig, core.syllables()[0]);
  return amalgam(sig, g1, core.syllables()[0]);
}

bool PresentationModel::is_identity(const RelativeWord& w) const {
  return std::visit(
      [&](const auto& m) -> bool {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CoefficientIso>) {
          return m.sig.coeff.is_identity(m.map(w));
        } else if constexpr (std::is_same_v<T, AmalgamCase>) {
          return m.map(w).is_identity();
        } else {
          return m.map(w).is_identity();
        }
      },
      impl_->body);
}

RelationSearchResult PresentationModel::check_pair(const RelativeWord& u, const RelativeWord& v,
                                                   std::size_t depth) const {
  return std::visit(
      [&](const auto& m) -> RelationSearchResult {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CoefficientIso>) {
          BackendModel model{m.sig.coeff};
          return bounded_no_relation_check(model, m.map(u), m.map(v), depth);
        } else if constexpr (std::is_same_v<T, AmalgamCase>) {
          return bounded_no_relation_check(m.model, m.map(u), m.map(v), depth);
        } else {
          return bounded_no_relation_check(Bs12Model{}, m.map(u), m.map(v), depth);
        }
      },
      impl_->body);
}

}  // namespace relfree
