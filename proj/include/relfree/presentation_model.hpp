#pragma once

#include <memory>
#include <optional>
#include <string>

#include "relfree/bounded_check.hpp"
#include "relfree/classifier.hpp"

namespace relfree {

// A computable model of the presented group (or of the relevant
// decomposition of it), used to machine-check witness pairs.
class PresentationModel {
 public:
  enum class Kind {
    CoefficientGroup,   // w conjugate to g0 t g1: the group is G
    Amalgam,            // w conjugate to g1 t1, g1 != 1: G *_{g1 = t1^-1} T
    FreeProduct,        // w conjugate to t1: G * (T / <t1>)
    BaumslagSolitar12,  // cyclic G, relator in the Aut(F_2)-orbit of BS(1,2)
  };

  // The model for the presentation, if one of the above applies.
  static std::optional<PresentationModel> build(const RelativePresentation& p);

  static PresentationModel coefficient_group(const Signature& sig, const RelativeWord& core);
  static PresentationModel amalgam(const Signature& sig, const Element& g1, const Element& t1);
  static PresentationModel free_product(const Signature& sig, const Element& t1);
  static PresentationModel baumslag_solitar(const Signature& sig, const F2Automorphism& theta);

  Kind kind() const;
  std::string describe() const;

  bool is_identity(const RelativeWord& w) const;
  RelationSearchResult check_pair(const RelativeWord& u, const RelativeWord& v, std::size_t depth) const;

  PresentationModel(const PresentationModel&);
  PresentationModel& operator=(const PresentationModel&);
  PresentationModel(PresentationModel&&) noexcept;
  PresentationModel& operator=(PresentationModel&&) noexcept;
  ~PresentationModel();

 private:
  struct Impl;
  explicit PresentationModel(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

}  // namespace relfree
