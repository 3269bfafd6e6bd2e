#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relfree/backend.hpp"
#include "relfree/integer_matrix.hpp"
#include "relfree/relative_word.hpp"
#include "relfree/whitehead.hpp"
#include "relfree/word_analysis.hpp"

namespace relfree {

// <G, T | w> = (G * T) / <<w>>. T is F_n for ordinary relative presentations
// and Z^r for the generalized (noncyclic T) ones.
struct RelativePresentation {
  Signature sig;
  RelativeWord relator;

  RelativePresentation(Signature s, RelativeWord w);
  const Backend& coeff() const { return sig.coeff; }
  const Backend& tpart() const { return sig.tpart; }
};

enum class Verdict { HasFree, NoFree, Unknown, OutOfScope };
enum class NoFreeReason { IsomorphicToCoefficientGroup, BaumslagSolitar12, GeneralTExceptional };
enum class WitnessStatus { Cited, BoundedVerified, Refuted };

std::string to_string(Verdict v);
std::string to_string(NoFreeReason r);
std::string to_string(WitnessStatus s);

struct TraceStep {
  std::string rule;
  std::string citation;
  std::map<std::string, std::string> evidence;
};

// Two elements claimed to generate a free subgroup of rank 2.
struct WitnessPair {
  WitnessPair(RelativeWord u_, RelativeWord v_) : u(std::move(u_)), v(std::move(v_)) {}

  RelativeWord u;
  RelativeWord v;
  WitnessStatus status = WitnessStatus::Cited;
  std::size_t depth = 0;        // bounded-verified / refuted depth
  std::string provenance;       // rule name
  std::optional<int> d;         // lemma parameter, in {2, 3}
  std::string counterexample;   // when refuted
  std::string note;
};

struct Diagnostics {
  std::vector<std::int64_t> exponent_sums;  // per T generator
  std::optional<UnimodularityReport> unimodularity;
  std::optional<ComplexityClass> complexity;
  std::optional<Form1> form1;
  std::optional<std::size_t> x1_size;
  std::optional<IntVector> abelianization_divisors;
  std::vector<std::string> messages;
  // Intermediate words (cyclic reduction, complexity-one normal form, coset form), for verbose reports.
  std::map<std::string, std::string> intermediate;
};

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::optional<NoFreeReason> reason;
  std::vector<TraceStep> trace;
  std::vector<WitnessPair> witnesses;
  Diagnostics diagnostics;
};

struct ClassifyOptions {
  // Depth of the bounded relation check used to upgrade witnesses wherever
  // a computable model of the presented group exists.
  std::size_t verify_depth = 10;
};

Classification classify(const RelativePresentation& p, const ClassifyOptions& opts = {});

enum class Bs12Answer { Yes, No, Unknown };
std::string to_string(Bs12Answer a);

struct Bs12Recognition {
  Bs12Answer answer = Bs12Answer::Unknown;
  IntVector divisors;  // abelianization divisors of <a, b | r>
  // On Yes: an automorphism theta of F_2 with theta(r) conjugate to the
  // standard relator or its inverse.
  std::optional<F2Automorphism> isomorphism;
};

// a^-1 b a b^-2, i.e. g^-1 t g t^-2 with a = g, b = t.
FreeWord bs12_relator();

// Sound but incomplete recognition of <a, b | r> ~ BS(1,2): No on an
// abelianization mismatch, Yes when r lies in the Aut(F_2)-orbit of the
// standard relator (up to inversion), Unknown otherwise. r must be
// cyclically reduced and nonempty.
Bs12Recognition recognize_bs12(std::span<const Letter> r);

// Witness candidates (g1 h1^{t^d}, h2^{t^d} g2) for d = 2 and d = 3, with
// h1, h2, h1 h2 outside <a_m> and g2, g1, g2 g1 outside <b_0>. Requires a
// noncyclic coefficient group.
std::vector<WitnessPair> lemma_witnesses(const Form1& f);

// Sufficient condition for a free subgroup in an amalgam A *_C B: C proper
// in both factors and of index > 2 in at least one.
bool fact1_criterion(GroupIndex index_a, GroupIndex index_b);

// For a cyclic normal subgroup <a> of A: A contains F_2 iff A/<a> does.
bool fact2_lift(bool quotient_has_free);

}  // namespace relfree
