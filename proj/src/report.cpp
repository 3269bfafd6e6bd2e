#include "relfree/report.hpp"

#include <sstream>


namespace relfree {

using nlohmann::json;

namespace {

json element_json(const Signature& sig, const Element& g) {
  return format_word(RelativeWord::coefficient(sig, g));
}

json unimodularity_json(const UnimodularityReport& u) {
  json j{{"overall", u.overall}, {"diagnostic", u.diagnostic}};
  if (u.flavor == UnimodularityReport::Flavor::Cyclic) {
    j["flavor"] = "cyclic";
    j["exponent_sum"] = u.exponent_sum;
  } else {
    j["flavor"] = "general";
    j["infinite_order"] = u.cond_infinite_order;
    j["normal"] = u.cond_normal;
    j["quotient_strong_up"] = u.cond_quotient_strong_up;
  }
  return j;
}

json form1_json(const Form1& f) {
  json pairs = json::array();
  for (const auto& [b, a] : f.pairs) pairs.push_back({{"a", element_json(f.sig, a)}, {"b", element_json(f.sig, b)}});
  return {{"c", element_json(f.sig, f.c)}, {"m", f.m()}, {"pairs", pairs}, {"word", format_word(f.rebuild())}};
}

json witness_json(const WitnessPair& w) {
  json j{{"u", format_word(w.u)},
         {"v", format_word(w.v)},
         {"status", to_string(w.status)},
         {"depth", w.depth},
         {"d", w.d ? json(*w.d) : json(nullptr)},
         {"provenance", w.provenance},
         {"note", w.note}};
  if (!w.counterexample.empty()) j["counterexample"] = w.counterexample;
  return j;
}

}  // namespace

json report_json(const RelativePresentation& p, const Classification& c, const ReportOptions& opts) {
  const auto& d = c.diagnostics;
  json diag{{"exponent_sums", d.exponent_sums}, {"messages", d.messages}};
  diag["unimodularity"] = d.unimodularity ? unimodularity_json(*d.unimodularity) : json(nullptr);
  diag["complexity"] = d.complexity ? json(to_string(*d.complexity)) : json(nullptr);
  diag["form1"] = d.form1 ? form1_json(*d.form1) : json(nullptr);
  diag["X1_size"] = d.x1_size ? json(*d.x1_size) : json(nullptr);
  diag["abelianization_divisors"] = d.abelianization_divisors ? json(*d.abelianization_divisors) : json(nullptr);
  if (opts.verbose) diag["intermediate"] = d.intermediate;

  json trace = json::array();
  for (const auto& s : c.trace) trace.push_back({{"rule", s.rule}, {"citation", s.citation}, {"evidence", s.evidence}});
  json witnesses = json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(witness_json(w));

  return {{"presentation",
           {{"coeff", p.coeff().describe()}, {"tpart", p.tpart().describe()}, {"relator", format_word(p.relator)}}},
          {"verdict", to_string(c.verdict)},
          {"reason", c.reason ? json(to_string(*c.reason)) : json(nullptr)},
          {"trace", trace},
          {"diagnostics", diag},
          {"witnesses", witnesses}};
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

std::string render_text(const RelativePresentation& p, const Classification& c, const ReportOptions& opts) {
  std::ostringstream out;
  out << "group    <" << p.coeff().describe() << ", " << p.tpart().describe() << " | "
      << format_word(p.relator) << ">\n";
  out << "verdict  " << to_string(c.verdict);
  if (c.reason) out << " (" << to_string(*c.reason) << ")";
  out << "\n";
  const auto& d = c.diagnostics;
  if (d.complexity) out << "complexity " << to_string(*d.complexity) << "\n";
  if (d.x1_size) out << "|X1|     " << *d.x1_size << "\n";
  if (d.abelianization_divisors) {
    out << "abelianization divisors";
    for (auto x : *d.abelianization_divisors) out << " " << x;
    out << "\n";
  }
  out << "trace:\n";
  for (const auto& s : c.trace) {
    out << "  - " << s.rule << "\n      " << s.citation << "\n";
    for (const auto& [k, v] : s.evidence) out << "      " << k << ": " << v << "\n";
  }
  if (!c.witnesses.empty()) out << "witnesses:\n";
  for (const auto& w : c.witnesses) {
    out << "  u = " << format_word(w.u) << ", v = " << format_word(w.v) << "  [" << to_string(w.status);
    if (w.status != WitnessStatus::Cited) out << "(" << w.depth << ")";
    if (w.d) out << ", d = " << *w.d;
    out << "]\n";
    if (!w.counterexample.empty()) out << "    relation: " << w.counterexample << "\n";
    if (!w.note.empty()) out << "    " << w.note << "\n";
  }
  for (const auto& m : d.messages) out << "note: " << m << "\n";
  if (opts.verbose) {
    for (const auto& [k, v] : d.intermediate) out << k << ": " << v << "\n";
  }
  return out.str();
}

}  // namespace relfree
