#include "relfree/presentation_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "relfree/errors.hpp"

namespace relfree {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int parse_rank(const std::string& digits, std::string_view spec) {
  int r = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || r > 64) {
    throw ParseError("bad rank in group spec '" + std::string(spec) + "'");
  }
  return r;
}

}  // namespace

Backend parse_backend(std::string_view spec, bool is_tpart) {
  static const std::regex torsion(R"(Z\s*(/|_)\s*\d+)");
  static const std::regex abelian(R"(Z(\s*\^\s*(\d+)|\s+(\d+))?)");
  static const std::regex free(R"(F(\s*_\s*|\s+)(\d+))");
  const std::string s = trim(spec);
  std::smatch m;
  if (std::regex_match(s, torsion)) {
    throw ScopeError("torsion coefficient groups are not supported: '" + s + "'");
  }
  int rank;
  BackendKind kind;
  if (std::regex_match(s, m, abelian)) {
    kind = BackendKind::FreeAbelian;
    rank = m[2].matched ? parse_rank(m[2], s) : m[3].matched ? parse_rank(m[3], s) : 1;
  } else if (std::regex_match(s, m, free)) {
    kind = BackendKind::Free;
    rank = parse_rank(m[2], s);
  } else {
    throw ParseError("unrecognized group spec '" + s + "'");
  }
  if (rank == 0) {
    if (is_tpart) throw ScopeError("empty T-part");
    throw ParseError("coefficient group must be nontrivial");
  }
  return kind == BackendKind::Free ? Backend::free(rank) : Backend::free_abelian(rank);
}

RelativePresentation parse_presentation(std::string_view text) {
  std::optional<Backend> coeff, tpart;
  std::optional<std::string> relator;
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ';', '\n');
  std::istringstream in{normalized};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto sp = line.find_first_of(" \t");
    const std::string key = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(std::string_view(line).substr(sp));
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (key == "coeff") {
      if (coeff) throw ParseError(where() + "duplicate coeff line");
      coeff = parse_backend(rest, false);
    } else if (key == "tpart") {
      if (tpart) throw ParseError(where() + "duplicate tpart line");
      tpart = parse_backend(rest, true);
    } else if (key == "relator") {
      if (relator) throw ParseError(where() + "duplicate relator line");
      if (rest.empty()) throw ParseError(where() + "empty relator");
      relator = rest;
    } else {
      throw ParseError(where() + "unknown directive '" + key + "'");
    }
  }
  if (!coeff) throw ParseError("missing coeff line");
  if (!tpart) throw ParseError("missing tpart line");
  if (!relator) throw ParseError("missing relator line");
  Signature sig{*coeff, *tpart};
  RelativeWord w = parse_word(*relator, sig);
  if (w.empty()) throw ParseError("relator reduces to the identity");
  return RelativePresentation(sig, std::move(w));
}

RelativePresentation load_presentation(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_presentation(ss.str());
}

namespace {

std::string spec_of(const Backend& b) {
  if (b.kind() == BackendKind::Free) return "F " + std::to_string(b.rank());
  return b.rank() == 1 ? "Z" : "Z^" + std::to_string(b.rank());
}

}  // namespace

std::string format_presentation(const RelativePresentation& p) {
  return "coeff " + spec_of(p.coeff()) + "\ntpart " + spec_of(p.tpart()) + "\nrelator " +
         format_word(p.relator) + "\n";
}

}  // namespace relfree
