#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "relfree/backend.hpp"
#include "relfree/classifier.hpp"

namespace relfree {

// Backend spec: "Z", "Z^r", "Z r", "F_r", "F r". "Z/n" and "Z_n" ask for
// torsion and raise ScopeError, as does rank 0 for the T-part.
Backend parse_backend(std::string_view spec, bool is_tpart);

// Line-based format:
//   coeff <spec>
//   tpart <spec>
//   relator <tokens>
// '#' starts a comment; blank lines are ignored.
RelativePresentation parse_presentation(std::string_view text);
RelativePresentation load_presentation(const std::filesystem::path& path);

std::string format_presentation(const RelativePresentation& p);

}  // namespace relfree
