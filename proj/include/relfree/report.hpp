#pragma once

#include <string>

#include "json.hpp"
#include "relfree/classifier.hpp"

namespace relfree {

struct ReportOptions {
  bool verbose = false;  // include intermediate words
};

nlohmann::json report_json(const RelativePresentation& p, const Classification& c,
                           const ReportOptions& opts = {});

// Key-sorted, two-space indented, trailing newline.
std::string render_json(const nlohmann::json& j);

std::string render_text(const RelativePresentation& p, const Classification& c,
                        const ReportOptions& opts = {});

}  // namespace relfree
