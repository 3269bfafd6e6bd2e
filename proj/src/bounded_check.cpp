#include "relfree/bounded_check.hpp"

namespace relfree {

std::string format_pair_word(std::span<const int> w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    const int gen = w[i] > 0 ? w[i] : -w[i];
    const bool positive = w[i] > 0;
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    out += gen == 1 ? 'u' : 'v';
    const long e = positive ? run : -run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace relfree
