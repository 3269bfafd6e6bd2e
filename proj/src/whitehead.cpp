#include "relfree/whitehead.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "relfree/errors.hpp"

namespace relfree {

FreeWord F2Automorphism::apply(std::span<const Letter> w) const {
  FreeWord out;
  for (Letter x : w) {
    const FreeWord& img = std::abs(x) == 1 ? image_a : image_b;
    if (std::abs(x) > 2 || x == 0) throw PreconditionError("F2Automorphism: letter outside F_2");
    out = free_concat(out, x > 0 ? img : free_inverse(img));
  }
  return out;
}

F2Automorphism F2Automorphism::then(const F2Automorphism& next) const {
  return {next.apply(image_a), next.apply(image_b)};
}

const std::vector<F2Automorphism>& whitehead_automorphisms() {
  static const std::vector<F2Automorphism> autos = [] {
    std::vector<F2Automorphism> v;
    // Type I: a -> +-a or +-b, b -> the remaining generator with either sign.
    for (Letter fa : {1, -1, 2, -2}) {
      for (Letter fb : {1, -1, 2, -2}) {
        if (std::abs(fa) == std::abs(fb)) continue;
        if (fa == 1 && fb == 2) continue;
        v.push_back({{fa}, {fb}});
      }
    }
    // Type II.
    for (Letter x : {1, -1}) {
      v.push_back({{1}, {2, x}});
      v.push_back({{1}, {-x, 2}});
      v.push_back({{1}, {-x, 2, x}});
    }
    for (Letter y : {2, -2}) {
      v.push_back({{1, y}, {2}});
      v.push_back({{-y, 1}, {2}});
      v.push_back({{-y, 1, y}, {2}});
    }
    return v;
  }();
  return autos;
}

bool WhiteheadResult::contains(std::span<const Letter> w) const {
  return std::binary_search(canonical_set.begin(), canonical_set.end(), cyclic_normal_form(w));
}

std::vector<FreeWord> WhiteheadResult::expanded() const {
  std::set<FreeWord> all;
  for (const auto& w : canonical_set) {
    FreeWord inv = free_inverse(w);
    for (std::size_t i = 0; i < std::max<std::size_t>(w.size(), 1); ++i) {
      all.insert(rotate_left(w, i));
      all.insert(rotate_left(inv, i));
    }
  }
  return {all.begin(), all.end()};
}

WhiteheadResult whitehead_minimize(std::span<const Letter> v) {
  for (Letter x : v) {
    if (x == 0 || std::abs(x) > 2) throw PreconditionError("whitehead_minimize: letter outside F_2");
  }
  const auto& autos = whitehead_automorphisms();

  WhiteheadResult r;
  FreeWord cur = cyclic_normal_form(v);
  F2Automorphism phi = F2Automorphism::identity();
  for (bool improved = true; improved;) {
    improved = false;
    for (const auto& a : autos) {
      FreeWord img = cyclic_normal_form(a.apply(cur));
      if (img.size() < cur.size()) {
        cur = std::move(img);
        phi = phi.then(a);
        improved = true;
        break;
      }
    }
  }
  r.minimal_length = cur.size();
  r.minimal_word = cur;
  r.to_minimal = phi;

  r.paths.emplace(cur, F2Automorphism::identity());
  std::deque<FreeWord> queue{cur};
  while (!queue.empty()) {
    FreeWord x = std::move(queue.front());
    queue.pop_front();
    const F2Automorphism path = r.paths.at(x);
    for (const auto& a : autos) {
      FreeWord y = cyclic_normal_form(a.apply(x));
      if (y.size() != r.minimal_length || r.paths.count(y)) continue;
      r.paths.emplace(y, path.then(a));
      queue.push_back(std::move(y));
    }
  }
  for (const auto& [w, _] : r.paths) r.canonical_set.push_back(w);
  return r;
}

}  // namespace relfree
