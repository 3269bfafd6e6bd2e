#pragma once

// Bounded search for relations between two elements u, v of a group model:
// every nonempty freely reduced word over {u, u^-1, v, v^-1} of length <= L
// is evaluated and compared with the identity. The serial version is the
// reference; the OpenMP version splits each length level by word prefix and
// must return the same (length-lex minimal) counterexample.
//
// A Model provides
//   using Elem = ...;
//   Elem identity() const;
//   Elem multiply(const Elem&, const Elem&) const;
//   Elem inverse(const Elem&) const;
//   bool is_identity(const Elem&) const;

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace relfree {

// Letters of a word over the pair: 1 = u, -1 = u^-1, 2 = v, -2 = v^-1.
// Length-lex order uses u < u^-1 < v < v^-1.
inline constexpr std::array<int, 4> kPairLetters{1, -1, 2, -2};

struct RelationSearchResult {
  bool pass = true;
  std::vector<int> counterexample;  // empty on pass
  std::size_t depth = 0;
  std::uint64_t words_checked = 0;
};

// "u^-1 v u v^-2"
std::string format_pair_word(std::span<const int> w);

namespace detail {

template <class Model>
struct PairGenerators {
  std::array<typename Model::Elem, 4> g;  // indexed like kPairLetters

  PairGenerators(const Model& model, const typename Model::Elem& u, const typename Model::Elem& v)
      : g{u, model.inverse(u), v, model.inverse(v)} {}
};

inline int letter_slot(int letter) {
  switch (letter) {
    case 1: return 0;
    case -1: return 1;
    case 2: return 2;
    default: return 3;
  }
}

// Depth-first search, in lex order, of the reduced words of exactly `length`
// letters extending `prefix`, whose product is `prefix_value`. Returns true
// and fills `word` at the first word evaluating to the identity.
template <class Model>
bool first_relation_below(const Model& model, const PairGenerators<Model>& gens,
                          std::vector<int>& word, const typename Model::Elem& prefix_value,
                          std::size_t length, std::uint64_t& checked,
                          const std::atomic<int>* cutoff = nullptr, int my_rank = 0) {
  if (word.size() == length) {
    ++checked;
    return model.is_identity(prefix_value);
  }
  if (cutoff != nullptr && cutoff->load(std::memory_order_relaxed) < my_rank) return false;
  for (int letter : kPairLetters) {
    if (!word.empty() && word.back() == -letter) continue;
    word.push_back(letter);
    auto next = model.multiply(prefix_value, gens.g[letter_slot(letter)]);
    if (first_relation_below(model, gens, word, next, length, checked, cutoff, my_rank)) return true;
    word.pop_back();
  }
  return false;
}

template <class Model>
typename Model::Elem evaluate_pair_word(const Model& model, const PairGenerators<Model>& gens,
                                        std::span<const int> w) {
  auto acc = model.identity();
  for (int x : w) acc = model.multiply(acc, gens.g[letter_slot(x)]);
  return acc;
}

template <class Model>
void confirm_counterexample(const Model& model, const PairGenerators<Model>& gens,
                            std::span<const int> w) {
  if (!model.is_identity(evaluate_pair_word(model, gens, w))) {
    throw std::logic_error("bounded check: counterexample failed re-evaluation");
  }
}

// All reduced words of exactly `length` letters, in lex order.
inline std::vector<std::vector<int>> reduced_prefixes(std::size_t length) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out) {
      for (int letter : kPairLetters) {
        if (!p.empty() && p.back() == -letter) continue;
        auto q = p;
        q.push_back(letter);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

template <class Model>
RelationSearchResult bounded_no_relation_check_serial(const Model& model,
                                                      const typename Model::Elem& u,
                                                      const typename Model::Elem& v,
                                                      std::size_t max_length) {
  detail::PairGenerators<Model> gens(model, u, v);
  RelationSearchResult r;
  r.depth = max_length;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<int> word;
    if (detail::first_relation_below(model, gens, word, model.identity(), len, r.words_checked)) {
      detail::confirm_counterexample(model, gens, word);
      r.pass = false;
      r.counterexample = std::move(word);
      return r;
    }
  }
  return r;
}

template <class Model>
RelationSearchResult bounded_no_relation_check(const Model& model, const typename Model::Elem& u,
                                               const typename Model::Elem& v,
                                               std::size_t max_length) {
  detail::PairGenerators<Model> gens(model, u, v);
  RelationSearchResult r;
  r.depth = max_length;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const auto prefixes = detail::reduced_prefixes(std::min<std::size_t>(len, 3));
    const int n = static_cast<int>(prefixes.size());
    std::vector<std::vector<int>> found(prefixes.size());
    std::vector<char> hit(prefixes.size(), 0);
    std::atomic<int> best{n};
    std::atomic<std::uint64_t> checked{0};
    std::exception_ptr error;
    std::mutex error_mutex;

#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < n; ++i) {
      if (best.load(std::memory_order_relaxed) < i) continue;
      try {
        std::vector<int> word = prefixes[static_cast<std::size_t>(i)];
        auto value = detail::evaluate_pair_word(model, gens, word);
        std::uint64_t local = 0;
        if (detail::first_relation_below(model, gens, word, value, len, local, &best, i)) {
          found[static_cast<std::size_t>(i)] = std::move(word);
          hit[static_cast<std::size_t>(i)] = 1;
          int cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
        checked += local;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    r.words_checked += checked.load();
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
      if (hit[i]) {
        detail::confirm_counterexample(model, gens, found[i]);
        r.pass = false;
        r.counterexample = std::move(found[i]);
        return r;
      }
    }
  }
  return r;
}

}  // namespace relfree
