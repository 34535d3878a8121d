#pragma once

// Slow reference implementations used to check the fast paths.

#include <map>
#include <set>
#include <vector>

#include "twistpos/weyl.hpp"

namespace oracle {

using twistpos::WeylElement;
using twistpos::WeylGroupPtr;
using twistpos::Word;

/// Shortest word length by breadth-first search over words, up to `cap`.
inline std::size_t word_search_length(const WeylElement& w, std::size_t cap = 12) {
  const auto& g = w.group();
  const auto e = g->identity();
  std::vector<WeylElement> frontier{e};
  std::set<std::vector<std::int64_t>> seen;
  seen.emplace(e.matrix().begin(), e.matrix().end());
  for (std::size_t len = 0; len <= cap; ++len) {
    for (const auto& x : frontier)
      if (x == w) return len;
    std::vector<WeylElement> next;
    for (const auto& x : frontier) {
      for (std::size_t i = 0; i < g->rank(); ++i) {
        // Multiply by the raw reflection matrix, not through the length-tracking path.
        std::vector<std::int64_t> m(x.matrix().begin(), x.matrix().end());
        const auto n = g->rank();
        auto s = g->simple_reflection(i);
        std::vector<std::int64_t> p(n * n, 0);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t k = 0; k < n; ++k) p[r * n + c] += m[r * n + k] * s.entry(k, c);
        if (seen.insert(p).second) next.push_back(g->from_matrix(p));
      }
    }
    frontier = std::move(next);
  }
  return SIZE_MAX;
}

/// Bruhat order by the subword property: some length-l(v) subword of a
/// reduced word of w evaluates to v.
inline bool subword_leq(const WeylElement& v, const WeylElement& w) {
  const auto word = twistpos::canonical_reduced_word(w);
  const auto n = word.size();
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != v.length()) continue;
    Word sub;
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1ULL) sub.push_back(word[k]);
    if (w.group()->from_word(sub) == v) return true;
  }
  return false;
}

/// Lower Bruhat ideal of w as the set of all subword products.
inline std::vector<WeylElement> lower_ideal(const WeylElement& w) {
  const auto word = twistpos::canonical_reduced_word(w);
  std::vector<WeylElement> out;
  std::set<std::vector<std::int64_t>> seen;
  for (std::uint64_t mask = 0; mask < (1ULL << word.size()); ++mask) {
    Word sub;
    for (std::size_t k = 0; k < word.size(); ++k)
      if ((mask >> k) & 1ULL) sub.push_back(word[k]);
    auto x = w.group()->from_word(sub);
    if (seen.insert({x.matrix().begin(), x.matrix().end()}).second) out.push_back(x);
  }
  return out;
}

}  // namespace oracle
