#include "twistpos/poset.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "twistpos/error.hpp"

namespace twistpos {

FinitePoset::FinitePoset(std::vector<std::string> keys, std::vector<Edge> covers,
                         std::optional<std::vector<long>> rank)
    : keys_(std::move(keys)), covers_(std::move(covers)), rank_(std::move(rank)) {
  const auto n = keys_.size();
  up_.assign(n, {});
  down_.assign(n, {});
  for (const auto& [a, b] : covers_) {
    require(a < n && b < n, ErrorKind::IndexOutOfRange, "cover refers to a missing element");
    require(a != b, ErrorKind::InvalidInput, "cover relation on a single element");
    up_[a].push_back(b);
    down_[b].push_back(a);
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());

  // Kahn's algorithm, smallest index first for determinism.
  std::vector<std::size_t> indeg(n);
  for (std::size_t b = 0; b < n; ++b) indeg[b] = down_[b].size();
  std::vector<std::size_t> ready;
  for (std::size_t a = n; a-- > 0;)
    if (indeg[a] == 0) ready.push_back(a);
  while (!ready.empty()) {
    const auto a = ready.back();
    ready.pop_back();
    topo_.push_back(a);
    for (auto b : up_[a]) {
      if (--indeg[b] == 0) {
        ready.push_back(b);
        std::sort(ready.rbegin(), ready.rend());
      }
    }
  }
  require(topo_.size() == n, ErrorKind::InvalidInput, "cover relations contain a cycle");

  if (rank_) {
    require(rank_->size() == n, ErrorKind::InvalidInput, "rank vector has wrong size");
    for (const auto& [a, b] : covers_)
      require((*rank_)[b] == (*rank_)[a] + 1, ErrorKind::InvalidInput, "cover does not raise rank by one");
  }

  const auto words = (n + 63) / 64;
  closure_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    const auto a = *it;
    closure_[a][a / 64] |= 1ULL << (a % 64);
    for (auto b : up_[a])
      for (std::size_t k = 0; k < words; ++k) closure_[a][k] |= closure_[b][k];
  }
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (down_[a].empty()) out.push_back(a);
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (up_[a].empty()) out.push_back(a);
  return out;
}

std::vector<std::size_t> FinitePoset::interval(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out;
  for (auto z : topo_)
    if (leq(a, z) && leq(z, b)) out.push_back(z);
  return out;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& subset) const {
  std::vector<std::string> keys;
  std::optional<std::vector<long>> rank;
  if (rank_) rank.emplace();
  for (auto a : subset) {
    keys.push_back(keys_[a]);
    if (rank_) rank->push_back((*rank_)[a]);
  }
  std::vector<Edge> covers;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (!less(subset[i], subset[j])) continue;
      bool cover = true;
      for (std::size_t k = 0; k < subset.size() && cover; ++k)
        cover = !(less(subset[i], subset[k]) && less(subset[k], subset[j]));
      if (cover) covers.emplace_back(i, j);
    }
  }
  // Ranks only survive when the induced covers still raise them by one.
  if (rank)
    for (const auto& [a, b] : covers)
      if ((*rank)[b] != (*rank)[a] + 1) rank.reset();
  return FinitePoset(std::move(keys), std::move(covers), std::move(rank));
}

std::vector<std::vector<std::size_t>> FinitePoset::chains(std::size_t a, std::size_t b) const {
  std::vector<std::vector<std::size_t>> out;
  if (!leq(a, b)) return out;
  std::vector<std::size_t> path{a};
  std::function<void(std::size_t)> dfs = [&](std::size_t x) {
    if (x == b) {
      out.push_back(path);
      return;
    }
    for (auto z : up_[x]) {
      if (!leq(z, b)) continue;
      path.push_back(z);
      dfs(z);
      path.pop_back();
    }
  };
  dfs(a);
  return out;
}

PureReport check_pure(const FinitePoset& p) {
  const auto n = p.size();
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> lo(n, kNone), hi(n, 0), lo_from(n, kNone), hi_from(n, kNone);
    lo[x] = hi[x] = 0;
    for (auto a : p.topological_order()) {
      if (lo[a] == kNone) continue;
      for (auto b : p.up(a)) {
        if (lo[b] == kNone || lo[a] + 1 < lo[b]) {
          lo[b] = lo[a] + 1;
          lo_from[b] = a;
        }
        if (hi_from[b] == kNone || hi[a] + 1 > hi[b]) {
          hi[b] = hi[a] + 1;
          hi_from[b] = a;
        }
      }
    }
    for (auto y : p.topological_order()) {
      if (y == x || lo[y] == kNone || lo[y] == hi[y]) continue;
      PureReport r{false, {}, {}};
      for (auto z = y; z != x; z = lo_from[z]) r.shorter.push_back(z);
      r.shorter.push_back(x);
      for (auto z = y; z != x; z = hi_from[z]) r.longer.push_back(z);
      r.longer.push_back(x);
      std::reverse(r.shorter.begin(), r.shorter.end());
      std::reverse(r.longer.begin(), r.longer.end());
      return r;
    }
  }
  return {};
}

ThinReport check_thin(const FinitePoset& p) {
  require(check_pure(p).pure, ErrorKind::NotPure, "thinness needs a pure poset");
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::vector<std::size_t> middle_count(p.size(), 0);
    for (auto z : p.up(x))
      for (auto y : p.up(z)) ++middle_count[y];
    for (std::size_t y = 0; y < p.size(); ++y)
      if (middle_count[y] != 0 && middle_count[y] != 2) return {false, Edge{x, y}};
  }
  return {};
}

OrderComplex order_complex(const FinitePoset& p, ComplexMode mode) {
  std::vector<std::size_t> keep;
  if (mode == ComplexMode::OpenInterval) {
    const auto mins = p.minimal_elements();
    const auto maxs = p.maximal_elements();
    require(mins.size() == 1 && maxs.size() == 1, ErrorKind::InvalidInput,
            "open interval needs a unique minimum and maximum");
    for (std::size_t a = 0; a < p.size(); ++a)
      if (a != mins.front() && a != maxs.front()) keep.push_back(a);
  } else {
    for (std::size_t a = 0; a < p.size(); ++a) keep.push_back(a);
  }
  const auto sub = p.induced(keep);

  OrderComplex out;
  out.complex.vertices = keep.size();
  out.vertex_to_element = keep;
  std::vector<std::size_t> path;
  std::function<void(std::size_t)> dfs = [&](std::size_t x) {
    path.push_back(x);
    if (sub.up(x).empty()) {
      auto facet = path;
      std::sort(facet.begin(), facet.end());
      out.complex.facets.push_back(std::move(facet));
    }
    for (auto z : sub.up(x)) dfs(z);
    path.pop_back();
  };
  for (auto m : sub.minimal_elements()) dfs(m);
  std::sort(out.complex.facets.begin(), out.complex.facets.end());
  return out;
}

}  // namespace twistpos
