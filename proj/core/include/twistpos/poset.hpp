#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twistpos {

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite poset given by elements and a generating set of relations
/// ("covers"). The order is the reflexive transitive closure of the covers.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(std::vector<std::string> keys, std::vector<Edge> covers,
              std::optional<std::vector<long>> rank = std::nullopt);

  std::size_t size() const noexcept { return keys_.size(); }
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  const std::vector<Edge>& covers() const noexcept { return covers_; }
  const std::optional<std::vector<long>>& rank() const noexcept { return rank_; }

  /// Targets of the generating relations out of a, sorted.
  const std::vector<std::size_t>& up(std::size_t a) const { return up_[a]; }
  const std::vector<std::size_t>& down(std::size_t a) const { return down_[a]; }
  bool leq(std::size_t a, std::size_t b) const { return (closure_[a][b / 64] >> (b % 64)) & 1ULL; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  /// Elements in a topological order (every relation points forward).
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }
  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  /// {z : a <= z <= b} in topological order.
  std::vector<std::size_t> interval(std::size_t a, std::size_t b) const;
  /// Covers of the induced order on `subset` (transitive reduction).
  FinitePoset induced(const std::vector<std::size_t>& subset) const;
  /// Maximal chains from a to b along the generating relations, DFS order.
  std::vector<std::vector<std::size_t>> chains(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::string> keys_;
  std::vector<Edge> covers_;
  std::optional<std::vector<long>> rank_;
  std::vector<std::vector<std::size_t>> up_, down_;
  std::vector<std::vector<std::uint64_t>> closure_;
  std::vector<std::size_t> topo_;
};

struct PureReport {
  bool pure = true;
  std::vector<std::size_t> shorter, longer;  // witness chains when not pure
};
PureReport check_pure(const FinitePoset& p);

struct ThinReport {
  bool thin = true;
  std::optional<Edge> offending;  // (x, y) with a rank-2 interval of the wrong size
};
/// Throws NotPure on a non-pure poset.
ThinReport check_thin(const FinitePoset& p);

struct SimplicialComplex {
  std::size_t vertices = 0;
  std::vector<std::vector<std::size_t>> facets;  // sorted vertex lists
};

enum class ComplexMode { Full, OpenInterval };

struct OrderComplex {
  SimplicialComplex complex;
  std::vector<std::size_t> vertex_to_element;
};

/// Chains of the poset (or of its open interval after removing the unique
/// minimum and maximum) as a simplicial complex given by its facets.
OrderComplex order_complex(const FinitePoset& p, ComplexMode mode);

}  // namespace twistpos
