#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twistpos/cartan.hpp"

namespace twistpos {

using Word = std::vector<std::size_t>;
using RootVector = std::vector<std::int64_t>;

/// Subset of node indices as a bitmask (rank is capped at 64).
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
  NodeSet(std::initializer_list<std::size_t> nodes) {
    for (auto i : nodes) insert(i);
  }
  static NodeSet all(std::size_t n) { return NodeSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1)); }

  bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1ULL); }
  void insert(std::size_t i) { bits_ |= 1ULL << i; }
  bool empty() const { return bits_ == 0; }
  std::size_t count() const { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }
  std::uint64_t bits() const { return bits_; }
  std::vector<std::size_t> members() const;

  friend bool operator==(NodeSet a, NodeSet b) { return a.bits_ == b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

struct EnumerationBudget {
  std::size_t max_elements = 20000;
  std::size_t max_length = 256;
};

class WeylElement;

/// Shared, immutable description of W(A). Elements hold a pointer to it.
class WeylGroup : public std::enable_shared_from_this<WeylGroup> {
 public:
  static std::shared_ptr<const WeylGroup> create(CartanMatrix cartan, EnumerationBudget budget = {});

  const CartanMatrix& cartan() const noexcept { return cartan_; }
  std::size_t rank() const noexcept { return cartan_.size(); }
  const EnumerationBudget& budget() const noexcept { return budget_; }

  WeylElement identity() const;
  WeylElement simple_reflection(std::size_t i) const;
  WeylElement from_word(const Word& word) const;
  /// Builds an element from its matrix on the simple-root basis. Verifies it
  /// by length reduction; throws CorruptedElement otherwise.
  WeylElement from_matrix(std::vector<std::int64_t> matrix) const;

  bool same_as(const WeylGroup& other) const { return this == &other || cartan_ == other.cartan_; }

 private:
  WeylGroup(CartanMatrix cartan, EnumerationBudget budget)
      : cartan_(std::move(cartan)), budget_(budget) {}

  CartanMatrix cartan_;
  EnumerationBudget budget_;
};

using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

class WeylElement {
 public:
  const WeylGroupPtr& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return n_; }

  /// Coefficient of alpha_i in w(alpha_j).
  std::int64_t entry(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
  std::span<const std::int64_t> matrix() const noexcept { return m_; }
  std::span<const std::int64_t> inverse_matrix() const noexcept { return inv_; }
  RootVector apply(const RootVector& root) const;
  RootVector image_of_simple(std::size_t j) const;

  std::size_t length() const noexcept { return length_; }
  bool is_identity() const noexcept { return length_ == 0; }

  bool has_right_descent(std::size_t i) const;
  bool has_left_descent(std::size_t i) const;

  WeylElement inverse() const;
  /// w·s_i and s_i·w, with the length updated in O(rank).
  WeylElement times_simple(std::size_t i) const;
  WeylElement simple_times(std::size_t i) const;

  std::size_t hash() const noexcept;
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m_ == b.m_; }

 private:
  friend class WeylGroup;
  WeylElement(WeylGroupPtr g, std::vector<std::int64_t> m, std::vector<std::int64_t> inv, std::size_t len)
      : group_(std::move(g)), n_(group_->rank()), m_(std::move(m)), inv_(std::move(inv)), length_(len) {}

  WeylGroupPtr group_;
  std::size_t n_ = 0;
  std::vector<std::int64_t> m_;
  std::vector<std::int64_t> inv_;
  std::size_t length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return w.hash(); }
};

enum class Side { Left, Right };

WeylElement simple_reflection(const WeylGroupPtr& group, std::size_t i);
WeylElement multiply(const WeylElement& x, const WeylElement& y);
WeylElement evaluate(const WeylGroupPtr& group, const Word& word);
inline std::size_t length(const WeylElement& w) { return w.length(); }
NodeSet descents(const WeylElement& w, Side side);

/// Lexicographically smallest reduced word.
Word canonical_reduced_word(const WeylElement& w);
bool is_reduced(const WeylGroupPtr& group, const Word& word);

bool bruhat_leq(const WeylElement& v, const WeylElement& w);

struct ParabolicParts {
  WeylElement rep;   // w^J, minimal in w W_J
  WeylElement part;  // w_J in W_J
};
ParabolicParts parabolic_decompose(const WeylElement& w, NodeSet J);

/// All elements of length <= max_length (of W_J when `restrict_to` is set),
/// ordered by length then canonical word. Throws BudgetExceeded past the
/// group's element budget.
std::vector<WeylElement> enumerate_ball(const WeylGroupPtr& group, std::size_t max_length,
                                        std::optional<NodeSet> restrict_to = std::nullopt);
/// Whole group (of W_J when restricted); throws BudgetExceeded if infinite.
std::vector<WeylElement> enumerate_group(const WeylGroupPtr& group,
                                         std::optional<NodeSet> restrict_to = std::nullopt);

/// Roots beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) along the canonical word.
std::vector<RootVector> inversion_set(const WeylElement& w);

/// Longest element of a finite W_J; throws BudgetExceeded if W_J is infinite.
WeylElement longest_element(const WeylGroupPtr& group, NodeSet J);

/// Ordering by (length, canonical word); a deterministic total order.
bool shortlex_less(const WeylElement& a, const WeylElement& b);

std::string word_to_string(const Word& word);

}  // namespace twistpos

template <>
struct std::hash<twistpos::WeylElement> {
  std::size_t operator()(const twistpos::WeylElement& w) const noexcept { return w.hash(); }
};
