#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistpos/poset.hpp"
#include "twistpos/reflection_order.hpp"
#include "twistpos/twisted.hpp"

namespace twistpos {

enum class LabelTag { Right, Bottom, Left };

/// An element of the label set: (t, r), the bottom label, or (t, l).
struct EdgeLabel {
  LabelTag tag = LabelTag::Bottom;
  std::optional<WeylElement> reflection;
};

/// Edge labels with their ranks in the label order (smaller key = earlier).
struct LabeledPoset {
  FinitePoset poset;
  std::vector<EdgeLabel> labels;  // parallel to poset.covers()
  std::vector<long> keys;         // parallel to poset.covers()
};

/// Rank keys for labels: (t1, r) < bottom < (t2, l), each side ordered by `order`.
std::vector<long> label_keys(const std::vector<EdgeLabel>& labels, const ReflectionOrder& order);

FinitePoset to_finite_poset(const TwistedIntervalPoset& interval);

/// Labels each cover w1 < w2 by the reflection w2 w1^{-1}.
LabeledPoset el_label_twisted_interval(const TwistedIntervalPoset& interval, const ReflectionOrder& order);

/// Direction in which maximal chains are read into label sequences.
enum class ChainReading { BottomUp, TopDown };

struct ElReport {
  bool ok = true;
  std::optional<Edge> offending;
  std::string reason;
  std::size_t intervals_checked = 0;
};

/// For every interval [x, y] with x < y: exactly one maximal chain has a
/// strictly increasing label sequence, it is strictly lexicographically
/// smallest, and its first label is smaller than every other first label.
ElReport verify_el(const LabeledPoset& lp, ChainReading reading = ChainReading::BottomUp);

/// An element of the interval poset Q^J: the interval [a, b] of (W, <=^J).
struct QInterval {
  WeylElement a;
  WeylElement b;
};

struct QJIntervalPoset {
  FinitePoset poset;
  std::vector<std::optional<QInterval>> elements;  // nullopt is the adjoined minimum
};

/// Interval of Q^J between [x, y] and [x', y'] (containment order). With no
/// bottom given, the interval [0, top] of the augmented poset.
QJIntervalPoset assemble_QJ_interval(const std::optional<QInterval>& bottom, const QInterval& top,
                                     const ParabolicContext& J);

/// Two-sided labels: right endpoint moves give (t, r), left endpoint moves
/// (t, l), and covers of the adjoined minimum the bottom label.
LabeledPoset el_label_QJ(const QJIntervalPoset& q, const ReflectionOrder& order);

std::string element_key(const WeylElement& w);

}  // namespace twistpos
