#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twistpos/weyl.hpp"

namespace twistpos {

/// A subset J of the nodes together with cached data about W_J. Copies share
/// the cache; all access is internally synchronized.
class ParabolicContext {
 public:
  ParabolicContext(WeylGroupPtr group, NodeSet J);

  const WeylGroupPtr& group() const noexcept { return group_; }
  NodeSet J() const noexcept { return J_; }

  /// Elements of W_J of length <= max_length, ordered by length.
  std::vector<WeylElement> wj_ball(std::size_t max_length) const;
  /// w_{J,0} when W_J is finite.
  std::optional<WeylElement> longest() const;

  std::optional<bool> cached_leq(const WeylElement& v, const WeylElement& w) const;
  void store_leq(const WeylElement& v, const WeylElement& w, bool value) const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<WeylElement, WeylElement>& p) const noexcept {
      return p.first.hash() * 1000003u ^ p.second.hash();
    }
  };
  struct Cache {
    std::mutex mutex;
    std::vector<WeylElement> ball;
    std::size_t ball_length = 0;
    bool ball_complete = false;
    std::optional<std::optional<WeylElement>> longest;
    std::unordered_map<std::pair<WeylElement, WeylElement>, bool, PairHash> leq;
  };

  WeylGroupPtr group_;
  NodeSet J_;
  std::shared_ptr<Cache> cache_;
};

ParabolicParts parabolic_decompose(const WeylElement& w, const ParabolicContext& J);

long j_length(const WeylElement& w, const ParabolicContext& J);
bool j_leq(const WeylElement& v, const WeylElement& w, const ParabolicContext& J);

/// The unique Bruhat-minimal u in W_J with v^J u <= w^J and w_J <= u^{-1} v_J.
WeylElement minimal_c(const WeylElement& v, const WeylElement& w, const ParabolicContext& J);

/// Bruhat-minimal element of {w'v : w' <= w}.
WeylElement demazure_min(const WeylElement& w, const WeylElement& v);
/// Bruhat-maximal element of {(w')^{-1}u' : w' <= w, u' <= u}.
WeylElement demazure_max_inverse(const WeylElement& w, const WeylElement& u);

/// s_i w if s_i w <=^J w, else w.
WeylElement circ_lJ(std::size_t i, const WeylElement& w, const ParabolicContext& J);

struct TwistedIntervalPoset {
  WeylElement bottom;
  WeylElement top;
  std::vector<WeylElement> elements;  // sorted by J-length, then shortlex
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<long> jlengths;
};

TwistedIntervalPoset j_interval(const WeylElement& x, const WeylElement& y, const ParabolicContext& J);

/// A subexpression of a word: the letters that are kept.
struct Subexpression {
  Word word;
  std::vector<bool> used;

  std::size_t skips() const;
};

Subexpression mr_positive_subexpression(const WeylElement& v, const Word& word_w);
bool is_positive_subexpression(const WeylGroupPtr& group, const Subexpression& sub);

}  // namespace twistpos
