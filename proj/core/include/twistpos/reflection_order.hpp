#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "twistpos/weyl.hpp"

namespace twistpos {

bool is_reflection(const WeylElement& t);
/// Positive root of a reflection: the primitive positive generator of the image of t - 1.
RootVector reflection_root(const WeylElement& t);
/// The reflection w s_i w^{-1} sending the given real root to its negative.
WeylElement reflection_of_root(const WeylGroupPtr& group, const RootVector& root);

/// A total order on (a subset of) the reflections of W.
///
/// Two flavors: an explicit list, built from the inversion sequence of a
/// reduced word, and a ratio order that compares positive roots by the
/// lexicographic vector (f_1(b)/ht(b), ..., f_k(b)/ht(b), b_0/ht(b), ...).
/// The trailing coordinate functionals make the ratio order total on all of T.
class ReflectionOrder {
 public:
  static ReflectionOrder from_word(const WeylGroupPtr& group, const Word& word);
  static ReflectionOrder ratio(const WeylGroupPtr& group, std::vector<RootVector> functionals = {});

  const WeylGroupPtr& group() const noexcept { return group_; }
  bool is_explicit() const noexcept { return explicit_; }
  const std::vector<WeylElement>& listed() const noexcept { return listed_; }

  bool covers(const WeylElement& t) const;
  /// Negative, zero or positive. Throws MissingReflection for unlisted input.
  int compare(const WeylElement& a, const WeylElement& b) const;
  /// Sorts distinct reflections by the order.
  std::vector<WeylElement> sorted(std::vector<WeylElement> ts) const;

 private:
  int compare_roots(const RootVector& a, const RootVector& b) const;

  WeylGroupPtr group_;
  bool explicit_ = true;
  std::vector<WeylElement> listed_;
  std::unordered_map<WeylElement, std::size_t> position_;
  std::vector<RootVector> functionals_;
};

/// Dihedral condition on a finite list: for every pair s, t of entries, the
/// entries whose roots lie in span(b_s, b_t) appear in monotone angular order.
bool satisfies_dihedral_condition(const std::vector<WeylElement>& ordered);

/// Inversion sequence t_k = s_{i_1}...s_{i_k}...s_{i_1}; throws NonReducedWord.
std::vector<WeylElement> inversion_sequence(const WeylGroupPtr& group, const Word& word);

}  // namespace twistpos
