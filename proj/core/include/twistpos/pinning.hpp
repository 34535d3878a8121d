#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twistpos/rational.hpp"
#include "twistpos/twisted.hpp"

namespace twistpos {

enum class GeneratorKind { X, Y, Cochar };

/// SL_n with its standard pinning. Node i acts on coordinates i and i + 1.
class PinnedGroup {
 public:
  /// 2 <= n <= 6.
  explicit PinnedGroup(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const WeylGroupPtr& weyl() const noexcept { return weyl_; }

  RatMatrix generator(GeneratorKind kind, std::size_t i, const Rational& value) const;
  RatMatrix x(std::size_t i, const Rational& a) const { return generator(GeneratorKind::X, i, a); }
  RatMatrix y(std::size_t i, const Rational& a) const { return generator(GeneratorKind::Y, i, a); }
  RatMatrix cochar(std::size_t i, const Rational& c) const { return generator(GeneratorKind::Cochar, i, c); }
  /// x_i(1) y_i(-1) x_i(1).
  RatMatrix sdot(std::size_t i) const;

  /// Product of sdot along a reduced word. Throws NonReducedWord.
  RatMatrix lift(const Word& word) const;
  const RatMatrix& lift(const WeylElement& w) const;

  /// pattern[j] is the row of the nonzero entry of lift(w) in column j.
  const std::vector<std::size_t>& pattern(const WeylElement& w) const;
  const WeylElement& element_of_pattern(const std::vector<std::size_t>& pattern) const;

 private:
  std::size_t n_;
  WeylGroupPtr weyl_;
  std::unordered_map<WeylElement, std::pair<RatMatrix, std::vector<std::size_t>>> lifts_;
  std::map<std::vector<std::size_t>, WeylElement> by_pattern_;
};

enum class Borel { Upper, Lower };

/// The permutation pattern p with g in B_left . p . B_right, by Gaussian elimination.
std::vector<std::size_t> double_coset_pattern(const RatMatrix& g, Borel left, Borel right);

/// g in B^+ w B^+.
WeylElement bruhat_stratum(const PinnedGroup& G, const RatMatrix& g);
/// g in B^- v B^+.
WeylElement birkhoff_stratum(const PinnedGroup& G, const RatMatrix& g);
/// g in B^+ v B^-.
WeylElement mixed_stratum(const PinnedGroup& G, const RatMatrix& g);
/// g in B^- u B^-.
WeylElement opposite_bruhat_stratum(const PinnedGroup& G, const RatMatrix& g);

/// (birkhoff, bruhat); asserts v <= w.
std::pair<WeylElement, WeylElement> richardson_stratum(const PinnedGroup& G, const RatMatrix& g);
/// (bruhat, opposite bruhat).
std::pair<WeylElement, WeylElement> double_bruhat_stratum(const PinnedGroup& G, const RatMatrix& g);

/// The twisted Richardson stratum of the flag g . ^JB^+; asserts v <=^J w.
std::pair<WeylElement, WeylElement> twisted_stratum(const PinnedGroup& G, const RatMatrix& g,
                                                    const ParabolicContext& J);

/// Canonical representative of g . ^JB^+, namely canonical_flag(g w_{J,0}).
RatMatrix canonical_twisted_flag(const PinnedGroup& G, const RatMatrix& g, const ParabolicContext& J);

/// Whether the flag of g lies in r . ^JU^- . ^JB^+ / ^JB^+.
bool big_cell_test(const PinnedGroup& G, const RatMatrix& g, const WeylElement& r, const ParabolicContext& J);

/// The k in r ^JU^- r^{-1} with k r ^JB^+ = g ^JB^+. Throws DecompositionFails off the big cell.
RatMatrix big_cell_coordinate(const PinnedGroup& G, const RatMatrix& g, const WeylElement& r,
                              const ParabolicContext& J);

/// Unit diagonal with support on J-internal entries above the diagonal and
/// J-external entries below it.
bool in_twisted_unipotent(const RatMatrix& m, const ParabolicContext& J);

struct SigmaFactors {
  RatMatrix plus;   // g_2, upper unitriangular
  RatMatrix minus;  // h_2, lower unitriangular
};

SigmaFactors sigma_factorize(const PinnedGroup& G, const RatMatrix& g, const WeylElement& r,
                             const ParabolicContext& J);
/// Inverse of sigma_factorize: the k with sigma_factorize(k) = (plus, minus).
RatMatrix sigma_recompose(const RatMatrix& plus, const RatMatrix& minus);

struct CellSample {
  RatMatrix matrix;
  std::vector<WeylElement> index;  // (v, w), (v, w, c) or (w, v, u)
  std::optional<NodeSet> J;
  std::vector<Rational> parameters;
};

enum class MrKind { Negative, Positive };

/// Products over a positive subexpression: y (Negative) or x (Positive) at
/// skips. Used letters get sdot(i) in a Positive sample and sdot(i)^{-1} in a
/// Negative one; with sdot = x(1)y(-1)x(1) this is the sign for which the
/// samples are totally nonnegative.
/// A Negative sample lies in B^- v B^+ and B^+ w B^+, a Positive one in
/// B^+ v B^- and B^- w B^-; both are asserted. allow_nonzero admits negative parameters.
CellSample sample_mr(const PinnedGroup& G, MrKind kind, const WeylElement& v, const Word& word_w,
                     const std::vector<Rational>& params, bool allow_nonzero = false);

struct TwistedWords {
  std::optional<Word> w_upper;  // reduced word for w^J
  std::optional<Word> v_lower;  // reduced word for v_J
};

CellSample sample_twisted_cell(const PinnedGroup& G, const WeylElement& v, const WeylElement& w,
                               const ParabolicContext& J, const std::vector<Rational>& params,
                               const TwistedWords& words = {}, bool allow_nonzero = false);

/// Every minor is nonnegative. n <= 5.
bool tnn_test(const RatMatrix& g);

}  // namespace twistpos
