#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistpos/el_labeling.hpp"
#include "twistpos/pinning.hpp"

namespace twistpos {

/// The base matrix extended by a node joined to every other node by -2.
/// The new node is the last index.
struct ThickenedCartan {
  CartanMatrix base;
  CartanMatrix extended;

  std::size_t infinity() const noexcept { return base.size(); }
};

ThickenedCartan extend_cartan(const CartanMatrix& base);

/// The base group W, the thickened group, and the twisted order on the
/// thickened group relative to the base nodes.
class Thickening {
 public:
  explicit Thickening(WeylGroupPtr base);

  const WeylGroupPtr& base() const noexcept { return base_; }
  const WeylGroupPtr& thick() const noexcept { return thick_; }
  const ThickenedCartan& cartan() const noexcept { return cartan_; }
  /// <=^I on the thickened group.
  const ParabolicContext& order_context() const noexcept { return ctx_; }
  /// Reflections of the base subgroup first.
  const ReflectionOrder& reflection_order() const noexcept { return order_; }

  WeylElement iota(const WeylElement& w) const;
  /// iota(w) s_inf iota(v); the length is checked to be l(w) + l(v) + 1.
  WeylElement th(const WeylElement& w, const WeylElement& v) const;

 private:
  WeylGroupPtr base_;
  ThickenedCartan cartan_;
  WeylGroupPtr thick_;
  ParabolicContext ctx_;
  ReflectionOrder order_;
};

struct TripleIndex {
  WeylElement w;
  WeylElement v;
  WeylElement u;

  bool operator==(const TripleIndex& o) const { return w == o.w && v == o.v && u == o.u; }
};

std::string to_string(const TripleIndex& t);

/// w o_l v <= u.
bool q_member(const WeylElement& w, const WeylElement& v, const WeylElement& u);
inline bool q_member(const TripleIndex& t) { return q_member(t.w, t.v, t.u); }

/// w' <= w, v' >= v, u' <= u.
bool q_leq(const TripleIndex& a, const TripleIndex& b);

/// l(w) + l(u) - l(v) + 1; the adjoined minimum has rank 0.
long q_rank(const TripleIndex& t);

struct QHatInterval {
  FinitePoset poset;
  std::vector<std::optional<TripleIndex>> elements;  // nullopt is the adjoined minimum
};

/// [0, top] in Q with a minimum adjoined. Throws NotMember.
QHatInterval q_interval_hat(const TripleIndex& top);

/// The interval [iota(u), th(w, v)] of the thickened group under <=^I.
TwistedIntervalPoset q_embedded_interval(const TripleIndex& t, const Thickening& th);

/// Labels covers through the embedding into intervals of the thickened group.
/// Covers of the minimum get the first label of the increasing chain of
/// [iota(u), th(w, v)] read from the top.
LabeledPoset q_el_label(const QHatInterval& q, const Thickening& th);

struct ZSample {
  RatMatrix g1;
  RatMatrix g2;
  WeylElement c;
  std::vector<Rational> parameters;
};

/// The Bruhat-minimal c <= w with v <= c^{-1} u, found by enumeration.
WeylElement z_minimal_c(const WeylElement& w, const WeylElement& v, const WeylElement& u);

/// A point of the positive part of the double flag stratum (w, v, u). Asserts
/// g1 in B^+ w B^+, g2 in B^+ v B^- and g1 g2 in B^- u B^-.
ZSample z_sample(const PinnedGroup& G, const TripleIndex& t, const std::vector<Rational>& params);

/// Representative of g B^- in reduced form, for comparing cosets exactly.
RatMatrix canonical_opposite_flag(const RatMatrix& g);

struct LinkFacePoset {
  FinitePoset poset;
  std::vector<std::pair<WeylElement, WeylElement>> elements;
};

/// {(w', u') : w' <= w, u' <= u} without (e, e), ordered componentwise.
LinkFacePoset link_face_poset(const WeylElement& w, const WeylElement& u);

/// Order complex of the proper faces {(w', u') < (w, u)}.
SimplicialComplex link_boundary_complex(const LinkFacePoset& p);

}  // namespace twistpos
