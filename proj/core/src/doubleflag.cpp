#include "twistpos/doubleflag.hpp"

#include <algorithm>
#include <map>

#include "twistpos/error.hpp"

namespace twistpos {

ThickenedCartan extend_cartan(const CartanMatrix& base) {
  const auto n = base.size();
  std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, -2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = base(i, j);
  m[n][n] = 2;
  return ThickenedCartan{base, CartanMatrix(m)};
}

namespace {

ReflectionOrder base_first_order(const WeylGroupPtr& thick) {
  RootVector f(thick->rank(), 0);
  f.back() = 1;
  return ReflectionOrder::ratio(thick, {f});
}

}  // namespace

Thickening::Thickening(WeylGroupPtr base)
    : base_(std::move(base)),
      cartan_(extend_cartan(base_->cartan())),
      thick_(WeylGroup::create(cartan_.extended, base_->budget())),
      ctx_(thick_, NodeSet::all(base_->rank())),
      order_(base_first_order(thick_)) {}

WeylElement Thickening::iota(const WeylElement& w) const {
  require(w.group()->same_as(*base_), ErrorKind::MismatchedGroup, "element of another group");
  return evaluate(thick_, canonical_reduced_word(w));
}

WeylElement Thickening::th(const WeylElement& w, const WeylElement& v) const {
  auto out = multiply(iota(w).times_simple(cartan_.infinity()), iota(v));
  require(out.length() == w.length() + v.length() + 1, ErrorKind::PostconditionFailed,
          "th(w, v) is not length-additive");
  return out;
}

std::string to_string(const TripleIndex& t) {
  return "(" + element_key(t.w) + ";" + element_key(t.v) + ";" + element_key(t.u) + ")";
}

bool q_member(const WeylElement& w, const WeylElement& v, const WeylElement& u) {
  return bruhat_leq(demazure_min(w, v), u);
}

bool q_leq(const TripleIndex& a, const TripleIndex& b) {
  return bruhat_leq(a.w, b.w) && bruhat_leq(b.v, a.v) && bruhat_leq(a.u, b.u);
}

long q_rank(const TripleIndex& t) {
  return static_cast<long>(t.w.length() + t.u.length()) - static_cast<long>(t.v.length()) + 1;
}

namespace {

std::vector<WeylElement> lower_ideal(const WeylElement& w) {
  std::vector<WeylElement> out;
  for (auto& x : enumerate_ball(w.group(), w.length()))
    if (bruhat_leq(x, w)) out.push_back(std::move(x));
  return out;
}

}  // namespace

QHatInterval q_interval_hat(const TripleIndex& top) {
  require(q_member(top), ErrorKind::NotMember, "triple " + to_string(top) + " is not in Q");
  const auto ws = lower_ideal(top.w);
  const auto us = lower_ideal(top.u);
  std::vector<WeylElement> vs;
  for (auto& x : enumerate_ball(top.v.group(), top.w.length() + top.u.length()))
    if (bruhat_leq(top.v, x)) vs.push_back(std::move(x));

  std::vector<TripleIndex> items;
  for (const auto& w : ws)
    for (const auto& u : us)
      for (const auto& v : vs)
        if (v.length() <= w.length() + u.length() && q_member(w, v, u)) items.push_back({w, v, u});
  std::stable_sort(items.begin(), items.end(), [](const TripleIndex& a, const TripleIndex& b) {
    return q_rank(a) < q_rank(b);
  });

  QHatInterval out;
  out.elements.push_back(std::nullopt);
  std::vector<std::string> keys{"0"};
  std::vector<long> ranks{0};
  std::vector<Edge> covers;
  for (const auto& t : items) {
    out.elements.push_back(t);
    keys.push_back(to_string(t));
    ranks.push_back(q_rank(t));
  }
  for (std::size_t b = 1; b < out.elements.size(); ++b) {
    if (ranks[b] == 1) covers.emplace_back(0, b);
    for (std::size_t a = 1; a < out.elements.size(); ++a)
      if (ranks[a] + 1 == ranks[b] && q_leq(*out.elements[a], *out.elements[b])) covers.emplace_back(a, b);
  }
  std::sort(covers.begin(), covers.end());
  out.poset = FinitePoset(std::move(keys), std::move(covers), std::move(ranks));
  return out;
}

TwistedIntervalPoset q_embedded_interval(const TripleIndex& t, const Thickening& th) {
  return j_interval(th.iota(t.u), th.th(t.w, t.v), th.order_context());
}

namespace {

// First label of the unique increasing chain of [iota(u), th(w, v)], read from the top.
WeylElement bottom_cover_label(const TripleIndex& t, const Thickening& th) {
  const auto iv = q_embedded_interval(t, th);
  const auto lp = el_label_twisted_interval(iv, th.reflection_order());
  std::size_t bottom = 0, top = 0;
  for (std::size_t k = 0; k < iv.elements.size(); ++k) {
    if (iv.elements[k] == iv.bottom) bottom = k;
    if (iv.elements[k] == iv.top) top = k;
  }
  std::map<Edge, std::size_t> edge_index;
  for (std::size_t k = 0; k < lp.poset.covers().size(); ++k) edge_index.emplace(lp.poset.covers()[k], k);

  std::optional<std::size_t> first;
  std::size_t increasing = 0;
  for (const auto& chain : lp.poset.chains(bottom, top)) {
    // chain runs bottom to top; read it from the top
    bool inc = true;
    for (std::size_t k = chain.size() - 1; k >= 2 && inc; --k) {
      const auto upper = lp.keys[edge_index.at({chain[k - 1], chain[k]})];
      const auto lower = lp.keys[edge_index.at({chain[k - 2], chain[k - 1]})];
      inc = upper < lower;
    }
    if (!inc) continue;
    ++increasing;
    first = edge_index.at({chain[chain.size() - 2], chain.back()});
  }
  require(increasing == 1 && first.has_value(), ErrorKind::PostconditionFailed,
          "embedded interval of " + to_string(t) + " has " + std::to_string(increasing) + " increasing chains");
  return *lp.labels[*first].reflection;
}

}  // namespace

LabeledPoset q_el_label(const QHatInterval& q, const Thickening& th) {
  LabeledPoset lp{q.poset, {}, {}};
  for (const auto& [a, b] : q.poset.covers()) {
    const auto& upper = *q.elements[b];
    if (!q.elements[a]) {
      lp.labels.push_back({LabelTag::Right, bottom_cover_label(upper, th)});
      continue;
    }
    const auto& lower = *q.elements[a];
    const auto top_hi = th.th(upper.w, upper.v);
    const auto top_lo = th.th(lower.w, lower.v);
    if (lower.u == upper.u) {
      lp.labels.push_back({LabelTag::Right, multiply(top_hi, top_lo.inverse())});
    } else {
      require(top_hi == top_lo, ErrorKind::PostconditionFailed, "cover moves both endpoints");
      lp.labels.push_back({LabelTag::Left, multiply(th.iota(lower.u), th.iota(upper.u).inverse())});
    }
    require(is_reflection(*lp.labels.back().reflection), ErrorKind::PostconditionFailed,
            "cover label is not a reflection");
  }
  lp.keys = label_keys(lp.labels, th.reflection_order());
  return lp;
}

WeylElement z_minimal_c(const WeylElement& w, const WeylElement& v, const WeylElement& u) {
  std::vector<WeylElement> cands;
  for (auto& c : lower_ideal(w))
    if (bruhat_leq(v, multiply(c.inverse(), u))) cands.push_back(std::move(c));
  require(!cands.empty(), ErrorKind::NotMember, "no c <= w with v <= c^{-1} u");
  std::vector<WeylElement> minimal;
  for (const auto& c : cands) {
    bool is_min = true;
    for (const auto& d : cands)
      if (!(d == c) && bruhat_leq(d, c)) is_min = false;
    if (is_min) minimal.push_back(c);
  }
  require(minimal.size() == 1, ErrorKind::AmbiguousMinimum, "several minimal c");
  return minimal.front();
}

ZSample z_sample(const PinnedGroup& G, const TripleIndex& t, const std::vector<Rational>& params) {
  require(q_member(t), ErrorKind::NotMember, "triple " + to_string(t) + " is not in Q");
  const auto c = z_minimal_c(t.w, t.v, t.u);
  const auto cu = multiply(c.inverse(), t.u);
  require(cu.length() == c.length() + t.u.length(), ErrorKind::PostconditionFailed,
          "c^{-1} u is not length-additive");
  const auto k1 = t.w.length() - c.length();
  const auto k2 = cu.length() - t.v.length();
  require(params.size() == k1 + k2, ErrorKind::ParameterMismatch,
          "expected " + std::to_string(k1 + k2) + " parameters, got " + std::to_string(params.size()));
  const std::vector<Rational> p1(params.begin(), params.begin() + static_cast<long>(k1));
  const std::vector<Rational> p2(params.begin() + static_cast<long>(k1), params.end());
  auto g1 = sample_mr(G, MrKind::Negative, c, canonical_reduced_word(t.w), p1).matrix;
  auto g2 = sample_mr(G, MrKind::Positive, t.v, canonical_reduced_word(cu), p2).matrix;
  require(bruhat_stratum(G, g1) == t.w, ErrorKind::PostconditionFailed, "g1 left B^+ w B^+");
  require(mixed_stratum(G, g2) == t.v, ErrorKind::PostconditionFailed, "g2 left B^+ v B^-");
  require(opposite_bruhat_stratum(G, g1 * g2) == t.u, ErrorKind::PostconditionFailed, "g1 g2 left B^- u B^-");
  return ZSample{std::move(g1), std::move(g2), c, params};
}

RatMatrix canonical_opposite_flag(const RatMatrix& g) {
  const auto n = g.size();
  auto reverse_cols = [n](const RatMatrix& m) {
    RatMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, n - 1 - j) = m(i, j);
    return out;
  };
  return reverse_cols(canonical_flag(reverse_cols(g)));
}

LinkFacePoset link_face_poset(const WeylElement& w, const WeylElement& u) {
  require(!(w.is_identity() && u.is_identity()), ErrorKind::InvalidInput, "link of (e, e) is empty");
  LinkFacePoset out;
  std::vector<long> ranks;
  for (const auto& a : lower_ideal(w))
    for (const auto& b : lower_ideal(u))
      if (!(a.is_identity() && b.is_identity())) out.elements.emplace_back(a, b);
  std::stable_sort(out.elements.begin(), out.elements.end(), [](const auto& x, const auto& y) {
    return x.first.length() + x.second.length() < y.first.length() + y.second.length();
  });
  std::vector<std::string> keys;
  for (const auto& [a, b] : out.elements) {
    keys.push_back("(" + element_key(a) + ";" + element_key(b) + ")");
    ranks.push_back(static_cast<long>(a.length() + b.length()) - 1);
  }
  std::vector<Edge> covers;
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    for (std::size_t j = 0; j < out.elements.size(); ++j)
      if (ranks[i] + 1 == ranks[j] && bruhat_leq(out.elements[i].first, out.elements[j].first) &&
          bruhat_leq(out.elements[i].second, out.elements[j].second))
        covers.emplace_back(i, j);
  out.poset = FinitePoset(std::move(keys), std::move(covers), std::move(ranks));
  return out;
}

SimplicialComplex link_boundary_complex(const LinkFacePoset& p) {
  const auto tops = p.poset.maximal_elements();
  require(tops.size() == 1, ErrorKind::PostconditionFailed, "link face poset has no unique top");
  std::vector<std::size_t> proper;
  for (std::size_t k = 0; k < p.poset.size(); ++k)
    if (k != tops.front()) proper.push_back(k);
  if (proper.empty()) return SimplicialComplex{0, {}};
  return order_complex(p.poset.induced(proper), ComplexMode::Full).complex;
}

}  // namespace twistpos
