#include "twistpos/el_labeling.hpp"

#include <algorithm>
#include <map>

#include "twistpos/error.hpp"

namespace twistpos {

std::string element_key(const WeylElement& w) { return word_to_string(canonical_reduced_word(w)); }

std::vector<long> label_keys(const std::vector<EdgeLabel>& labels, const ReflectionOrder& order) {
  std::vector<WeylElement> distinct;
  for (const auto& l : labels) {
    if (l.tag == LabelTag::Bottom) continue;
    require(l.reflection.has_value(), ErrorKind::InvalidInput, "side label without a reflection");
    if (std::find(distinct.begin(), distinct.end(), *l.reflection) == distinct.end())
      distinct.push_back(*l.reflection);
  }
  const auto sorted = order.sorted(distinct);
  for (std::size_t k = 1; k < sorted.size(); ++k)
    require(order.compare(sorted[k - 1], sorted[k]) < 0, ErrorKind::InvalidInput, "reflection order has a tie");
  std::unordered_map<WeylElement, long> pos;
  for (std::size_t k = 0; k < sorted.size(); ++k) pos.emplace(sorted[k], static_cast<long>(k));
  const long n = static_cast<long>(sorted.size());

  std::vector<long> keys;
  keys.reserve(labels.size());
  for (const auto& l : labels) {
    switch (l.tag) {
      case LabelTag::Right: keys.push_back(pos.at(*l.reflection)); break;
      case LabelTag::Bottom: keys.push_back(n); break;
      case LabelTag::Left: keys.push_back(n + 1 + pos.at(*l.reflection)); break;
    }
  }
  return keys;
}

FinitePoset to_finite_poset(const TwistedIntervalPoset& interval) {
  std::vector<std::string> keys;
  for (const auto& z : interval.elements) keys.push_back(element_key(z));
  return FinitePoset(std::move(keys), interval.covers, interval.jlengths);
}

LabeledPoset el_label_twisted_interval(const TwistedIntervalPoset& interval, const ReflectionOrder& order) {
  LabeledPoset lp{to_finite_poset(interval), {}, {}};
  for (const auto& [a, b] : interval.covers) {
    auto t = multiply(interval.elements[b], interval.elements[a].inverse());
    if (!order.covers(t)) fail(ErrorKind::MissingReflection, "order does not cover label " + element_key(t));
    lp.labels.push_back({LabelTag::Right, std::move(t)});
  }
  lp.keys = label_keys(lp.labels, order);
  return lp;
}

ElReport verify_el(const LabeledPoset& lp, ChainReading reading) {
  const auto& p = lp.poset;
  std::map<Edge, long> key_of;
  for (std::size_t k = 0; k < p.covers().size(); ++k) key_of.emplace(p.covers()[k], lp.keys[k]);

  ElReport report;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      ++report.intervals_checked;
      std::vector<std::vector<long>> sequences;
      for (const auto& chain : p.chains(x, y)) {
        std::vector<long> seq;
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) seq.push_back(key_of.at({chain[k], chain[k + 1]}));
        if (reading == ChainReading::TopDown) std::reverse(seq.begin(), seq.end());
        sequences.push_back(std::move(seq));
      }
      std::size_t increasing = 0, which = 0;
      for (std::size_t c = 0; c < sequences.size(); ++c) {
        const auto& s = sequences[c];
        if (std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end()) {
          ++increasing;
          which = c;
        }
      }
      auto fail_with = [&](std::string why) {
        report.ok = false;
        report.offending = Edge{x, y};
        report.reason = std::move(why);
        return report;
      };
      if (increasing != 1)
        return fail_with(std::to_string(increasing) + " increasing maximal chains");
      for (std::size_t c = 0; c < sequences.size(); ++c)
        if (c != which && !(sequences[which] < sequences[c]))
          return fail_with("increasing chain is not strictly lexicographically first");

      // Local criterion: the first edge of the increasing chain beats every
      // other first edge out of the starting end.
      const long first = sequences[which].front();
      if (reading == ChainReading::BottomUp) {
        for (auto z : p.up(x))
          if (p.leq(z, y) && key_of.at({x, z}) != first && key_of.at({x, z}) < first)
            return fail_with("first edge is not the smallest");
      } else {
        for (auto z : p.down(y))
          if (p.leq(x, z) && key_of.at({z, y}) != first && key_of.at({z, y}) < first)
            return fail_with("first edge is not the smallest");
      }
    }
  }
  return report;
}

QJIntervalPoset assemble_QJ_interval(const std::optional<QInterval>& bottom, const QInterval& top,
                                     const ParabolicContext& J) {
  require(j_leq(top.a, top.b, J), ErrorKind::NotComparable, "top is not an interval");
  std::vector<WeylElement> lefts, rights;
  if (bottom) {
    require(j_leq(top.a, bottom->a, J) && j_leq(bottom->a, bottom->b, J) && j_leq(bottom->b, top.b, J),
            ErrorKind::NotComparable, "bottom interval is not contained in top interval");
    lefts = j_interval(top.a, bottom->a, J).elements;
    rights = j_interval(bottom->b, top.b, J).elements;
  } else {
    lefts = rights = j_interval(top.a, top.b, J).elements;
  }

  struct Item {
    long rank;
    std::string key;
    std::optional<QInterval> value;
  };
  std::vector<Item> items;
  if (!bottom) items.push_back({0, "0", std::nullopt});
  for (const auto& a : lefts) {
    for (const auto& b : rights) {
      if (!bottom && !j_leq(a, b, J)) continue;
      const long rank = j_length(b, J) - j_length(a, J) + 1;
      items.push_back({rank, "[" + element_key(a) + ";" + element_key(b) + "]", QInterval{a, b}});
    }
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& l, const Item& r) {
    if (l.rank != r.rank) return l.rank < r.rank;
    return l.key < r.key;
  });

  std::vector<Edge> covers;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (items[k].rank != items[i].rank + 1) continue;
      const auto& lo = items[i].value;
      const auto& hi = items[k].value;
      if (!lo) {
        if (hi->a == hi->b) covers.emplace_back(i, k);
        continue;
      }
      const bool right_move = lo->a == hi->a && j_leq(lo->b, hi->b, J);
      const bool left_move = lo->b == hi->b && j_leq(hi->a, lo->a, J);
      if (right_move || left_move) covers.emplace_back(i, k);
    }
  }

  QJIntervalPoset out;
  std::vector<std::string> keys;
  std::vector<long> ranks;
  for (auto& it : items) {
    keys.push_back(it.key);
    ranks.push_back(it.rank);
    out.elements.push_back(std::move(it.value));
  }
  out.poset = FinitePoset(std::move(keys), std::move(covers), std::move(ranks));
  return out;
}

LabeledPoset el_label_QJ(const QJIntervalPoset& q, const ReflectionOrder& order) {
  LabeledPoset lp{q.poset, {}, {}};
  for (const auto& [lo, hi] : q.poset.covers()) {
    const auto& l = q.elements[lo];
    const auto& h = q.elements[hi];
    if (!l) {
      lp.labels.push_back({LabelTag::Bottom, std::nullopt});
    } else if (l->a == h->a) {
      lp.labels.push_back({LabelTag::Right, multiply(h->b, l->b.inverse())});
    } else {
      lp.labels.push_back({LabelTag::Left, multiply(l->a, h->a.inverse())});
    }
    if (lp.labels.back().reflection && !order.covers(*lp.labels.back().reflection))
      fail(ErrorKind::MissingReflection, "order does not cover a Q label");
  }
  lp.keys = label_keys(lp.labels, order);
  return lp;
}

}  // namespace twistpos
