#include "twistpos/reflection_order.hpp"

#include <algorithm>
#include <numeric>

#include "twistpos/error.hpp"

namespace twistpos {

namespace {

using i128 = __int128;

std::int64_t height(const RootVector& r) { return std::accumulate(r.begin(), r.end(), std::int64_t{0}); }

bool is_positive_root_vector(const RootVector& r) {
  bool nonzero = false;
  for (auto c : r) {
    if (c < 0) return false;
    nonzero = nonzero || c > 0;
  }
  return nonzero;
}

}  // namespace

RootVector reflection_root(const WeylElement& t) {
  const auto n = t.rank();
  for (std::size_t j = 0; j < n; ++j) {
    RootVector col(n);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = t.entry(i, j) - (i == j ? 1 : 0);
      g = std::gcd(g, col[i]);
    }
    if (g == 0) continue;
    std::int64_t sign = 0;
    for (auto c : col) {
      if (c != 0) {
        sign = c > 0 ? 1 : -1;
        break;
      }
    }
    for (auto& c : col) c = c / g * sign;
    return col;
  }
  fail(ErrorKind::InvalidInput, "identity is not a reflection");
}

WeylElement reflection_of_root(const WeylGroupPtr& group, const RootVector& root) {
  const auto& a = group->cartan();
  const auto n = group->rank();
  require(root.size() == n && is_positive_root_vector(root), ErrorKind::InvalidInput,
          "expected a positive root vector");
  RootVector beta = root;
  Word path;
  while (true) {
    if (height(beta) == 1) {
      std::size_t i = 0;
      while (beta[i] == 0) ++i;
      Word word = path;
      word.push_back(i);
      word.insert(word.end(), path.rbegin(), path.rend());
      return group->from_word(word);
    }
    bool moved = false;
    for (std::size_t j = 0; j < n && !moved; ++j) {
      std::int64_t pairing = 0;
      for (std::size_t k = 0; k < n; ++k) pairing += beta[k] * a(k, j);
      if (pairing > 0) {
        beta[j] -= pairing;
        path.push_back(j);
        moved = true;
      }
    }
    require(moved && is_positive_root_vector(beta), ErrorKind::InvalidInput, "vector is not a real root");
    require(path.size() <= group->budget().max_length * 4, ErrorKind::BudgetExceeded, "root reduction too long");
  }
}

bool is_reflection(const WeylElement& t) {
  if (t.is_identity() || t.length() % 2 == 0) return false;
  try {
    return reflection_of_root(t.group(), reflection_root(t)) == t;
  } catch (const Error&) {
    return false;
  }
}

std::vector<WeylElement> inversion_sequence(const WeylGroupPtr& group, const Word& word) {
  require(is_reduced(group, word), ErrorKind::NonReducedWord, "word " + word_to_string(word) + " is not reduced");
  std::vector<WeylElement> out;
  auto prefix = group->identity();
  for (auto i : word) {
    out.push_back(multiply(prefix.times_simple(i), prefix.inverse()));
    prefix = prefix.times_simple(i);
  }
  return out;
}

ReflectionOrder ReflectionOrder::from_word(const WeylGroupPtr& group, const Word& word) {
  ReflectionOrder o;
  o.group_ = group;
  o.explicit_ = true;
  o.listed_ = inversion_sequence(group, word);
  for (std::size_t k = 0; k < o.listed_.size(); ++k) o.position_.emplace(o.listed_[k], k);
  require(o.position_.size() == o.listed_.size() && satisfies_dihedral_condition(o.listed_),
          ErrorKind::NonReducedWord, "inversion sequence violates the dihedral condition");
  return o;
}

ReflectionOrder ReflectionOrder::ratio(const WeylGroupPtr& group, std::vector<RootVector> functionals) {
  for (const auto& f : functionals)
    require(f.size() == group->rank(), ErrorKind::InvalidInput, "functional has wrong size");
  ReflectionOrder o;
  o.group_ = group;
  o.explicit_ = false;
  o.functionals_ = std::move(functionals);
  for (std::size_t i = 0; i < group->rank(); ++i) {
    RootVector e(group->rank(), 0);
    e[i] = 1;
    o.functionals_.push_back(std::move(e));
  }
  return o;
}

bool ReflectionOrder::covers(const WeylElement& t) const {
  if (explicit_) return position_.count(t) > 0;
  return is_reflection(t);
}

int ReflectionOrder::compare_roots(const RootVector& a, const RootVector& b) const {
  const i128 ha = height(a);
  const i128 hb = height(b);
  for (const auto& f : functionals_) {
    i128 fa = 0, fb = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      fa += static_cast<i128>(f[i]) * a[i];
      fb += static_cast<i128>(f[i]) * b[i];
    }
    const i128 lhs = fa * hb;
    const i128 rhs = fb * ha;
    if (lhs != rhs) return lhs < rhs ? -1 : 1;
  }
  return 0;
}

int ReflectionOrder::compare(const WeylElement& a, const WeylElement& b) const {
  if (explicit_) {
    auto ia = position_.find(a);
    auto ib = position_.find(b);
    if (ia == position_.end() || ib == position_.end())
      fail(ErrorKind::MissingReflection, "reflection not covered by the order");
    return ia->second < ib->second ? -1 : (ia->second > ib->second ? 1 : 0);
  }
  return compare_roots(reflection_root(a), reflection_root(b));
}

std::vector<WeylElement> ReflectionOrder::sorted(std::vector<WeylElement> ts) const {
  if (explicit_) {
    for (const auto& t : ts)
      if (!position_.count(t)) fail(ErrorKind::MissingReflection, "reflection not covered by the order");
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) { return position_.at(a) < position_.at(b); });
    return ts;
  }
  std::vector<std::pair<RootVector, std::size_t>> roots;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    require(is_reflection(ts[k]), ErrorKind::MissingReflection, "label is not a reflection");
    roots.emplace_back(reflection_root(ts[k]), k);
  }
  std::sort(roots.begin(), roots.end(),
            [&](const auto& a, const auto& b) { return compare_roots(a.first, b.first) < 0; });
  std::vector<WeylElement> out;
  for (const auto& r : roots) out.push_back(ts[r.second]);
  return out;
}

bool satisfies_dihedral_condition(const std::vector<WeylElement>& ordered) {
  std::vector<RootVector> roots;
  for (const auto& t : ordered) roots.push_back(reflection_root(t));
  const auto m = roots.size();
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = p + 1; q < m; ++q) {
      const auto& u = roots[p];
      const auto& v = roots[q];
      // Pick a pair of coordinates on which u, v are independent.
      std::size_t ci = 0, cj = 0;
      i128 d = 0;
      for (std::size_t i = 0; i < u.size() && d == 0; ++i)
        for (std::size_t j = i + 1; j < u.size() && d == 0; ++j) {
          d = static_cast<i128>(u[i]) * v[j] - static_cast<i128>(u[j]) * v[i];
          ci = i;
          cj = j;
        }
      if (d == 0) return false;  // proportional roots of distinct reflections
      std::vector<std::pair<i128, i128>> plane;
      for (std::size_t k = 0; k < m; ++k) {
        const auto& g = roots[k];
        const i128 A = static_cast<i128>(g[ci]) * v[cj] - static_cast<i128>(g[cj]) * v[ci];
        const i128 B = static_cast<i128>(u[ci]) * g[cj] - static_cast<i128>(u[cj]) * g[ci];
        bool in_span = true;
        for (std::size_t c = 0; c < g.size() && in_span; ++c)
          in_span = d * g[c] == A * u[c] + B * v[c];
        if (in_span) plane.emplace_back(A, B);
      }
      int sign = 0;
      for (std::size_t k = 0; k + 1 < plane.size(); ++k) {
        const i128 cross = plane[k].first * plane[k + 1].second - plane[k + 1].first * plane[k].second;
        const int s = cross > 0 ? 1 : (cross < 0 ? -1 : 0);
        if (s == 0 || (sign != 0 && s != sign)) return false;
        sign = s;
      }
    }
  }
  return true;
}

}  // namespace twistpos
