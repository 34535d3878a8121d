#include "twistpos/pinning.hpp"

#include "twistpos/error.hpp"

namespace twistpos {

PinnedGroup::PinnedGroup(std::size_t n) : n_(n) {
  require(n >= 2 && n <= 6, ErrorKind::InvalidInput, "PinnedGroup supports 2 <= n <= 6");
  weyl_ = WeylGroup::create(CartanMatrix::type_A(n - 1));
  for (const auto& w : enumerate_group(weyl_)) {
    RatMatrix m = lift(canonical_reduced_word(w));
    std::vector<std::size_t> pat(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(m(i, j)) != 0) pat[j] = i;
    require(by_pattern_.emplace(pat, w).second, ErrorKind::PostconditionFailed, "lift patterns collide");
    lifts_.emplace(w, std::make_pair(std::move(m), std::move(pat)));
  }
}

RatMatrix PinnedGroup::generator(GeneratorKind kind, std::size_t i, const Rational& value) const {
  require(i + 1 < n_, ErrorKind::IndexOutOfRange, "node index out of range");
  RatMatrix m = RatMatrix::identity(n_);
  switch (kind) {
    case GeneratorKind::X:
      m(i, i + 1) = value;
      break;
    case GeneratorKind::Y:
      m(i + 1, i) = value;
      break;
    case GeneratorKind::Cochar:
      require(sgn(value) != 0, ErrorKind::InvalidInput, "cocharacter value must be nonzero");
      m(i, i) = value;
      m(i + 1, i + 1) = 1 / value;
      break;
  }
  return m;
}

RatMatrix PinnedGroup::sdot(std::size_t i) const { return x(i, 1) * y(i, -1) * x(i, 1); }

RatMatrix PinnedGroup::lift(const Word& word) const {
  for (auto i : word) require(i + 1 < n_, ErrorKind::IndexOutOfRange, "node index out of range");
  require(is_reduced(weyl_, word), ErrorKind::NonReducedWord, "lift needs a reduced word");
  RatMatrix m = RatMatrix::identity(n_);
  for (auto i : word) m = m * sdot(i);
  return m;
}

const RatMatrix& PinnedGroup::lift(const WeylElement& w) const {
  require(w.group()->same_as(*weyl_), ErrorKind::MismatchedGroup, "element of another group");
  return lifts_.at(w).first;
}

const std::vector<std::size_t>& PinnedGroup::pattern(const WeylElement& w) const {
  require(w.group()->same_as(*weyl_), ErrorKind::MismatchedGroup, "element of another group");
  return lifts_.at(w).second;
}

const WeylElement& PinnedGroup::element_of_pattern(const std::vector<std::size_t>& pattern) const {
  auto it = by_pattern_.find(pattern);
  require(it != by_pattern_.end(), ErrorKind::InvalidInput, "not a permutation pattern");
  return it->second;
}

std::vector<std::size_t> double_coset_pattern(const RatMatrix& g, Borel left, Borel right) {
  const auto n = g.size();
  RatMatrix m = g;
  std::vector<bool> used(n, false);
  std::vector<std::size_t> out(n, n);
  for (std::size_t step = 0; step < n; ++step) {
    // Upper on the right lets columns be cleared left to right.
    const std::size_t j = right == Borel::Upper ? step : n - 1 - step;
    std::size_t p = n;
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t i = left == Borel::Upper ? n - 1 - t : t;
      if (!used[i] && sgn(m(i, j)) != 0) {
        p = i;
        break;
      }
    }
    require(p < n, ErrorKind::InvalidInput, "singular matrix");
    used[p] = true;
    out[j] = p;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i] || sgn(m(i, j)) == 0) continue;
      const Rational f = m(i, j) / m(p, j);
      for (std::size_t k = 0; k < n; ++k) m(i, k) -= f * m(p, k);
    }
  }
  return out;
}

WeylElement bruhat_stratum(const PinnedGroup& G, const RatMatrix& g) {
  return G.element_of_pattern(double_coset_pattern(g, Borel::Upper, Borel::Upper));
}

WeylElement birkhoff_stratum(const PinnedGroup& G, const RatMatrix& g) {
  return G.element_of_pattern(double_coset_pattern(g, Borel::Lower, Borel::Upper));
}

WeylElement mixed_stratum(const PinnedGroup& G, const RatMatrix& g) {
  return G.element_of_pattern(double_coset_pattern(g, Borel::Upper, Borel::Lower));
}

WeylElement opposite_bruhat_stratum(const PinnedGroup& G, const RatMatrix& g) {
  return G.element_of_pattern(double_coset_pattern(g, Borel::Lower, Borel::Lower));
}

std::pair<WeylElement, WeylElement> richardson_stratum(const PinnedGroup& G, const RatMatrix& g) {
  auto v = birkhoff_stratum(G, g);
  auto w = bruhat_stratum(G, g);
  require(bruhat_leq(v, w), ErrorKind::PostconditionFailed, "Richardson stratum with v not below w");
  return {std::move(v), std::move(w)};
}

std::pair<WeylElement, WeylElement> double_bruhat_stratum(const PinnedGroup& G, const RatMatrix& g) {
  return {bruhat_stratum(G, g), opposite_bruhat_stratum(G, g)};
}

namespace {

WeylElement longest_of(const ParabolicContext& J) {
  auto w0 = J.longest();
  require(w0.has_value(), ErrorKind::InvalidInput, "W_J must be finite");
  return *w0;
}

void require_same(const PinnedGroup& G, const ParabolicContext& J) {
  require(J.group()->same_as(*G.weyl()), ErrorKind::MismatchedGroup, "parabolic context of another group");
}

}  // namespace

std::pair<WeylElement, WeylElement> twisted_stratum(const PinnedGroup& G, const RatMatrix& g,
                                                    const ParabolicContext& J) {
  require_same(G, J);
  const auto w0 = longest_of(J);
  auto [v1, w1] = richardson_stratum(G, g * G.lift(w0));
  const auto w0inv = w0.inverse();
  auto v = multiply(v1, w0inv);
  auto w = multiply(w1, w0inv);
  require(j_leq(v, w, J), ErrorKind::PostconditionFailed, "twisted stratum with v not below w");
  return {std::move(v), std::move(w)};
}

RatMatrix canonical_twisted_flag(const PinnedGroup& G, const RatMatrix& g, const ParabolicContext& J) {
  require_same(G, J);
  return canonical_flag(g * G.lift(longest_of(J)));
}

namespace {

// Lifts are signed permutation matrices, so their inverse is the transpose.
std::optional<LduFactors> big_cell_factors(const PinnedGroup& G, const RatMatrix& g, const WeylElement& r,
                                           const ParabolicContext& J, RatMatrix& R) {
  require_same(G, J);
  const auto& wj = G.lift(longest_of(J));
  R = G.lift(r) * wj;
  return ldu(R.transpose() * g * wj);
}

}  // namespace

bool big_cell_test(const PinnedGroup& G, const RatMatrix& g, const WeylElement& r, const ParabolicContext& J) {
  RatMatrix R;
  return big_cell_factors(G, g, r, J, R).has_value();
}

RatMatrix big_cell_coordinate(const PinnedGroup& G, const RatMatrix& g, const WeylElement& r,
                              const ParabolicContext& J) {
  RatMatrix R;
  auto f = big_cell_factors(G, g, r, J, R);
  require(f.has_value(), ErrorKind::DecompositionFails, "flag is outside the translated big cell");
  return R * f->first * R.transpose();
}

bool in_twisted_unipotent(const RatMatrix& m, const ParabolicContext& J) {
  const auto n = m.size();
  std::vector<std::size_t> block(n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) block[i + 1] = block[i] + (J.J().contains(i) ? 0 : 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        if (m(i, i) != 1) return false;
        continue;
      }
      const bool same = block[i] == block[j];
      const bool allowed = i < j ? same : !same;
      if (!allowed && sgn(m(i, j)) != 0) return false;
    }
  }
  return true;
}

SigmaFactors sigma_factorize(const PinnedGroup& G, const RatMatrix& g, const WeylElement& r,
                             const ParabolicContext& J) {
  require_same(G, J);
  const auto& rd = G.lift(r);
  const auto rt = rd.transpose();
  require(in_twisted_unipotent(rt * g * rd, J), ErrorKind::DecompositionFails,
          "matrix is not in the conjugated unipotent group");
  auto lu = ldu(g);
  auto ul = udl(g);
  require(lu && ul, ErrorKind::DecompositionFails, "a principal minor vanishes");
  const auto id = RatMatrix::identity(g.size());
  require(lu->middle == id && ul->middle == id, ErrorKind::PatternViolation, "nontrivial torus part");
  SigmaFactors out{std::move(lu->last), std::move(ul->last)};
  require(in_twisted_unipotent(rt * out.plus * rd, J) && in_twisted_unipotent(rt * out.minus * rd, J),
          ErrorKind::PatternViolation, "factor leaves the conjugated unipotent group");
  return out;
}

RatMatrix sigma_recompose(const RatMatrix& plus, const RatMatrix& minus) {
  auto f = ldu(plus * minus.inverse());
  require(f.has_value() && f->middle == RatMatrix::identity(plus.size()), ErrorKind::DecompositionFails,
          "factors do not recombine");
  return f->first.inverse() * plus;
}

CellSample sample_mr(const PinnedGroup& G, MrKind kind, const WeylElement& v, const Word& word_w,
                     const std::vector<Rational>& params, bool allow_nonzero) {
  const auto sub = mr_positive_subexpression(v, word_w);
  require(params.size() == sub.skips(), ErrorKind::ParameterMismatch,
          "expected " + std::to_string(sub.skips()) + " parameters, got " + std::to_string(params.size()));
  for (const auto& p : params)
    require(allow_nonzero ? sgn(p) != 0 : sgn(p) > 0, ErrorKind::NonpositiveParameter,
            "parameter " + to_string(p) + " is not allowed");
  RatMatrix m = RatMatrix::identity(G.n());
  std::size_t next = 0;
  for (std::size_t k = 0; k < word_w.size(); ++k) {
    const auto i = word_w[k];
    if (sub.used[k])
      m = m * (kind == MrKind::Negative ? G.sdot(i).transpose() : G.sdot(i));
    else
      m = m * (kind == MrKind::Negative ? G.y(i, params[next++]) : G.x(i, params[next++]));
  }
  auto w = evaluate(G.weyl(), word_w);
  if (kind == MrKind::Negative) {
    require(birkhoff_stratum(G, m) == v && bruhat_stratum(G, m) == w, ErrorKind::PostconditionFailed,
            "negative sample left its Richardson stratum");
  } else {
    require(mixed_stratum(G, m) == v && opposite_bruhat_stratum(G, m) == w, ErrorKind::PostconditionFailed,
            "positive sample left its stratum");
  }
  return CellSample{std::move(m), {v, std::move(w)}, std::nullopt, params};
}

CellSample sample_twisted_cell(const PinnedGroup& G, const WeylElement& v, const WeylElement& w,
                               const ParabolicContext& J, const std::vector<Rational>& params,
                               const TwistedWords& words, bool allow_nonzero) {
  require_same(G, J);
  require(j_leq(v, w, J), ErrorKind::NotComparable, "v is not below w in the twisted order");
  const auto c = minimal_c(v, w, J);
  const auto pv = parabolic_decompose(v, J);
  const auto pw = parabolic_decompose(w, J);

  const Word upper = words.w_upper.value_or(canonical_reduced_word(pw.rep));
  require(is_reduced(G.weyl(), upper) && evaluate(G.weyl(), upper) == pw.rep, ErrorKind::InvalidInput,
          "w_upper is not a reduced word for w^J");
  Word lower = canonical_reduced_word(c.inverse());
  const Word vj = words.v_lower.value_or(canonical_reduced_word(pv.part));
  require(is_reduced(G.weyl(), vj) && evaluate(G.weyl(), vj) == pv.part, ErrorKind::InvalidInput,
          "v_lower is not a reduced word for v_J");
  lower.insert(lower.end(), vj.begin(), vj.end());
  require(is_reduced(G.weyl(), lower), ErrorKind::PostconditionFailed, "c^{-1} v_J is not length-additive");

  const auto first_v = multiply(pv.rep, c);
  const auto k1 = mr_positive_subexpression(first_v, upper).skips();
  const auto k2 = mr_positive_subexpression(pw.part, lower).skips();
  require(params.size() == k1 + k2, ErrorKind::ParameterMismatch,
          "expected " + std::to_string(k1 + k2) + " parameters, got " + std::to_string(params.size()));

  const std::vector<Rational> p1(params.begin(), params.begin() + static_cast<long>(k1));
  const std::vector<Rational> p2(params.begin() + static_cast<long>(k1), params.end());
  auto g1 = sample_mr(G, MrKind::Negative, first_v, upper, p1, allow_nonzero);
  auto g2 = sample_mr(G, MrKind::Positive, pw.part, lower, p2, allow_nonzero);
  RatMatrix m = g1.matrix * g2.matrix;
  const auto st = twisted_stratum(G, m, J);
  require(st.first == v && st.second == w, ErrorKind::PostconditionFailed, "twisted sample left its stratum");
  return CellSample{std::move(m), {v, w, c}, J.J(), params};
}

bool tnn_test(const RatMatrix& g) {
  const auto n = g.size();
  require(n <= 5, ErrorKind::BudgetExceeded, "tnn_test is limited to n <= 5");
  const std::uint32_t full = 1u << n;
  for (std::uint32_t rm = 1; rm < full; ++rm) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i)
      if ((rm >> i) & 1u) rows.push_back(i);
    for (std::uint32_t cm = 1; cm < full; ++cm) {
      if (__builtin_popcount(cm) != __builtin_popcount(rm)) continue;
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < n; ++j)
        if ((cm >> j) & 1u) cols.push_back(j);
      if (sgn(g.minor(rows, cols)) < 0) return false;
    }
  }
  return true;
}

}  // namespace twistpos
