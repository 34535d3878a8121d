#include <set>

#include "doctest.h"
#include "twistpos/el_labeling.hpp"
#include "twistpos/error.hpp"
#include "twistpos/pinning.hpp"
#include "twistpos/random.hpp"

using namespace twistpos;

namespace {

using Profile = std::vector<std::size_t>;

// Ranks of the corner submatrices singled out by the pair of Borels.
Profile rank_profile(const RatMatrix& g, Borel left, Borel right) {
  const auto n = g.size();
  Profile out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t i = 0; i < n; ++i)
        if (left == Borel::Upper ? i >= a : i <= a) rows.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (right == Borel::Upper ? j <= b : j >= b) cols.push_back(j);
      out.push_back(g.rank(rows, cols));
    }
  }
  return out;
}

Rational small(SeededRng& rng) {
  Rational q = rng.positive_rational(6);
  return rng.next() % 3 == 0 ? Rational(-q) : q;
}

RatMatrix random_borel(SeededRng& rng, std::size_t n, Borel side) {
  RatMatrix b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = small(rng);
    for (std::size_t j = 0; j < n; ++j) {
      const bool above = j > i;
      if (i != j && above == (side == Borel::Upper) && rng.next() % 4 != 0) b(i, j) = small(rng);
    }
  }
  return b;
}

std::vector<Rational> params(SeededRng& rng, std::size_t k) { return rng.positive_rationals(k); }

WeylElement el(const PinnedGroup& G, const Word& w) { return evaluate(G.weyl(), w); }

// For each k, the nonzero k x k minors in the first k columns share a sign.
// Holds for every flag in the closure of U^- B^+ (Plucker coordinates).
bool plucker_nonnegative(const RatMatrix& g) {
  const auto n = g.size();
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < k; ++j) cols.push_back(j);
    int sign = 0;
    for (std::uint32_t rm = 0; rm < (1u << n); ++rm) {
      if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < n; ++i)
        if ((rm >> i) & 1u) rows.push_back(i);
      const int s = sgn(g.minor(rows, cols));
      if (s == 0) continue;
      if (sign == 0) sign = s;
      if (s != sign) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("pinning generators") {
  PinnedGroup sl2(2);
  CHECK(sl2.x(0, 5) == RatMatrix::from_rows({{1, 5}, {0, 1}}));
  CHECK(sl2.y(0, 5) == RatMatrix::from_rows({{1, 0}, {5, 1}}));
  CHECK(sl2.cochar(0, 3) == RatMatrix::from_rows({{3, 0}, {0, Rational(1, 3)}}));
  CHECK(sl2.lift(Word{0}) == RatMatrix::from_rows({{0, 1}, {-1, 0}}));
  CHECK(sl2.sdot(0).determinant() == 1);
  CHECK_THROWS_AS(sl2.x(1, 1), Error);

  PinnedGroup sl3(3);
  CHECK(sl3.lift(Word{0, 1, 0}) == sl3.lift(Word{1, 0, 1}));
  CHECK_THROWS_AS(sl3.lift(Word{0, 0}), Error);

  PinnedGroup sl4(4);
  for (const auto& w : enumerate_group(sl4.weyl())) {
    CHECK(sl4.lift(w).determinant() == 1);
    CHECK(sl4.lift(w) == sl4.lift(canonical_reduced_word(w)));
  }
  // braid invariance across all reduced words of w0
  const auto w0 = longest_element(sl4.weyl(), NodeSet::all(3));
  CHECK(sl4.lift(Word{0, 1, 0, 2, 1, 0}) == sl4.lift(w0));
  CHECK(sl4.lift(Word{2, 1, 2, 0, 1, 2}) == sl4.lift(w0));
  CHECK(sl4.lift(Word{1, 0, 2, 1, 0, 2}) == sl4.lift(w0));
}

TEST_CASE("double coset patterns agree with rank profiles on random Borel products") {
  SeededRng rng(7);
  const std::pair<Borel, Borel> sides[] = {
      {Borel::Upper, Borel::Upper}, {Borel::Lower, Borel::Upper}, {Borel::Upper, Borel::Lower}, {Borel::Lower, Borel::Lower}};
  for (std::size_t n : {3u, 4u}) {
    PinnedGroup G(n);
    for (const auto& w : enumerate_group(G.weyl())) {
      for (auto [left, right] : sides) {
        const auto& wd = G.lift(w);
        const auto expected = rank_profile(wd, left, right);
        for (int t = 0; t < 6; ++t) {
          RatMatrix g = random_borel(rng, n, left) * wd * random_borel(rng, n, right);
          CHECK(double_coset_pattern(g, left, right) == G.pattern(w));
          CHECK(rank_profile(g, left, right) == expected);
        }
      }
    }
  }
}

TEST_CASE("stratum examples") {
  PinnedGroup sl2(2);
  const auto e = sl2.weyl()->identity();
  const auto s1 = sl2.weyl()->simple_reflection(0);
  const auto id = RatMatrix::identity(2);
  CHECK(bruhat_stratum(sl2, id) == e);
  CHECK(bruhat_stratum(sl2, sl2.sdot(0)) == s1);
  CHECK(bruhat_stratum(sl2, sl2.y(0, 1)) == s1);
  CHECK(birkhoff_stratum(sl2, id) == e);
  CHECK(birkhoff_stratum(sl2, sl2.y(0, 3)) == e);
  CHECK(birkhoff_stratum(sl2, sl2.sdot(0)) == s1);
  CHECK(richardson_stratum(sl2, id) == std::make_pair(e, e));
  CHECK(richardson_stratum(sl2, sl2.y(0, 1)) == std::make_pair(e, s1));
  CHECK(richardson_stratum(sl2, sl2.sdot(0)) == std::make_pair(s1, s1));
  CHECK(double_bruhat_stratum(sl2, id) == std::make_pair(e, e));
  CHECK(double_bruhat_stratum(sl2, sl2.sdot(0)) == std::make_pair(s1, s1));
  CHECK(double_bruhat_stratum(sl2, sl2.y(0, 1) * sl2.x(0, 1)) == std::make_pair(s1, s1));

  PinnedGroup sl3(3);
  const auto g = sl3.y(0, 2) * sl3.x(1, 3);
  for (std::uint32_t mask = 0; mask < 4; ++mask) {
    ParabolicContext J(sl3.weyl(), NodeSet(mask));
    const auto e3 = sl3.weyl()->identity();
    CHECK(twisted_stratum(sl3, RatMatrix::identity(3), J) == std::make_pair(e3, e3));
  }
  ParabolicContext none(sl3.weyl(), {});
  CHECK(twisted_stratum(sl3, g, none) == richardson_stratum(sl3, g));
}

TEST_CASE("big cell test examples") {
  PinnedGroup sl2(2);
  const auto e = sl2.weyl()->identity();
  ParabolicContext none(sl2.weyl(), {});
  CHECK_FALSE(big_cell_test(sl2, sl2.sdot(0), e, none));
  CHECK(big_cell_test(sl2, sl2.y(0, 1), e, none));

  PinnedGroup sl3(3);
  for (std::uint32_t mask = 0; mask < 4; ++mask) {
    ParabolicContext J(sl3.weyl(), NodeSet(mask));
    const auto wj = sl3.lift(*J.longest());
    for (const auto& r : enumerate_group(sl3.weyl())) {
      RatMatrix u = sl3.x(0, 2) * sl3.x(1, Rational(1, 3)) * sl3.x(0, -1);
      CHECK(big_cell_test(sl3, sl3.lift(r) * wj * u * wj.transpose(), r, J));
    }
  }
}

TEST_CASE("sample_mr examples") {
  PinnedGroup sl2(2);
  const auto e2 = sl2.weyl()->identity();
  auto s = sample_mr(sl2, MrKind::Negative, e2, {0}, {1});
  CHECK(s.matrix == sl2.y(0, 1));
  CHECK(richardson_stratum(sl2, s.matrix) == std::make_pair(e2, sl2.weyl()->simple_reflection(0)));
  CHECK_THROWS_AS(sample_mr(sl2, MrKind::Negative, e2, {0}, {}), Error);
  CHECK_THROWS_AS(sample_mr(sl2, MrKind::Negative, e2, {0}, {0}), Error);
  CHECK_THROWS_AS(sample_mr(sl2, MrKind::Negative, e2, {0}, {-1}), Error);

  PinnedGroup sl3(3);
  for (const auto& w : enumerate_group(sl3.weyl())) {
    auto t = sample_mr(sl3, MrKind::Negative, w, canonical_reduced_word(w), {});
    CHECK(t.matrix == sl3.lift(w.inverse()).transpose());
    CHECK(canonical_flag(t.matrix) == canonical_flag(sl3.lift(w)));
    CHECK(richardson_stratum(sl3, t.matrix) == std::make_pair(w, w));
  }
  SeededRng rng(3);
  const auto s2 = el(sl3, {1});
  for (int k = 0; k < 10; ++k) {
    const auto a = rng.positive_rational();
    const auto c = rng.positive_rational();
    auto t = sample_mr(sl3, MrKind::Negative, s2, {0, 1, 0}, {a, c});
    CHECK(t.matrix == sl3.y(0, a) * sl3.sdot(1).transpose() * sl3.y(0, c));
    CHECK(richardson_stratum(sl3, t.matrix) == std::make_pair(s2, el(sl3, {0, 1, 0})));
  }
}

TEST_CASE("Marsh-Rietsch samples land in their strata for every pair") {
  SeededRng rng(5);
  for (std::size_t n : {3u, 4u}) {
    PinnedGroup G(n);
    const auto elems = enumerate_group(G.weyl());
    for (const auto& w : elems) {
      const auto word = canonical_reduced_word(w);
      for (const auto& v : elems) {
        if (!bruhat_leq(v, w)) continue;
        const auto k = mr_positive_subexpression(v, word).skips();
        CHECK(k == w.length() - v.length());
        for (auto kind : {MrKind::Negative, MrKind::Positive}) {
          auto s = sample_mr(G, kind, v, word, params(rng, k));
          CHECK(s.index[1] == w);
        }
      }
    }
  }
}

TEST_CASE("twisted cell examples") {
  PinnedGroup sl3(3);
  const auto e = sl3.weyl()->identity();
  const auto s1 = el(sl3, {0});
  const auto s2 = el(sl3, {1});
  const auto w0 = el(sl3, {0, 1, 0});
  ParabolicContext J2(sl3.weyl(), {1});
  SeededRng rng(9);

  for (const auto& w : enumerate_group(sl3.weyl())) {
    auto s = sample_twisted_cell(sl3, w, w, J2, {});
    CHECK(twisted_stratum(sl3, s.matrix, J2) == std::make_pair(w, w));
  }
  auto a = sample_twisted_cell(sl3, s2, s1, J2, params(rng, 2));
  CHECK(twisted_stratum(sl3, a.matrix, J2) == std::make_pair(s2, s1));
  CHECK_THROWS_AS(sample_twisted_cell(sl3, s2, s1, J2, params(rng, 1)), Error);

  auto b = sample_twisted_cell(sl3, e, w0, J2, params(rng, 1));
  CHECK(b.index[2] == s2);
  CHECK(twisted_stratum(sl3, b.matrix, J2) == std::make_pair(e, w0));

  CHECK_THROWS_AS(sample_twisted_cell(sl3, s1, e, ParabolicContext(sl3.weyl(), {}), {}), Error);
}

TEST_CASE("twisted sampler succeeds exactly on comparable pairs") {
  SeededRng rng(13);
  PinnedGroup sl3(3);
  const auto elems = enumerate_group(sl3.weyl());
  for (std::uint32_t mask = 0; mask < 4; ++mask) {
    ParabolicContext J(sl3.weyl(), NodeSet(mask));
    for (const auto& v : elems) {
      for (const auto& w : elems) {
        if (!j_leq(v, w, J)) {
          CHECK_THROWS_AS(sample_twisted_cell(sl3, v, w, J, {}), Error);
          continue;
        }
        const auto k = static_cast<std::size_t>(j_length(w, J) - j_length(v, J));
        std::set<std::string> flags;
        for (int t = 0; t < 8; ++t) {
          auto s = sample_twisted_cell(sl3, v, w, J, params(rng, k));
          CHECK(s.parameters.size() == k);
          CHECK(twisted_stratum(sl3, s.matrix, J) == std::make_pair(v, w));
          flags.insert(to_string(canonical_twisted_flag(sl3, s.matrix, J)));
        }
        if (k == 0) CHECK(flags.size() == 1);
      }
    }
  }
}

TEST_CASE("alternative reduced words give the same stratum") {
  SeededRng rng(17);
  PinnedGroup sl4(4);
  ParabolicContext J(sl4.weyl(), {1});
  const auto elems = enumerate_group(sl4.weyl());
  const auto w = el(sl4, {0, 1, 0, 2, 1});
  for (const auto& v : elems) {
    if (!j_leq(v, w, J)) continue;
    const auto k = static_cast<std::size_t>(j_length(w, J) - j_length(v, J));
    const auto wj = parabolic_decompose(w, J).rep;
    for (const Word& word : {Word{0, 1, 0, 2}, Word{1, 0, 1, 2}}) {
      REQUIRE(evaluate(sl4.weyl(), word) == wj);
      auto s = sample_twisted_cell(sl4, v, w, J, params(rng, k), TwistedWords{word, std::nullopt});
      CHECK(twisted_stratum(sl4, s.matrix, J) == std::make_pair(v, w));
    }
  }
}

TEST_CASE("injectivity on distinct parameters") {
  SeededRng rng(21);
  PinnedGroup sl3(3);
  ParabolicContext J(sl3.weyl(), {0});
  const auto e = sl3.weyl()->identity();
  const auto w = el(sl3, {0, 1});
  const auto k = static_cast<std::size_t>(j_length(w, J) - j_length(e, J));
  REQUIRE(k >= 1);
  std::set<std::vector<Rational>> seen;
  std::set<std::string> flags;
  while (seen.size() < 200) {
    auto p = rng.positive_rationals(k, 50);
    if (!seen.insert(p).second) continue;
    flags.insert(to_string(canonical_twisted_flag(sl3, sample_twisted_cell(sl3, e, w, J, p).matrix, J)));
  }
  CHECK(flags.size() == seen.size());
}

TEST_CASE("one-dimensional cells take both signs") {
  PinnedGroup sl3(3);
  const auto elems = enumerate_group(sl3.weyl());
  for (std::uint32_t mask = 0; mask < 4; ++mask) {
    ParabolicContext J(sl3.weyl(), NodeSet(mask));
    for (const auto& v : elems) {
      for (const auto& w : elems) {
        if (!j_leq(v, w, J) || j_length(w, J) - j_length(v, J) != 1) continue;
        for (const Rational& a : {Rational(2), Rational(-2), Rational(1, 3), Rational(-1, 3)}) {
          auto s = sample_twisted_cell(sl3, v, w, J, {a}, {}, true);
          CHECK(twisted_stratum(sl3, s.matrix, J) == std::make_pair(v, w));
        }
        CHECK_THROWS_AS(sample_twisted_cell(sl3, v, w, J, {Rational(-1)}), Error);
      }
    }
  }
}

TEST_CASE("sigma factorization examples") {
  PinnedGroup sl3(3);
  const auto e = sl3.weyl()->identity();
  ParabolicContext none(sl3.weyl(), {});
  const auto g = sl3.y(0, 2) * sl3.y(1, 3);
  auto f = sigma_factorize(sl3, g, e, none);
  CHECK(f.plus == RatMatrix::identity(3));
  CHECK(f.minus == g);
  auto id = sigma_factorize(sl3, RatMatrix::identity(3), e, none);
  CHECK(id.plus == RatMatrix::identity(3));
  CHECK(id.minus == RatMatrix::identity(3));
  CHECK_THROWS_AS(sigma_factorize(sl3, sl3.x(0, 1), e, none), Error);

  const auto s1 = el(sl3, {0});
  const auto& rd = sl3.lift(s1);
  const auto k = rd * sl3.y(1, 5) * rd.transpose();
  auto h = sigma_factorize(sl3, k, s1, none);
  CHECK(sigma_recompose(h.plus, h.minus) == k);
  const auto [v, w] = richardson_stratum(sl3, k * rd);
  CHECK(richardson_stratum(sl3, h.plus * rd).first == v);
  CHECK(richardson_stratum(sl3, h.plus * rd).second == s1);
  CHECK(richardson_stratum(sl3, h.minus * rd).first == s1);
  CHECK(richardson_stratum(sl3, h.minus * rd).second == w);
}

TEST_CASE("inclusion and product structure on SL3 samples") {
  SeededRng rng(23);
  PinnedGroup sl3(3);
  const auto elems = enumerate_group(sl3.weyl());
  for (std::uint32_t mask = 0; mask < 4; ++mask) {
    ParabolicContext J(sl3.weyl(), NodeSet(mask));
    for (const auto& v : elems) {
      for (const auto& w : elems) {
        if (!j_leq(v, w, J)) continue;
        const auto k = static_cast<std::size_t>(j_length(w, J) - j_length(v, J));
        for (int t = 0; t < 3; ++t) {
          const auto g = sample_twisted_cell(sl3, v, w, J, params(rng, k)).matrix;
          for (const auto& r : elems) {
            if (!j_leq(v, r, J) || !j_leq(r, w, J)) continue;
            REQUIRE(big_cell_test(sl3, g, r, J));
            const auto kk = big_cell_coordinate(sl3, g, r, J);
            const auto& rd = sl3.lift(r);
            CHECK(canonical_twisted_flag(sl3, kk * rd, J) == canonical_twisted_flag(sl3, g, J));
            auto f = sigma_factorize(sl3, kk, r, J);
            CHECK(twisted_stratum(sl3, f.plus * rd, J) == std::make_pair(v, r));
            CHECK(twisted_stratum(sl3, f.minus * rd, J) == std::make_pair(r, w));
            const auto back = sigma_recompose(f.plus, f.minus);
            CHECK(canonical_twisted_flag(sl3, back * rd, J) == canonical_twisted_flag(sl3, g, J));
          }
        }
      }
    }
  }
}

TEST_CASE("total nonnegativity") {
  PinnedGroup sl2(2);
  CHECK(tnn_test(RatMatrix::identity(2)));
  CHECK(tnn_test(sl2.y(0, 1) * sl2.x(0, 1)));
  CHECK_FALSE(tnn_test(sl2.x(0, -1)));
  CHECK_THROWS_AS(tnn_test(RatMatrix::identity(6)), Error);

  SeededRng rng(29);
  PinnedGroup sl4(4);
  for (int t = 0; t < 30; ++t) {
    RatMatrix a = RatMatrix::identity(4), b = RatMatrix::identity(4);
    for (int k = 0; k < 5; ++k) {
      a = a * sl4.x(rng.index(3), rng.positive_rational()) * sl4.y(rng.index(3), rng.positive_rational());
      b = b * sl4.cochar(rng.index(3), rng.positive_rational()) * sl4.y(rng.index(3), rng.positive_rational());
    }
    REQUIRE(tnn_test(a));
    REQUIRE(tnn_test(b));
    CHECK(tnn_test(a * b));
    CHECK(tnn_test(b * a));
  }
}

TEST_CASE("samples give totally nonnegative flags") {
  PinnedGroup sl3(3);
  // the other sign of the lift in the negative factor leaves the positive part
  const auto bad = sl3.sdot(0) * sl3.y(1, 2);
  CHECK(richardson_stratum(sl3, bad) == std::make_pair(el(sl3, {0}), el(sl3, {0, 1})));
  CHECK_FALSE(plucker_nonnegative(bad));
  CHECK(plucker_nonnegative(sample_mr(sl3, MrKind::Negative, el(sl3, {0}), {0, 1}, {2}).matrix));

  SeededRng rng(41);
  for (std::size_t n : {3u, 4u}) {
    PinnedGroup G(n);
    const auto elems = enumerate_group(G.weyl());
    for (std::uint64_t m = 0; m < (1u << (n - 1)); ++m) {
      const ParabolicContext J(G.weyl(), NodeSet(m));
      const auto& wj = G.lift(*J.longest());
      for (const auto& v : elems)
        for (const auto& w : elems) {
          if (!j_leq(v, w, J)) continue;
          const auto d = static_cast<std::size_t>(j_length(w, J) - j_length(v, J));
          for (int k = 0; k < 2; ++k) {
            const auto g = sample_twisted_cell(G, v, w, J, params(rng, d)).matrix;
            CHECK_MESSAGE(plucker_nonnegative(g * wj), "J=" << m << " v=" << element_key(v) << " w=" << element_key(w));
          }
        }
    }
  }
}
