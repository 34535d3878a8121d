#include <random>

#include "doctest.h"
#include "twistpos/el_labeling.hpp"
#include "twistpos/homology.hpp"

using namespace twistpos;

namespace {

using Dense = std::vector<std::vector<mpz_class>>;

// Determinant by fraction-free elimination.
mpz_class det(Dense m) {
  const auto n = m.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}.
std::vector<mpz_class> factors_by_minors(const Dense& m) {
  const auto rows = m.size();
  const auto cols = m.front().size();
  std::vector<mpz_class> D{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    mpz_class g = 0;
    for (std::uint32_t rm = 0; rm < (1u << rows); ++rm) {
      if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
      for (std::uint32_t cm = 0; cm < (1u << cols); ++cm) {
        if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
        Dense sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!((rm >> r) & 1u)) continue;
          sub.emplace_back();
          for (std::size_t c = 0; c < cols; ++c)
            if ((cm >> c) & 1u) sub.back().push_back(m[r][c]);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(abs(det(sub))).get_mpz_t());
      }
    }
    if (g == 0) break;
    D.push_back(g);
  }
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k < D.size(); ++k) out.push_back(D[k] / D[k - 1]);
  return out;
}

SimplicialComplex hollow_triangle() { return {3, {{0, 1}, {0, 2}, {1, 2}}}; }

// Six-vertex projective plane.
SimplicialComplex rp2() {
  return {6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}}};
}

}  // namespace

TEST_CASE("boundary matrices") {
  CHECK(boundary_matrices({1, {{0}}}).boundary.empty());

  auto edge = boundary_matrices({2, {{0, 1}}});
  REQUIRE(edge.boundary.size() == 1);
  const auto& col = edge.boundary[0].columns[0];
  REQUIRE(col.size() == 2);
  CHECK(col[0] == std::pair<std::size_t, long>{0, -1});
  CHECK(col[1] == std::pair<std::size_t, long>{1, 1});

  auto tri = boundary_matrices(hollow_triangle());
  REQUIRE(tri.boundary.size() == 1);
  CHECK(tri.boundary[0].rows == 3);
  CHECK(tri.boundary[0].cols == 3);
  for (const auto& c : tri.boundary[0].columns) {
    long sum = 0;
    for (const auto& [r, v] : c) sum += v;
    CHECK(sum == 0);
  }
  CHECK(smith_normal_form(tri.boundary[0]).rank == 2);
  CHECK_THROWS(boundary_matrices(rp2(), 10));
}

TEST_CASE("Smith normal form examples") {
  auto id = smith_normal_form(Dense{{1, 0}, {0, 1}});
  CHECK(id.diagonal == std::vector<mpz_class>{1, 1});
  CHECK(smith_normal_form(Dense{{2, 0}, {0, 4}}).diagonal == std::vector<mpz_class>{2, 4});
  CHECK(smith_normal_form(Dense{{2, 4}, {6, 8}}).diagonal == std::vector<mpz_class>{2, 4});
  CHECK(smith_normal_form(Dense{{0, 0}, {0, 0}}).rank == 0);
  CHECK(smith_normal_form(Dense{{2, 0}, {0, 3}}).diagonal == std::vector<mpz_class>{1, 6});
}

TEST_CASE("Smith normal form agrees with determinantal divisors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 4;
    Dense m(rows, std::vector<mpz_class>(cols));
    for (auto& r : m)
      for (auto& v : r) v = static_cast<long>(rng() % 13) - 6;
    CHECK(smith_normal_form(m).diagonal == factors_by_minors(m));
  }
}

TEST_CASE("reduced homology") {
  auto s0 = reduced_homology({2, {{0}, {1}}});
  CHECK(s0.betti_at(0) == 1);
  CHECK(is_sphere_signature(s0, 0));

  auto s1 = reduced_homology(hollow_triangle());
  CHECK(s1.betti_at(1) == 1);
  CHECK(s1.betti_at(0) == 0);
  CHECK(is_sphere_signature(s1, 1));
  CHECK_FALSE(is_sphere_signature(s1, 0));

  auto disk = reduced_homology({3, {{0, 1, 2}}});
  for (int d = -1; d <= 2; ++d) CHECK_FALSE(is_sphere_signature(disk, d));

  auto empty = reduced_homology({0, {}});
  CHECK(is_sphere_signature(empty, -1));

  auto proj = reduced_homology(rp2());
  CHECK(proj.betti_at(1) == 0);
  CHECK(proj.betti_at(2) == 0);
  REQUIRE(proj.torsion[2].size() == 1);
  CHECK(proj.torsion[2][0] == 2);
  CHECK_FALSE(sphere_dimension(proj).has_value());

  auto g = WeylGroup::create(CartanMatrix::type_A(2));
  auto iv = j_interval(g->identity(), g->from_word({0, 1, 0}), ParabolicContext(g, {}));
  auto h = reduced_homology(order_complex(to_finite_poset(iv), ComplexMode::OpenInterval).complex);
  CHECK(h.betti_at(1) == 1);
  CHECK(h.betti_at(0) == 0);
  CHECK(sphere_dimension(h) == 1);
}

TEST_CASE("Euler characteristic matches Betti numbers") {
  auto g = WeylGroup::create(CartanMatrix::type_A(3));
  auto elems = enumerate_group(g);
  ParabolicContext none(g, {});
  for (std::size_t k = 0; k < elems.size(); k += 5) {
    auto iv = j_interval(g->identity(), elems[k], none);
    if (iv.elements.size() < 2) continue;
    auto cx = order_complex(to_finite_poset(iv), ComplexMode::OpenInterval).complex;
    auto chain = boundary_matrices(cx);
    long euler = -1;  // the empty face
    for (std::size_t d = 0; d < chain.faces.size(); ++d)
      euler += (d % 2 == 0 ? 1 : -1) * static_cast<long>(chain.faces[d].size());
    auto h = reduced_homology(cx);
    long alt = 0;
    for (std::size_t idx = 0; idx < h.betti.size(); ++idx)
      alt += (idx % 2 == 1 ? 1 : -1) * static_cast<long>(h.betti[idx]);
    CHECK(euler == alt);
  }
}
