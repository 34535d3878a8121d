#include "twistpos/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "twistpos/error.hpp"

namespace twistpos {

namespace {

// Sparse elimination over Z. Rows are maps col -> value; cols index their rows.
class SparseSnf {
 public:
  SparseSnf(std::size_t rows, std::size_t cols) : rows_(rows), col_rows_(cols) {}

  void set(std::size_t r, std::size_t c, const mpz_class& v) {
    if (v == 0) return;
    rows_[r][c] = v;
    col_rows_[c].insert(r);
  }

  SmithForm run() {
    std::vector<mpz_class> diag;
    while (true) {
      auto pivot = choose_pivot();
      if (!pivot) break;
      const auto [r, c] = *pivot;
      const mpz_class p = rows_[r].at(c);

      bool dirty = false;
      const std::vector<std::size_t> others(col_rows_[c].begin(), col_rows_[c].end());
      for (auto i : others) {
        if (i == r) continue;
        mpz_class q = rows_[i].at(c) / p;  // truncating division
        if (q != 0) add_row_multiple(i, r, -q);
        if (rows_[i].count(c)) dirty = true;
      }
      if (dirty) continue;

      bool divides = true;
      for (const auto& [j, v] : rows_[r])
        if (j != c && v % p != 0) divides = false;
      if (divides) {
        diag.push_back(abs(p));
        for (const auto& [j, v] : rows_[r]) col_rows_[j].erase(r);
        rows_[r].clear();
        continue;
      }
      // Column c is zero off row r, so column operations only touch row r.
      std::vector<std::size_t> cols;
      for (const auto& [j, v] : rows_[r])
        if (j != c) cols.push_back(j);
      for (auto j : cols) {
        mpz_class rem = rows_[r][j] % p;
        if (rem == 0) {
          rows_[r].erase(j);
          col_rows_[j].erase(r);
        } else {
          rows_[r][j] = rem;
        }
      }
    }
    for (std::size_t i = 0; i < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        mpz_class g, l;
        mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
        mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
        diag[i] = g;
        diag[j] = l;
      }
    }
    std::sort(diag.begin(), diag.end());
    SmithForm out;
    out.rank = diag.size();
    out.diagonal = std::move(diag);
    return out;
  }

 private:
  // Smallest magnitude, ties broken row-major.
  std::optional<std::pair<std::size_t, std::size_t>> choose_pivot() const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    const mpz_class* best_abs_of = nullptr;
    mpz_class best_abs;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        mpz_class a = abs(v);
        if (!best_abs_of || a < best_abs) {
          best_abs = a;
          best_abs_of = &v;
          best = std::make_pair(r, c);
          if (a == 1) return best;
        }
      }
    }
    return best;
  }

  void add_row_multiple(std::size_t target, std::size_t source, const mpz_class& q) {
    for (const auto& [c, v] : rows_[source]) {
      auto it = rows_[target].find(c);
      if (it == rows_[target].end()) {
        rows_[target].emplace(c, q * v);
        col_rows_[c].insert(target);
      } else {
        it->second += q * v;
        if (it->second == 0) {
          rows_[target].erase(it);
          col_rows_[c].erase(target);
        }
      }
    }
  }

  std::vector<std::map<std::size_t, mpz_class>> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
};

}  // namespace

ChainComplexZ boundary_matrices(const SimplicialComplex& c, std::size_t face_budget) {
  std::vector<std::set<std::vector<std::size_t>>> by_dim;
  std::size_t total = 0;
  for (const auto& facet : c.facets) {
    require(!facet.empty(), ErrorKind::InvalidInput, "empty facet");
    require(facet.size() < 40, ErrorKind::BudgetExceeded, "facet too large");
    for (auto v : facet) require(v < c.vertices, ErrorKind::IndexOutOfRange, "facet vertex out of range");
    if (by_dim.size() < facet.size()) by_dim.resize(facet.size());
    for (std::uint64_t mask = 1; mask < (1ULL << facet.size()); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t k = 0; k < facet.size(); ++k)
        if ((mask >> k) & 1ULL) face.push_back(facet[k]);
      std::sort(face.begin(), face.end());
      if (by_dim[face.size() - 1].insert(face).second) {
        require(++total <= face_budget, ErrorKind::BudgetExceeded,
                "complex exceeds " + std::to_string(face_budget) + " faces");
      }
    }
  }
  ChainComplexZ out;
  for (auto& s : by_dim) out.faces.emplace_back(s.begin(), s.end());

  for (std::size_t k = 1; k < out.faces.size(); ++k) {
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < out.faces[k - 1].size(); ++i) index.emplace(out.faces[k - 1][i], i);
    SparseIntMatrix d{out.faces[k - 1].size(), out.faces[k].size(), {}};
    for (const auto& face : out.faces[k]) {
      std::vector<std::pair<std::size_t, long>> col;
      for (std::size_t i = 0; i < face.size(); ++i) {
        auto sub = face;
        sub.erase(sub.begin() + static_cast<long>(i));
        col.emplace_back(index.at(sub), i % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
      d.columns.push_back(std::move(col));
    }
    out.boundary.push_back(std::move(d));
  }

  // d_{k-1} d_k = 0
  for (std::size_t k = 1; k < out.boundary.size(); ++k) {
    const auto& hi = out.boundary[k];
    const auto& lo = out.boundary[k - 1];
    for (const auto& col : hi.columns) {
      std::map<std::size_t, long> acc;
      for (const auto& [r, v] : col)
        for (const auto& [r2, v2] : lo.columns[r]) acc[r2] += v * v2;
      for (const auto& [r, v] : acc)
        require(v == 0, ErrorKind::PostconditionFailed, "boundary of a boundary is nonzero");
    }
  }
  return out;
}

SmithForm smith_normal_form(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  SparseSnf snf(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require(m[r].size() == cols, ErrorKind::InvalidInput, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) snf.set(r, c, m[r][c]);
  }
  return snf.run();
}

SmithForm smith_normal_form(const SparseIntMatrix& m) {
  SparseSnf snf(m.rows, m.cols);
  for (std::size_t c = 0; c < m.columns.size(); ++c)
    for (const auto& [r, v] : m.columns[c]) snf.set(r, c, mpz_class(v));
  return snf.run();
}

std::size_t HomologyProfile::betti_at(int k) const {
  const auto idx = static_cast<std::size_t>(k + 1);
  return k >= -1 && idx < betti.size() ? betti[idx] : 0;
}

HomologyProfile reduced_homology(const SimplicialComplex& c, std::size_t face_budget) {
  const auto cx = boundary_matrices(c, face_budget);
  const std::size_t top = cx.faces.size();  // dimensions 0..top-1
  // ranks[k] = rank of d_k for k = 0..top, with d_0 the augmentation.
  std::vector<std::size_t> ranks(top + 2, 0);
  std::vector<std::vector<mpz_class>> factors(top + 2);
  if (top > 0) ranks[0] = 1;
  for (std::size_t k = 1; k < top; ++k) {
    auto snf = smith_normal_form(cx.boundary[k - 1]);
    ranks[k] = snf.rank;
    factors[k] = std::move(snf.diagonal);
  }
  HomologyProfile h;
  for (std::size_t dim = 0; dim <= top; ++dim) {
    // dim indexes k = dim - 1
    const std::size_t f = dim == 0 ? 1 : cx.faces[dim - 1].size();
    const std::size_t r_out = dim == 0 ? 0 : ranks[dim - 1];
    const std::size_t r_in = ranks[dim];
    h.betti.push_back(f - r_out - r_in);
    std::vector<mpz_class> tors;
    for (const auto& d : factors[dim])
      if (d > 1) tors.push_back(d);
    h.torsion.push_back(std::move(tors));
  }
  return h;
}

bool is_sphere_signature(const HomologyProfile& h, int d) {
  for (std::size_t idx = 0; idx < h.betti.size(); ++idx) {
    const int k = static_cast<int>(idx) - 1;
    if (!h.torsion[idx].empty()) return false;
    if (h.betti[idx] != (k == d ? 1u : 0u)) return false;
  }
  return d + 1 < static_cast<int>(h.betti.size()) && d >= -1;
}

std::optional<int> sphere_dimension(const HomologyProfile& h) {
  for (int d = -1; d + 1 < static_cast<int>(h.betti.size()); ++d)
    if (is_sphere_signature(h, d)) return d;
  return std::nullopt;
}

}  // namespace twistpos
