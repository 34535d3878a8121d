#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "twistpos/poset.hpp"

namespace twistpos {

constexpr std::size_t kDefaultFaceBudget = 50000;

/// Integer matrix stored by columns as (row, value) pairs.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, long>>> columns;
};

struct ChainComplexZ {
  /// faces[k] lists the k-dimensional faces as sorted vertex tuples, sorted.
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  /// boundary[k - 1] is d_k : C_k -> C_{k-1} for k >= 1.
  std::vector<SparseIntMatrix> boundary;
};

/// Throws BudgetExceeded when the complex has more than `face_budget` faces.
ChainComplexZ boundary_matrices(const SimplicialComplex& c, std::size_t face_budget = kDefaultFaceBudget);

struct SmithForm {
  std::vector<mpz_class> diagonal;  // nonzero invariant factors, d_1 | d_2 | ...
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const std::vector<std::vector<mpz_class>>& m);
SmithForm smith_normal_form(const SparseIntMatrix& m);

struct HomologyProfile {
  /// betti[k + 1] and torsion[k + 1] describe reduced homology in dimension k >= -1.
  std::vector<std::size_t> betti;
  std::vector<std::vector<mpz_class>> torsion;
  bool reduced = true;

  std::size_t betti_at(int k) const;
};

HomologyProfile reduced_homology(const SimplicialComplex& c, std::size_t face_budget = kDefaultFaceBudget);

/// Reduced homology is Z in dimension d and zero elsewhere. d = -1 is the empty complex.
bool is_sphere_signature(const HomologyProfile& h, int d);

/// The unique d with a sphere signature, if any.
std::optional<int> sphere_dimension(const HomologyProfile& h);

}  // namespace twistpos
