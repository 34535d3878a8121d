#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twistpos {

/// Symmetrizable generalized Cartan matrix. Construction validates the GCM
/// axioms and finds a symmetrizer, or throws `InvalidInput`.
class CartanMatrix {
 public:
  explicit CartanMatrix(const std::vector<std::vector<int>>& rows);

  static CartanMatrix type_A(std::size_t rank);
  static CartanMatrix type_B(std::size_t rank);
  static CartanMatrix type_G2();
  static CartanMatrix affine_A1();

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  /// Positive rationals d with d_i a_ij = d_j a_ji, normalized so that the
  /// first node of every connected component has d = 1.
  const std::vector<mpq_class>& symmetrizer() const noexcept { return symmetrizer_; }

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<int> entries_;
  std::vector<mpq_class> symmetrizer_;
};

std::string to_string(const CartanMatrix& a);

}  // namespace twistpos
