#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twistpos {

using Rational = mpq_class;

/// Square matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t n);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t size() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  RatMatrix transpose() const;
  Rational determinant() const;
  /// Throws InvalidInput when singular.
  RatMatrix inverse() const;

  Rational minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  std::size_t rank(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool is_unit_lower() const;
  bool is_unit_upper() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

struct LduFactors {
  RatMatrix first;   // unit lower for ldu, unit upper for udl
  RatMatrix middle;  // diagonal
  RatMatrix last;    // unit upper for ldu, unit lower for udl
};

/// g = L D U. Empty when a leading principal minor vanishes.
std::optional<LduFactors> ldu(const RatMatrix& g);
/// g = U D L. Empty when a trailing principal minor vanishes.
std::optional<LduFactors> udl(const RatMatrix& g);

/// The unique representative of g B^+ in reduced column echelon form
/// (pivot 1 at the lowest possible row, zeros in earlier pivot rows).
RatMatrix canonical_flag(const RatMatrix& g);

std::string to_string(const Rational& q);
std::string to_string(const RatMatrix& m);

}  // namespace twistpos
