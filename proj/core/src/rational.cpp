#include "twistpos/rational.hpp"

#include "twistpos/error.hpp"

namespace twistpos {

RatMatrix::RatMatrix(std::size_t n) : n_(n), a_(n * n) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RatMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == rows.size(), ErrorKind::InvalidInput, "matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  require(n_ == o.n_, ErrorKind::InvalidInput, "matrix size mismatch");
  RatMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const auto& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const auto& b = o(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

namespace {

// Row-reduces m (rows x cols, row-major) in place; returns rank and the determinant
// of the leading square part when square.
std::size_t eliminate(std::vector<Rational>& m, std::size_t rows, std::size_t cols, Rational* det) {
  std::size_t rank = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && sgn(m[p * cols + c]) == 0) ++p;
    if (p == rows) {
      d = 0;
      continue;
    }
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[p * cols + j], m[rank * cols + j]);
      d = -d;
    }
    const Rational piv = m[rank * cols + c];
    d *= piv;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (sgn(m[i * cols + c]) == 0) continue;
      const Rational f = m[i * cols + c] / piv;
      for (std::size_t j = c; j < cols; ++j) m[i * cols + j] -= f * m[rank * cols + j];
    }
    ++rank;
  }
  if (det) *det = rank == rows && rows == cols ? d : Rational(0);
  return rank;
}

}  // namespace

Rational RatMatrix::determinant() const {
  auto m = a_;
  Rational d;
  eliminate(m, n_, n_, &d);
  return d;
}

RatMatrix RatMatrix::inverse() const {
  const std::size_t w = 2 * n_;
  std::vector<Rational> m(n_ * w);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m[i * w + j] = (*this)(i, j);
    m[i * w + n_ + i] = 1;
  }
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && sgn(m[p * w + c]) == 0) ++p;
    require(p < n_, ErrorKind::InvalidInput, "singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < w; ++j) std::swap(m[p * w + j], m[c * w + j]);
    const Rational piv = m[c * w + c];
    for (std::size_t j = 0; j < w; ++j) m[c * w + j] /= piv;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c || sgn(m[i * w + c]) == 0) continue;
      const Rational f = m[i * w + c];
      for (std::size_t j = 0; j < w; ++j) m[i * w + j] -= f * m[c * w + j];
    }
  }
  RatMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = m[i * w + n_ + j];
  return out;
}

Rational RatMatrix::minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  require(rows.size() == cols.size(), ErrorKind::InvalidInput, "minor needs a square selection");
  std::vector<Rational> m;
  m.reserve(rows.size() * cols.size());
  for (auto r : rows)
    for (auto c : cols) m.push_back((*this)(r, c));
  Rational d;
  eliminate(m, rows.size(), cols.size(), &d);
  return rows.empty() ? Rational(1) : d;
}

std::size_t RatMatrix::rank(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::vector<Rational> m;
  for (auto r : rows)
    for (auto c : cols) m.push_back((*this)(r, c));
  return eliminate(m, rows.size(), cols.size(), nullptr);
}

bool RatMatrix::is_unit_lower() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  }
  return true;
}

bool RatMatrix::is_unit_upper() const { return transpose().is_unit_lower(); }

std::optional<LduFactors> ldu(const RatMatrix& g) {
  const auto n = g.size();
  RatMatrix u = g;
  RatMatrix l = RatMatrix::identity(n);
  RatMatrix d(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(u(k, k)) == 0) return std::nullopt;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(u(i, k)) == 0) continue;
      const Rational f = u(i, k) / u(k, k);
      l(i, k) = f;
      for (std::size_t j = k; j < n; ++j) u(i, j) -= f * u(k, j);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    d(k, k) = u(k, k);
    const Rational p = u(k, k);
    for (std::size_t j = k; j < n; ++j) u(k, j) /= p;
  }
  return LduFactors{std::move(l), std::move(d), std::move(u)};
}

std::optional<LduFactors> udl(const RatMatrix& g) {
  const auto n = g.size();
  auto flip = [n](const RatMatrix& m) {
    RatMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(n - 1 - i, n - 1 - j) = m(i, j);
    return out;
  };
  auto f = ldu(flip(g));
  if (!f) return std::nullopt;
  return LduFactors{flip(f->first), flip(f->middle), flip(f->last)};
}

RatMatrix canonical_flag(const RatMatrix& g) {
  const auto n = g.size();
  RatMatrix m = g;
  std::vector<std::size_t> pivots;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      const Rational f = m(pivots[k], j);
      if (sgn(f) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) m(i, j) -= f * m(i, k);
    }
    std::size_t p = n;
    for (std::size_t i = n; i-- > 0;) {
      if (sgn(m(i, j)) != 0) {
        p = i;
        break;
      }
    }
    require(p < n, ErrorKind::InvalidInput, "singular matrix has no flag");
    const Rational s = m(p, j);
    for (std::size_t i = 0; i < n; ++i) m(i, j) /= s;
    pivots.push_back(p);
  }
  return m;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RatMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.size(); ++j) out += (j ? "," : "") + to_string(m(i, j));
    out += "]";
  }
  return out + "]";
}

}  // namespace twistpos
