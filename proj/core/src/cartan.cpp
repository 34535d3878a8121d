#include "twistpos/cartan.hpp"

#include <queue>
#include <sstream>

#include "twistpos/error.hpp"

namespace twistpos {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MismatchedGroup: return "MismatchedGroup";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CorruptedElement: return "CorruptedElement";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::AmbiguousMinimum: return "AmbiguousMinimum";
    case ErrorKind::IncomparablePair: return "IncomparablePair";
    case ErrorKind::NotLeq: return "NotLeq";
    case ErrorKind::NonReducedWord: return "NonReducedWord";
    case ErrorKind::MissingReflection: return "MissingReflection";
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::NonpositiveParameter: return "NonpositiveParameter";
    case ErrorKind::DecompositionFails: return "DecompositionFails";
    case ErrorKind::PatternViolation: return "PatternViolation";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

CartanMatrix::CartanMatrix(const std::vector<std::vector<int>>& rows) : n_(rows.size()) {
  require(n_ > 0, ErrorKind::InvalidInput, "Cartan matrix must have at least one node");
  require(n_ <= 64, ErrorKind::InvalidInput, "Cartan matrix rank above 64 is not supported");
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    require(row.size() == n_, ErrorKind::InvalidInput, "Cartan matrix must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < n_; ++i) {
    require((*this)(i, i) == 2, ErrorKind::InvalidInput,
            "diagonal entry " + std::to_string(i) + " is not 2");
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j) continue;
      require((*this)(i, j) <= 0, ErrorKind::InvalidInput, "positive off-diagonal entry");
      require(((*this)(i, j) == 0) == ((*this)(j, i) == 0), ErrorKind::InvalidInput,
              "asymmetric zero pattern at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  // Propagate d_j = d_i a_ij / a_ji along the Dynkin graph, then check every edge.
  symmetrizer_.assign(n_, mpq_class(0));
  for (std::size_t root = 0; root < n_; ++root) {
    if (symmetrizer_[root] != 0) continue;
    symmetrizer_[root] = 1;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop();
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j || (*this)(i, j) == 0 || symmetrizer_[j] != 0) continue;
        symmetrizer_[j] = symmetrizer_[i] * (*this)(i, j) / mpq_class((*this)(j, i));
        todo.push(j);
      }
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      require(symmetrizer_[i] * (*this)(i, j) == symmetrizer_[j] * (*this)(j, i),
              ErrorKind::InvalidInput, "Cartan matrix is not symmetrizable");
    }
  }
}

CartanMatrix CartanMatrix::type_A(std::size_t rank) {
  std::vector<std::vector<int>> rows(rank, std::vector<int>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    rows[i][i] = 2;
    if (i + 1 < rank) rows[i][i + 1] = rows[i + 1][i] = -1;
  }
  return CartanMatrix(rows);
}

CartanMatrix CartanMatrix::type_B(std::size_t rank) {
  auto rows = type_A(rank).rows();
  if (rank >= 2) rows[rank - 2][rank - 1] = -2;
  return CartanMatrix(rows);
}

CartanMatrix CartanMatrix::type_G2() { return CartanMatrix({{2, -1}, {-3, 2}}); }

CartanMatrix CartanMatrix::affine_A1() { return CartanMatrix({{2, -2}, {-2, 2}}); }

std::vector<std::vector<int>> CartanMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::string to_string(const CartanMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) os << ',';
      os << a(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace twistpos
