#pragma once

#include <vector>

#include "qfam/algebra.hpp"

namespace qfam {

// An n×n matrix whose entries live in one algebra B, i.e. an element of
// M_n ⊗ B. Used for action matrices, representations and magic unitaries.
class AlgebraMatrix {
 public:
  // Row-major entries; throws InvalidMatrix unless entries.size() == n².
  AlgebraMatrix(Algebra algebra, int n, std::vector<Element> entries);
  // Throws InvalidMatrix for ragged input.
  static AlgebraMatrix from_rows(const std::vector<std::vector<Element>>& rows);

  static AlgebraMatrix identity(const Algebra& algebra, int n);
  // S ⊗ I: entries s_{ij} I.
  static AlgebraMatrix scalar(const Algebra& algebra, const Matrix& s);

  const Algebra& algebra() const noexcept { return algebra_; }
  int size() const noexcept { return n_; }
  const Element& operator()(int i, int j) const { return entries_.at(static_cast<std::size_t>(i) * n_ + j); }
  const std::vector<Element>& entries() const noexcept { return entries_; }

  // Matrix adjoint: (X*)_{ij} = (X_{ji})*.
  AlgebraMatrix adjoint() const;
  // Entrywise adjoint without transposition: (X̄)_{ij} = (X_{ij})*.
  AlgebraMatrix entrywise_adjoint() const;
  AlgebraMatrix transpose() const;

  // C*-norm in M_n ⊗ B: for each block of B, the operator norm of the
  // assembled (n·n_k)×(n·n_k) matrix.
  double norm() const;

  friend AlgebraMatrix operator*(const AlgebraMatrix& x, const AlgebraMatrix& y);
  friend AlgebraMatrix operator-(const AlgebraMatrix& x, const AlgebraMatrix& y);
  friend AlgebraMatrix operator+(const AlgebraMatrix& x, const AlgebraMatrix& y);

 private:
  Algebra algebra_;
  int n_;
  std::vector<Element> entries_;
};

}  // namespace qfam
