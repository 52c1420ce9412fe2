#include "qfam/algebra_matrix.hpp"

#include <string>

namespace qfam {

AlgebraMatrix::AlgebraMatrix(Algebra algebra, int n, std::vector<Element> entries)
    : algebra_(std::move(algebra)), n_(n), entries_(std::move(entries)) {
  if (n_ < 1 || entries_.size() != static_cast<std::size_t>(n_) * n_) {
    throw InvalidMatrix("matrix over algebra needs " + std::to_string(n_) + "x" +
                        std::to_string(n_) + " entries, got " + std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) require_same_algebra(algebra_, e.algebra(), "matrix entry");
}

AlgebraMatrix AlgebraMatrix::from_rows(const std::vector<std::vector<Element>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidMatrix("empty matrix over algebra");
  const auto n = rows.size();
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InvalidMatrix("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                          " entries, expected " + std::to_string(n));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  const Algebra alg = entries.front().algebra();
  return AlgebraMatrix(alg, static_cast<int>(n), std::move(entries));
}

AlgebraMatrix AlgebraMatrix::identity(const Algebra& algebra, int n) {
  return scalar(algebra, Matrix::Identity(n, n));
}

AlgebraMatrix AlgebraMatrix::scalar(const Algebra& algebra, const Matrix& s) {
  if (s.rows() != s.cols()) throw InvalidMatrix("scalar matrix must be square");
  const int n = static_cast<int>(s.rows());
  const Element one = Element::identity(algebra);
  std::vector<Element> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) entries.push_back(s(i, j) * one);
  }
  return AlgebraMatrix(algebra, n, std::move(entries));
}

AlgebraMatrix AlgebraMatrix::adjoint() const {
  std::vector<Element> out;
  out.reserve(entries_.size());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.push_back((*this)(j, i).adjoint());
  }
  return AlgebraMatrix(algebra_, n_, std::move(out));
}

AlgebraMatrix AlgebraMatrix::entrywise_adjoint() const {
  std::vector<Element> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.adjoint());
  return AlgebraMatrix(algebra_, n_, std::move(out));
}

AlgebraMatrix AlgebraMatrix::transpose() const {
  std::vector<Element> out;
  out.reserve(entries_.size());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.push_back((*this)(j, i));
  }
  return AlgebraMatrix(algebra_, n_, std::move(out));
}

double AlgebraMatrix::norm() const {
  double best = 0.0;
  for (int k = 0; k < algebra_.num_blocks(); ++k) {
    const int m = algebra_.block_dim(k);
    Matrix big(n_ * m, n_ * m);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) big.block(i * m, j * m, m, m) = (*this)(i, j).block(k);
    }
    best = std::max(best, operator_norm(big));
  }
  return best;
}

AlgebraMatrix operator*(const AlgebraMatrix& x, const AlgebraMatrix& y) {
  require_same_algebra(x.algebra_, y.algebra_, "algebra matrix product");
  if (x.n_ != y.n_) throw IncompatibleAlgebra("algebra matrix sizes differ");
  const int n = x.n_;
  std::vector<Element> out;
  out.reserve(x.entries_.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Element acc = Element::zero(x.algebra_);
      for (int r = 0; r < n; ++r) acc += x(i, r) * y(r, j);
      out.push_back(std::move(acc));
    }
  }
  return AlgebraMatrix(x.algebra_, n, std::move(out));
}

namespace {
template <typename Op>
AlgebraMatrix entrywise(const AlgebraMatrix& x, const AlgebraMatrix& y, Op op) {
  require_same_algebra(x.algebra(), y.algebra(), "algebra matrix sum");
  if (x.size() != y.size()) throw IncompatibleAlgebra("algebra matrix sizes differ");
  std::vector<Element> out;
  out.reserve(x.entries().size());
  for (std::size_t i = 0; i < x.entries().size(); ++i) out.push_back(op(x.entries()[i], y.entries()[i]));
  return AlgebraMatrix(x.algebra(), x.size(), std::move(out));
}
}  // namespace

AlgebraMatrix operator-(const AlgebraMatrix& x, const AlgebraMatrix& y) {
  return entrywise(x, y, [](const Element& a, const Element& b) { return a - b; });
}

AlgebraMatrix operator+(const AlgebraMatrix& x, const AlgebraMatrix& y) {
  return entrywise(x, y, [](const Element& a, const Element& b) { return a + b; });
}

}  // namespace qfam
