#include "qfam/linalg.hpp"

namespace qfam {

namespace {

int rank_from_singular_values(const Eigen::VectorXd& sv, double rel_cut) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = rel_cut * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) >= cut) ++rank;
  }
  return rank;
}

}  // namespace

int numeric_rank(const Matrix& m, double rel_cut) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(m);
  return rank_from_singular_values(svd.singularValues(), rel_cut);
}

Matrix null_space(const Matrix& m, double rel_cut) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return Matrix::Identity(n, n);
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const int rank = rank_from_singular_values(svd.singularValues(), rel_cut);
  return svd.matrixV().rightCols(n - rank);
}

double span_residual(const Matrix& span, const Vector& v, double rel_cut) {
  if (span.cols() == 0) return v.norm();
  Eigen::BDCSVD<Matrix> svd(span, Eigen::ComputeThinU);
  const int rank = rank_from_singular_values(svd.singularValues(), rel_cut);
  const Matrix u = svd.matrixU().leftCols(rank);
  return (v - u * (u.adjoint() * v)).norm();
}

}  // namespace qfam
