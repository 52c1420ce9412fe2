#include "qfam/representation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qfam/linalg.hpp"

namespace qfam {

double representation_defect(const Representation& v, const QuantumSemigroup& s) {
  require_same_algebra(v.algebra(), s.algebra(), "representation");
  const TensorLayout& aa = s.layout();
  const int n = v.size();
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      Element diff = s.delta(v(k, l));
      for (int r = 0; r < n; ++r) diff -= aa.tensor(v(k, r), v(r, l));
      worst = std::max(worst, diff.norm());
    }
  }
  return worst;
}

Representation tensor_representations(const Representation& v, const Representation& w) {
  require_same_algebra(v.algebra(), w.algebra(), "tensor of representations");
  const int n = v.size();
  const int k = w.size();
  std::vector<Element> entries;
  entries.reserve(static_cast<std::size_t>(n * k) * (n * k));
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < k; ++a) {
      for (int j = 0; j < n; ++j) {
        for (int b = 0; b < k; ++b) entries.push_back(v(i, j) * w(a, b));
      }
    }
  }
  return Representation(v.algebra(), n * k, std::move(entries));
}

double isometry_defect(const AlgebraMatrix& x) {
  return (x.adjoint() * x - AlgebraMatrix::identity(x.algebra(), x.size())).norm();
}

ActionMatrixReport action_matrix(const QuantumFamily& phi, const LinearFunctional& omega,
                                 const QuantumSemigroup* semigroup) {
  std::vector<Element> basis = orthonormal_basis(phi.source(), omega);
  AlgebraMatrix a = action_coefficients(phi, basis);
  ActionMatrixReport report{a, std::move(basis), isometry_defect(a), std::nullopt, std::nullopt,
                            std::nullopt};
  if (semigroup != nullptr) report.representation_defect = representation_defect(a, *semigroup);
  if (omega.is_trace()) {
    AlgebraMatrix b = a.entrywise_adjoint();
    report.adjoint_isometry_defect = isometry_defect(b);
    report.adjoint_entries = std::move(b);
  }
  return report;
}

MagicReport magic_unitary_check(const AlgebraMatrix& u, double tol) {
  const int n = u.size();
  const Element one = Element::identity(u.algebra());
  MagicReport r;
  for (const auto& a : u.entries()) {
    r.idempotent = std::max(r.idempotent, (a * a - a).norm());
    r.selfadjoint = std::max(r.selfadjoint, (a.adjoint() - a).norm());
  }
  for (int i = 0; i < n; ++i) {
    Element row = Element::zero(u.algebra());
    Element col = Element::zero(u.algebra());
    for (int j = 0; j < n; ++j) {
      row += u(i, j);
      col += u(j, i);
    }
    r.row_sum = std::max(r.row_sum, (row - one).norm());
    r.column_sum = std::max(r.column_sum, (col - one).norm());
  }
  const auto& e = u.entries();
  for (std::size_t x = 0; x < e.size(); ++x) {
    for (std::size_t y = x + 1; y < e.size(); ++y) {
      r.max_commutator = std::max(r.max_commutator, (e[x] * e[y] - e[y] * e[x]).norm());
    }
  }
  r.pass = r.max_defect() <= tol;
  return r;
}

MagicReport magic_unitary_check(const std::vector<std::vector<Element>>& rows, double tol) {
  return magic_unitary_check(AlgebraMatrix::from_rows(rows), tol);
}

ProjectionFamilyReport projection_family_check(std::span<const Element> projections) {
  if (projections.empty()) throw InvalidDimension("empty projection family");
  const Algebra& alg = projections.front().algebra();
  Element sum = Element::zero(alg);
  for (const auto& p : projections) sum += p;
  ProjectionFamilyReport r;
  r.sum_defect = (sum - Element::identity(alg)).norm();
  for (std::size_t k = 0; k < projections.size(); ++k) {
    for (std::size_t l = 0; l < projections.size(); ++l) {
      if (k == l) continue;
      r.orthogonality_defect =
          std::max(r.orthogonality_defect, (projections[k] * projections[l]).norm());
    }
  }
  return r;
}

QuantumFamily wang_family(const AlgebraMatrix& u, double tol) {
  const MagicReport check = magic_unitary_check(u, tol);
  if (!check.pass) {
    std::ostringstream os;
    os << "matrix is not a magic unitary (projection " << check.idempotent << ", self-adjoint "
       << check.selfadjoint << ", rows " << check.row_sum << ", columns " << check.column_sum
       << ")";
    throw NotMagic(os.str());
  }
  const int n = u.size();
  const Algebra points = commutative_algebra(n);
  const TensorLayout layout(points, u.algebra());
  Matrix m = Matrix::Zero(layout.product().dim(), n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vector c = u(i, j).coords();
      for (Eigen::Index q = 0; q < c.size(); ++q) m(layout.product_index(i, static_cast<int>(q)), j) = c[q];
    }
  }
  return QuantumFamily(points, points, u.algebra(),
                       StarMorphism(points, layout.product(), std::move(m)), tol);
}

AlgebraMatrix permutation_magic(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i) throw InvalidMatrix("not a permutation of 0..n-1");
  }
  const Algebra c = scalars();
  std::vector<Element> entries;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      entries.push_back(perm[j] == i ? Element::identity(c) : Element::zero(c));
    }
  }
  return AlgebraMatrix(c, n, std::move(entries));
}

NonclassicalMagic nonclassical_magic_4x4(double theta) {
  const Algebra m2({2});
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix p = Matrix::Zero(2, 2);
  p(0, 0) = 1.0;
  Matrix q(2, 2);
  q << c * c, c * s, c * s, s * s;
  const Matrix id = Matrix::Identity(2, 2);
  const Element ep(m2, {p});
  const Element ep_c(m2, {id - p});
  const Element eq(m2, {q});
  const Element eq_c(m2, {id - q});
  const Element z = Element::zero(m2);
  std::vector<Element> entries = {ep, ep_c, z, z,  ep_c, ep, z, z,
                                  z,  z,    eq, eq_c, z,  z,  eq_c, eq};
  const bool degenerate = !(theta > 0.0 && theta < std::numbers::pi / 2);
  return {AlgebraMatrix(m2, 4, std::move(entries)), degenerate};
}

Matrix modular_matrix(const Algebra& algebra, const LinearFunctional& omega,
                      std::span<const Element> basis) {
  const Matrix sigma = sigma_map(algebra, omega);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Matrix s(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Element image = apply_linear(algebra, sigma, basis[i]);
    for (Eigen::Index p = 0; p < n; ++p) s(i, p) = omega(basis[p].adjoint() * image);
  }
  return s;
}

ModularReport modular_compatibility(const QuantumFamily& phi, const LinearFunctional& omega,
                                    double tol) {
  if (!phi.is_self_map()) throw IncompatibleAlgebra("modular check needs a self-map family");
  if (!omega.is_faithful()) {
    throw PreconditionViolated("faithful: min density eigenvalue " +
                               std::to_string(omega.min_density_eigenvalue()));
  }
  if (!omega.is_state(tol)) throw PreconditionViolated("state: functional is not a state");
  const double inv = invariance_defects(phi, omega).defect;
  if (inv > tol) {
    throw PreconditionViolated("invariant: invariance defect " + std::to_string(inv) +
                               " exceeds tol " + std::to_string(tol));
  }
  const std::vector<Element> basis = orthonormal_basis(phi.source(), omega);
  const AlgebraMatrix a = action_coefficients(phi, basis);
  const Matrix s = modular_matrix(phi.source(), omega, basis);
  const AlgebraMatrix abar = a.entrywise_adjoint();
  const AlgebraMatrix s_i = AlgebraMatrix::scalar(a.algebra(), s);
  const AlgebraMatrix twisted = abar.adjoint() * s_i * abar;

  ModularReport r{0.0, 0.0, 0.0, s, abar};
  r.defect = (s_i - twisted).norm();
  const AlgebraMatrix s_inv = AlgebraMatrix::scalar(a.algebra(), s.inverse());
  r.left_inverse_defect =
      (s_inv * twisted - AlgebraMatrix::identity(a.algebra(), a.size())).norm();
  r.abar_isometry_defect = isometry_defect(abar);
  return r;
}

double modular_compatibility_defect(const QuantumFamily& phi, const LinearFunctional& omega,
                                    double tol) {
  return modular_compatibility(phi, omega, tol).defect;
}

Matrix podles_span(const QuantumFamily& phi) {
  const Algebra& m_alg = phi.source();
  const Algebra& b = phi.label();
  const TensorLayout& layout = phi.layout();
  Matrix span(layout.product().dim(), static_cast<Eigen::Index>(m_alg.dim()) * b.dim());
  for (int i = 0; i < m_alg.dim(); ++i) {
    const Element image = phi.morphism().image(i);
    for (int j = 0; j < b.dim(); ++j) {
      span.col(static_cast<Eigen::Index>(i) * b.dim() + j) =
          (image * layout.right_embed(Element::matrix_unit(b, j))).coords();
    }
  }
  return span;
}

RankReport podles_rank(const QuantumFamily& phi, double rel_cut) {
  RankReport r;
  r.rank = numeric_rank(podles_span(phi), rel_cut);
  r.ambient = phi.layout().product().dim();
  r.full = r.rank == r.ambient;
  return r;
}

}  // namespace qfam
