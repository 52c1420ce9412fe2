#include "qfam/family.hpp"

#include <sstream>

#include "qfam/linalg.hpp"

namespace qfam {

namespace {

void require_self_map(const QuantumFamily& psi, const char* where) {
  if (!psi.is_self_map()) {
    throw IncompatibleAlgebra(std::string(where) + ": family " + psi.source().to_string() + " -> " +
                              psi.target_factor().to_string() + " is not a self-map");
  }
}

}  // namespace

QuantumFamily::QuantumFamily(Algebra source, Algebra target_factor, Algebra label,
                             StarMorphism morphism, double tol)
    : source_(std::move(source)),
      layout_(std::move(target_factor), std::move(label)),
      morphism_(std::move(morphism)) {
  require_same_algebra(morphism_.domain(), source_, "family source");
  require_same_algebra(morphism_.codomain(), layout_.product(), "family codomain C⊗A");
  if (!morphism_.is_star_hom(tol)) {
    const auto& d = morphism_.defects();
    std::ostringstream os;
    os << "family morphism is not a *-homomorphism (mult " << d.mult << ", star " << d.star
       << ", unit " << d.unit << ", tol " << tol << ")";
    throw NotAHomomorphism(os.str());
  }
}

double QuantumFamily::norm() const {
  double best = 0.0;
  for (int i = 0; i < source_.dim(); ++i) best = std::max(best, morphism_.image(i).norm());
  return best;
}

QuantumFamily make_family(Algebra source, Algebra target_factor, Algebra label,
                          StarMorphism morphism, double tol) {
  return QuantumFamily(std::move(source), std::move(target_factor), std::move(label),
                       std::move(morphism), tol);
}

QuantumFamily trivial_family(const Algebra& source, const Algebra& label) {
  const TensorLayout layout(source, label);
  Matrix m = Matrix::Zero(layout.product().dim(), source.dim());
  for (int l = 0; l < label.num_blocks(); ++l) {
    for (int r = 0; r < label.block_dim(l); ++r) {
      const int unit = label.basis_index(l, r, r);
      for (int i = 0; i < source.dim(); ++i) m(layout.product_index(i, unit), i) = 1.0;
    }
  }
  return QuantumFamily(source, source, label, StarMorphism(source, layout.product(), std::move(m)));
}

QuantumFamily singleton_family(const StarMorphism& phi) {
  const TensorLayout layout(phi.codomain(), scalars());
  return QuantumFamily(phi.domain(), phi.codomain(), scalars(), with_codomain(phi, layout.product()));
}

QuantumFamily classical_family(const std::vector<SetMap>& tables) {
  if (tables.empty()) throw InvalidDimension("classical family needs at least one lookup table");
  const int n = static_cast<int>(tables.front().size());
  const Algebra points = commutative_algebra(n);
  const Algebra label = commutative_algebra(static_cast<int>(tables.size()));
  const TensorLayout layout(points, label);
  Matrix m = Matrix::Zero(layout.product().dim(), n);
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& f = tables[t];
    if (static_cast<int>(f.size()) != n) {
      throw InvalidDimension("lookup table " + std::to_string(t) + " has length " +
                             std::to_string(f.size()) + ", expected " + std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
      if (f[i] < 0 || f[i] >= n) {
        throw InvalidDimension("lookup table " + std::to_string(t) + " value out of range");
      }
      m(layout.product_index(i, static_cast<int>(t)), f[i]) = 1.0;
    }
  }
  return QuantumFamily(points, points, label, StarMorphism(points, layout.product(), std::move(m)));
}

QuantumFamily conjugation_family(const std::vector<Element>& unitaries) {
  if (unitaries.empty()) throw InvalidDimension("conjugation family needs at least one unitary");
  const Algebra m_alg = unitaries.front().algebra();
  const Algebra label = commutative_algebra(static_cast<int>(unitaries.size()));
  const TensorLayout layout(m_alg, label);
  Matrix m = Matrix::Zero(layout.product().dim(), m_alg.dim());
  for (int i = 0; i < m_alg.dim(); ++i) {
    const Element e = Element::matrix_unit(m_alg, i);
    for (std::size_t g = 0; g < unitaries.size(); ++g) {
      const Vector y = (unitaries[g] * e * unitaries[g].adjoint()).coords();
      for (int p = 0; p < m_alg.dim(); ++p) m(layout.product_index(p, static_cast<int>(g)), i) = y[p];
    }
  }
  return QuantumFamily(m_alg, m_alg, label, StarMorphism(m_alg, layout.product(), std::move(m)));
}

QuantumFamily compose_families(const QuantumFamily& first, const QuantumFamily& second) {
  require_same_algebra(second.target_factor(), first.source(), "family composition");
  const Algebra& d = first.target_factor();
  const Algebra& a1 = first.label();
  const Algebra& a2 = second.label();
  const StarMorphism lifted = tensor_morphisms(first.morphism(), identity_morphism(a2));
  const StarMorphism composed = compose_morphisms(lifted, second.morphism());

  const TensorLayout labels(a1, a2);
  const TensorLayout target(d, labels.product());
  const Matrix assoc = associator(d, a1, a2);
  Matrix m = assoc.isIdentity(0.0) ? composed.matrix() : Matrix(assoc * composed.matrix());
  return QuantumFamily(second.source(), d, labels.product(),
                       StarMorphism(second.source(), target.product(), std::move(m)));
}

double triviality_defect(const QuantumFamily& psi) {
  require_self_map(psi, "triviality defect");
  return basis_defect(psi.morphism(), trivial_family(psi.source(), psi.label()).morphism());
}

AlgebraMatrix action_coefficients(const QuantumFamily& psi, std::span<const Element> basis) {
  require_self_map(psi, "action coefficients");
  const Algebra& m_alg = psi.source();
  const int d = m_alg.dim();
  if (static_cast<int>(basis.size()) != d) {
    throw InvalidDimension("basis has " + std::to_string(basis.size()) + " elements, algebra has dimension " +
                           std::to_string(d));
  }
  Matrix change(d, d);
  for (int l = 0; l < d; ++l) change.col(l) = basis[l].coords();
  Eigen::FullPivLU<Matrix> lu(change);
  if (!lu.isInvertible()) throw DegenerateState("supplied elements do not form a basis");

  std::vector<Element> entries(static_cast<std::size_t>(d) * d, Element::zero(psi.label()));
  for (int l = 0; l < d; ++l) {
    const Matrix z = psi.layout().pair_coefficients(psi(basis[l]));
    const Matrix coeffs = lu.solve(z);  // row k: coordinates of a_{kl} in the label basis
    for (int k = 0; k < d; ++k) {
      entries[static_cast<std::size_t>(k) * d + l] =
          Element::from_coords(psi.label(), coeffs.row(k).transpose());
    }
  }
  return AlgebraMatrix(psi.label(), d, std::move(entries));
}

InvarianceReport invariance_defects(const QuantumFamily& psi, const LinearFunctional& omega) {
  require_self_map(psi, "invariance");
  require_same_algebra(psi.source(), omega.algebra(), "invariance functional");
  const Algebra& m_alg = psi.source();
  const Element one = Element::identity(psi.label());

  InvarianceReport report;
  for (int i = 0; i < m_alg.dim(); ++i) {
    const Element e = Element::matrix_unit(m_alg, i);
    const Element lhs = psi.layout().slice_left(omega, psi(e));
    report.defect = std::max(report.defect, (lhs - omega(e) * one).norm());
  }

  std::vector<Element> basis;
  if (omega.is_faithful()) {
    basis = orthonormal_basis(m_alg, omega);
    report.orthonormal_basis = true;
  } else {
    for (int i = 0; i < m_alg.dim(); ++i) basis.push_back(Element::matrix_unit(m_alg, i));
  }
  const AlgebraMatrix a = action_coefficients(psi, basis);
  const int d = m_alg.dim();
  for (int l = 0; l < d; ++l) {
    Element x = -omega(basis[l]) * one;
    for (int k = 0; k < d; ++k) x += omega(basis[k]) * a(k, l);
    report.generators.push_back(std::move(x));
  }
  return report;
}

double commutation_defect(const QuantumFamily& psi_b, const QuantumFamily& psi_c) {
  require_self_map(psi_b, "commutation");
  require_self_map(psi_c, "commutation");
  require_same_algebra(psi_b.source(), psi_c.source(), "commutation");
  const QuantumFamily bc = compose_families(psi_b, psi_c);  // labels B ⊗ C
  const QuantumFamily cb = compose_families(psi_c, psi_b);  // labels C ⊗ B
  const StarMorphism swap =
      tensor_morphisms(identity_morphism(psi_b.source()), flip(psi_b.label(), psi_c.label()));
  return basis_defect(compose_morphisms(swap, bc.morphism()), cb.morphism());
}

FixedPointSpace fixed_point_space(const QuantumFamily& psi, double rel_cut) {
  require_self_map(psi, "fixed points");
  const Matrix map =
      psi.morphism().matrix() - trivial_family(psi.source(), psi.label()).morphism().matrix();
  const Matrix kernel = null_space(map, rel_cut);
  FixedPointSpace out;
  out.dimension = static_cast<int>(kernel.cols());
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    out.basis.push_back(Element::from_coords(psi.source(), kernel.col(c)));
  }
  out.ergodic = out.dimension == 1;
  return out;
}

StarMorphism evaluate_at_character(const QuantumFamily& psi, const StarMorphism& lambda) {
  if (!(lambda.domain() == psi.label()) || !(lambda.codomain() == scalars())) {
    throw InvalidCharacter("functional on " + lambda.domain().to_string() +
                           " is not a character of the label " + psi.label().to_string());
  }
  if (!lambda.is_star_hom()) {
    throw InvalidCharacter("functional is not multiplicative (defect " +
                           std::to_string(lambda.defects().max()) + ")");
  }
  const StarMorphism slice = tensor_morphisms(identity_morphism(psi.target_factor()), lambda);
  return with_codomain(compose_morphisms(slice, psi.morphism()), psi.target_factor());
}

double factorization_defect(const QuantumFamily& phi, const StarMorphism& lambda,
                            const QuantumFamily& psi) {
  require_same_algebra(phi.source(), psi.source(), "factorization source");
  require_same_algebra(phi.target_factor(), psi.target_factor(), "factorization target");
  require_same_algebra(lambda.domain(), phi.label(), "factorization Λ domain");
  require_same_algebra(lambda.codomain(), psi.label(), "factorization Λ codomain");
  const StarMorphism lifted = tensor_morphisms(identity_morphism(phi.target_factor()), lambda);
  return basis_defect(compose_morphisms(lifted, phi.morphism()), psi.morphism());
}

}  // namespace qfam
