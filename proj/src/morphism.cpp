#include "qfam/morphism.hpp"

#include <string>

namespace qfam {

StarMorphism::StarMorphism(Algebra domain, Algebra codomain, Matrix map_matrix)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      matrix_(std::move(map_matrix)),
      cache_(std::make_shared<Cache>()) {
  if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim()) {
    throw InvalidMatrix("morphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                        std::to_string(matrix_.cols()) + ", expected " +
                        std::to_string(codomain_.dim()) + "x" + std::to_string(domain_.dim()));
  }
}

Element StarMorphism::operator()(const Element& x) const {
  require_same_algebra(domain_, x.algebra(), "morphism application");
  return Element::from_coords(codomain_, matrix_ * x.coords());
}

Element StarMorphism::image(int index) const {
  return Element::from_coords(codomain_, matrix_.col(index));
}

const DefectReport& StarMorphism::defects() const {
  std::call_once(cache_->once, [this] {
    const int d = domain_.dim();
    std::vector<Element> img;
    img.reserve(d);
    for (int i = 0; i < d; ++i) img.push_back(image(i));

    DefectReport rep;
    for (int i = 0; i < d; ++i) {
      const auto [k, r, s] = domain_.basis_label(i);
      for (int j = 0; j < d; ++j) {
        const auto [l, t, u] = domain_.basis_label(j);
        Element diff = img[i] * img[j];
        // E_{rs} E_{tu} = δ_{st} E_{ru} within one block, zero across blocks
        if (k == l && s == t) diff -= img[domain_.basis_index(k, r, u)];
        rep.mult = std::max(rep.mult, diff.norm());
      }
      rep.star = std::max(rep.star, (img[domain_.basis_index(k, s, r)] - img[i].adjoint()).norm());
    }
    Element unit = Element::zero(codomain_);
    for (int k = 0; k < domain_.num_blocks(); ++k) {
      for (int r = 0; r < domain_.block_dim(k); ++r) unit += img[domain_.basis_index(k, r, r)];
    }
    rep.unit = (unit - Element::identity(codomain_)).norm();
    cache_->report = rep;
  });
  return cache_->report;
}

VerifiedMorphism make_and_verify_morphism(Algebra domain, Algebra codomain, Matrix map_matrix,
                                          double tol) {
  StarMorphism phi(std::move(domain), std::move(codomain), std::move(map_matrix));
  const bool ok = phi.is_star_hom(tol);
  return {std::move(phi), ok};
}

StarMorphism identity_morphism(const Algebra& algebra) {
  return StarMorphism(algebra, algebra, Matrix::Identity(algebra.dim(), algebra.dim()));
}

StarMorphism compose_morphisms(const StarMorphism& phi, const StarMorphism& psi) {
  require_same_algebra(psi.codomain(), phi.domain(), "morphism composition");
  return StarMorphism(psi.domain(), phi.codomain(), phi.matrix() * psi.matrix());
}

StarMorphism tensor_morphisms(const StarMorphism& phi, const StarMorphism& psi) {
  const TensorLayout in(phi.domain(), psi.domain());
  const TensorLayout out(phi.codomain(), psi.codomain());
  Matrix m = Matrix::Zero(out.product().dim(), in.product().dim());
  const Matrix& a = phi.matrix();
  const Matrix& b = psi.matrix();
  for (Eigen::Index i = 0; i < a.cols(); ++i) {
    for (Eigen::Index p = 0; p < a.rows(); ++p) {
      const Complex apx = a(p, i);
      if (apx == Complex(0.0)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const int col = in.product_index(static_cast<int>(i), static_cast<int>(j));
        for (Eigen::Index q = 0; q < b.rows(); ++q) {
          const Complex bqj = b(q, j);
          if (bqj == Complex(0.0)) continue;
          m(out.product_index(static_cast<int>(p), static_cast<int>(q)), col) += apx * bqj;
        }
      }
    }
  }
  return StarMorphism(in.product(), out.product(), std::move(m));
}

StarMorphism with_codomain(const StarMorphism& phi, const Algebra& codomain) {
  if (!(phi.codomain().block_dims() == codomain.block_dims())) {
    throw IncompatibleAlgebra("codomain " + codomain.to_string() + " does not share the basis of " +
                              phi.codomain().to_string());
  }
  return StarMorphism(phi.domain(), codomain, phi.matrix());
}

double basis_defect(const StarMorphism& lhs, const StarMorphism& rhs) {
  require_same_algebra(lhs.domain(), rhs.domain(), "basis defect domain");
  require_same_algebra(lhs.codomain(), rhs.codomain(), "basis defect codomain");
  const Matrix diff = lhs.matrix() - rhs.matrix();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < diff.cols(); ++i) {
    worst = std::max(worst, Element::from_coords(lhs.codomain(), diff.col(i)).norm());
  }
  return worst;
}

StarMorphism flip(const Algebra& b, const Algebra& c) {
  const TensorLayout bc(b, c);
  const TensorLayout cb(c, b);
  Matrix m = Matrix::Zero(cb.product().dim(), bc.product().dim());
  for (int i = 0; i < b.dim(); ++i) {
    for (int j = 0; j < c.dim(); ++j) m(cb.product_index(j, i), bc.product_index(i, j)) = 1.0;
  }
  return StarMorphism(bc.product(), cb.product(), std::move(m));
}

Matrix associator(const Algebra& a, const Algebra& b, const Algebra& c) {
  const TensorLayout ab(a, b);
  const TensorLayout ab_c(ab.product(), c);
  const TensorLayout bc(b, c);
  const TensorLayout a_bc(a, bc.product());
  if (!(ab_c.product() == a_bc.product())) {
    throw IncompatibleAlgebra("associator: product algebras differ");
  }
  Matrix p = Matrix::Zero(a_bc.product().dim(), ab_c.product().dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) {
      for (int k = 0; k < c.dim(); ++k) {
        p(a_bc.product_index(i, bc.product_index(j, k)), ab_c.product_index(ab.product_index(i, j), k)) =
            1.0;
      }
    }
  }
  return p;
}

LinearFunctional Character::functional() const { return morphism_as_functional(morphism); }

std::vector<Character> characters_of(const Algebra& algebra) {
  std::vector<Character> out;
  for (int k = 0; k < algebra.num_blocks(); ++k) {
    if (algebra.block_dim(k) != 1) continue;
    Matrix row = Matrix::Zero(1, algebra.dim());
    row(0, algebra.block_offset(k)) = 1.0;
    out.push_back({k, StarMorphism(algebra, scalars(), std::move(row))});
  }
  return out;
}

StarMorphism functional_as_morphism(const LinearFunctional& phi) {
  return StarMorphism(phi.algebra(), scalars(), Matrix(phi.values()));
}

LinearFunctional morphism_as_functional(const StarMorphism& phi) {
  require_same_algebra(phi.codomain(), scalars(), "morphism as functional");
  return LinearFunctional::from_values(phi.domain(), phi.matrix().row(0));
}

StarMorphism set_map_morphism(const SetMap& f) {
  const int n = static_cast<int>(f.size());
  if (n < 1) throw InvalidDimension("set map on the empty set");
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (f[i] < 0 || f[i] >= n) {
      throw InvalidDimension("set map value " + std::to_string(f[i]) + " out of range");
    }
    m(i, f[i]) = 1.0;
  }
  const Algebra cn = commutative_algebra(n);
  return StarMorphism(cn, cn, std::move(m));
}

std::vector<SetMap> enumerate_set_map_tables(int n, int cap) {
  if (n < 1) throw InvalidDimension("set size must be positive");
  if (n > cap) {
    throw ResourceLimit("enumerating set maps on " + std::to_string(n) + " points exceeds cap " +
                        std::to_string(cap));
  }
  std::vector<SetMap> tables;
  SetMap f(static_cast<std::size_t>(n), 0);
  while (true) {
    tables.push_back(f);
    int pos = n - 1;
    while (pos >= 0 && f[pos] == n - 1) f[pos--] = 0;
    if (pos < 0) break;
    ++f[pos];
  }
  return tables;
}

std::vector<StarMorphism> enumerate_set_maps(int n, int cap) {
  std::vector<StarMorphism> out;
  for (const auto& f : enumerate_set_map_tables(n, cap)) out.push_back(set_map_morphism(f));
  return out;
}

}  // namespace qfam
