#include "qfam/semigroup.hpp"

#include <string>

#include "qfam/linalg.hpp"

namespace qfam {

QuantumSemigroup::QuantumSemigroup(Algebra algebra, StarMorphism comultiplication,
                                   std::optional<StarMorphism> counit)
    : layout_(algebra, algebra), delta_(std::move(comultiplication)), counit_(std::move(counit)) {
  require_same_algebra(delta_.domain(), layout_.left(), "comultiplication domain");
  require_same_algebra(delta_.codomain(), layout_.product(), "comultiplication codomain A⊗A");
  if (counit_) {
    require_same_algebra(counit_->domain(), layout_.left(), "counit domain");
    require_same_algebra(counit_->codomain(), scalars(), "counit codomain");
  }
}

double coassociativity_defect(const QuantumSemigroup& s) {
  const StarMorphism& delta = s.comultiplication();
  const StarMorphism id = identity_morphism(s.algebra());
  const StarMorphism left = compose_morphisms(tensor_morphisms(delta, id), delta);
  const StarMorphism right = compose_morphisms(tensor_morphisms(id, delta), delta);
  return basis_defect(with_codomain(left, right.codomain()), right);
}

double counit_defect(const QuantumSemigroup& s) {
  if (!s.counit()) throw MissingComponent("quantum semigroup has no counit");
  const StarMorphism& delta = s.comultiplication();
  const StarMorphism id = identity_morphism(s.algebra());
  const StarMorphism left = compose_morphisms(tensor_morphisms(*s.counit(), id), delta);
  const StarMorphism right = compose_morphisms(tensor_morphisms(id, *s.counit()), delta);
  return std::max(basis_defect(with_codomain(left, s.algebra()), id),
                  basis_defect(with_codomain(right, s.algebra()), id));
}

double action_defect(const QuantumFamily& psi, const QuantumSemigroup& s) {
  require_same_algebra(psi.label(), s.algebra(), "action label");
  if (!psi.is_self_map()) throw IncompatibleAlgebra("action must be a self-map family");
  const QuantumFamily twice = compose_families(psi, psi);
  const StarMorphism lifted = compose_morphisms(
      tensor_morphisms(identity_morphism(psi.source()), s.comultiplication()), psi.morphism());
  return basis_defect(twice.morphism(), with_codomain(lifted, twice.morphism().codomain()));
}

double qs_morphism_defect(const StarMorphism& lambda, const QuantumSemigroup& source,
                          const QuantumSemigroup& target) {
  require_same_algebra(lambda.domain(), source.algebra(), "semigroup morphism domain");
  require_same_algebra(lambda.codomain(), target.algebra(), "semigroup morphism codomain");
  const StarMorphism left =
      compose_morphisms(tensor_morphisms(lambda, lambda), source.comultiplication());
  const StarMorphism right = compose_morphisms(target.comultiplication(), lambda);
  return basis_defect(left, right);
}

LinearFunctional convolve(const LinearFunctional& phi, const LinearFunctional& psi,
                          const QuantumSemigroup& s) {
  require_same_algebra(phi.algebra(), s.algebra(), "convolution left factor");
  require_same_algebra(psi.algebra(), s.algebra(), "convolution right factor");
  const RowVector w = tensor(phi, psi).values() * s.comultiplication().matrix();
  return LinearFunctional::from_values(s.algebra(), w);
}

std::optional<int> find_identity(const MultiplicationTable& table) {
  const int n = static_cast<int>(table.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

QuantumSemigroup classical_semigroup_algebra(const MultiplicationTable& table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw InvalidSemigroup("empty multiplication table");
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(table[u].size()) != n) {
      throw InvalidSemigroup("table row " + std::to_string(u) + " has " +
                             std::to_string(table[u].size()) + " entries, expected " +
                             std::to_string(n));
    }
    for (int v = 0; v < n; ++v) {
      if (table[u][v] < 0 || table[u][v] >= n) {
        throw InvalidSemigroup("table entry (" + std::to_string(u) + "," + std::to_string(v) +
                               ") out of range");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (table[table[x][y]][z] != table[x][table[y][z]]) {
          throw InvalidSemigroup("table is not associative at (" + std::to_string(x) + "," +
                                 std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }

  const Algebra a = commutative_algebra(n);
  const TensorLayout aa(a, a);
  Matrix delta = Matrix::Zero(aa.product().dim(), n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) delta(aa.product_index(u, v), table[u][v]) = 1.0;
  }
  std::optional<StarMorphism> counit;
  if (const auto e = find_identity(table)) {
    Matrix row = Matrix::Zero(1, n);
    row(0, *e) = 1.0;
    counit = StarMorphism(a, scalars(), std::move(row));
  }
  return QuantumSemigroup(a, StarMorphism(a, aa.product(), std::move(delta)), std::move(counit));
}

Matrix cancellation_span(const QuantumSemigroup& s, Side side) {
  const Algebra& a = s.algebra();
  const TensorLayout& aa = s.layout();
  const int d = a.dim();
  std::vector<Element> images;
  images.reserve(d);
  for (int j = 0; j < d; ++j) images.push_back(s.delta(Element::matrix_unit(a, j)));

  Matrix span(aa.product().dim(), static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) {
    const Element e = Element::matrix_unit(a, i);
    for (int j = 0; j < d; ++j) {
      const Element v = side == Side::left ? aa.left_embed(e) * images[j]
                                           : images[i] * aa.right_embed(Element::matrix_unit(a, j));
      span.col(static_cast<Eigen::Index>(i) * d + j) = v.coords();
    }
  }
  return span;
}

RankReport cancellation_rank(const QuantumSemigroup& s, Side side, double rel_cut) {
  RankReport out;
  out.rank = numeric_rank(cancellation_span(s, side), rel_cut);
  out.ambient = s.layout().product().dim();
  out.full = out.rank == out.ambient;
  return out;
}

double coideal_defect(const QuantumFamily& psi, const QuantumSemigroup& s,
                      const LinearFunctional& omega) {
  require_same_algebra(psi.label(), s.algebra(), "coideal label");
  const InvarianceReport inv = invariance_defects(psi, omega);
  std::vector<Element> basis;
  if (inv.orthonormal_basis) {
    basis = orthonormal_basis(psi.source(), omega);
  } else {
    for (int i = 0; i < psi.source().dim(); ++i) basis.push_back(Element::matrix_unit(psi.source(), i));
  }
  const AlgebraMatrix a = action_coefficients(psi, basis);
  const TensorLayout& aa = s.layout();
  const auto& x = inv.generators;
  const int d = a.size();

  double worst = 0.0;
  for (int l = 0; l < d; ++l) {
    Element rhs = aa.right_embed(x[l]);
    for (int p = 0; p < d; ++p) rhs += aa.tensor(x[p], a(p, l));
    worst = std::max(worst, (s.delta(x[l]) - rhs).norm());
  }
  return worst;
}

bool classically_cancellative(const MultiplicationTable& table, Side side) {
  const auto n = table.size();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      const auto v = static_cast<std::size_t>(side == Side::left ? table[a][x] : table[x][a]);
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

std::vector<MultiplicationTable> associative_tables(int n) {
  if (n < 1) throw InvalidDimension("semigroup order must be positive");
  if (n > 3) throw ResourceLimit("associative table enumeration is capped at order 3");
  const int cells = n * n;
  int total = 1;
  for (int i = 0; i < cells; ++i) total *= n;
  std::vector<MultiplicationTable> out;
  MultiplicationTable t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int i = cells - 1; i >= 0; --i) {
      t[i / n][i % n] = c % n;
      c /= n;
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z) ok = t[t[x][y]][z] == t[x][t[y][z]];
    if (ok) out.push_back(t);
  }
  return out;
}

}  // namespace qfam
