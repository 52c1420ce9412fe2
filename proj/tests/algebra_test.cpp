#include <gtest/gtest.h>

#include <cmath>

#include "qfam/algebra.hpp"
#include "qfam/corpus.hpp"
#include "qfam/errors.hpp"
#include "qfam/random.hpp"
#include "support/oracles.hpp"

using namespace qfam;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(MakeAlgebra, SingleBlock) {
  const Algebra a = make_algebra({2});
  EXPECT_EQ(a.dim(), 4);
  EXPECT_EQ(a.num_blocks(), 1);
  EXPECT_FALSE(a.is_commutative());
}

TEST(MakeAlgebra, TwoPointSpace) {
  const Algebra a = make_algebra({1, 1});
  EXPECT_EQ(a.dim(), 2);
  EXPECT_TRUE(a.is_commutative());
}

TEST(MakeAlgebra, RejectsBadDims) {
  EXPECT_THROW(make_algebra({}), InvalidDimension);
  EXPECT_THROW(make_algebra({2, 0}), InvalidDimension);
  EXPECT_THROW(make_algebra({-1}), InvalidDimension);
}

TEST(MakeAlgebra, CanonicalBasisIsLexOrdered) {
  const Algebra a({2, 1, 3});
  EXPECT_EQ(a.dim(), 4 + 1 + 9);
  int expected = 0;
  for (int k = 0; k < a.num_blocks(); ++k) {
    for (int r = 0; r < a.block_dim(k); ++r) {
      for (int s = 0; s < a.block_dim(k); ++s) {
        EXPECT_EQ(a.basis_index(k, r, s), expected);
        EXPECT_EQ(a.basis_label(expected), (BasisLabel{k, r, s}));
        ++expected;
      }
    }
  }
}

TEST(ElementArithmetic, UnitLaw) {
  Rng rng(1);
  const Algebra a({2, 1});
  const Element x = random_element(a, rng);
  const Element i = Element::identity(a);
  EXPECT_EQ(max_abs((i * x - x).coords()), 0.0);
  EXPECT_EQ(max_abs((x * i - x).coords()), 0.0);
}

TEST(ElementArithmetic, AdjointIsInvolution) {
  Rng rng(2);
  const Algebra a({2, 1});
  const Element x = random_element(a, rng);
  EXPECT_EQ(max_abs((x.adjoint().adjoint() - x).coords()), 0.0);
}

TEST(ElementArithmetic, AdjointReversesProducts) {
  Rng rng(3);
  const Algebra a({3, 1, 2});
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Element x = random_element(a, rng);
    const Element y = random_element(a, rng);
    worst = std::max(worst, ((x * y).adjoint() - y.adjoint() * x.adjoint()).norm());
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(ElementArithmetic, MismatchedAlgebras) {
  const Element x = Element::identity(Algebra({2}));
  const Element y = Element::identity(Algebra({1, 1}));
  EXPECT_THROW(x + y, IncompatibleAlgebra);
  EXPECT_THROW(x * y, IncompatibleAlgebra);
}

TEST(OperatorNorm, Examples) {
  EXPECT_DOUBLE_EQ(Element::identity(Algebra({3})).norm(), 1.0);
  const Algebra c2 = commutative_algebra(2);
  Vector v(2);
  v << 3.0, -4.0;
  EXPECT_DOUBLE_EQ(Element::from_coords(c2, v).norm(), 4.0);
  const Algebra m2({2});
  EXPECT_NEAR(Element::matrix_unit(m2, m2.basis_index(0, 0, 1)).norm(), 1.0, 1e-15);
}

TEST(OperatorNorm, AgreesWithEigenvalueOracle) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const Algebra a = random_algebra(3, 4, rng);
    const Element x = random_element(a, rng);
    double expected = 0.0;
    for (const auto& b : x.blocks()) expected = std::max(expected, oracle::spectral_norm(b));
    EXPECT_NEAR(x.norm(), expected, 1e-10 * expected);
  }
}

TEST(TensorProduct, BlockOrdering) {
  EXPECT_EQ(tensor(Algebra({2}), Algebra({3})).product().block_dims(), (std::vector<int>{6}));
  EXPECT_EQ(tensor(Algebra({1, 1}), Algebra({1, 1})).product().block_dims(),
            (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(tensor(Algebra({2, 1}), Algebra({1, 2})).product().block_dims(),
            (std::vector<int>{2, 4, 1, 2}));
}

TEST(TensorProduct, IdentityAndIndexMaps) {
  const TensorLayout layout(Algebra({2, 1}), Algebra({1, 3}));
  const Element id = layout.tensor(Element::identity(layout.left()), Element::identity(layout.right()));
  EXPECT_EQ(max_abs((id - Element::identity(layout.product())).coords()), 0.0);
  std::vector<int> hits(static_cast<std::size_t>(layout.product().dim()), 0);
  for (int i = 0; i < layout.left().dim(); ++i) {
    for (int j = 0; j < layout.right().dim(); ++j) {
      const int p = layout.product_index(i, j);
      ++hits[static_cast<std::size_t>(p)];
      EXPECT_EQ(layout.factor_indices(p), std::make_pair(i, j));
    }
  }
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(TensorProduct, NormIsMultiplicative) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const Algebra a = random_algebra(2, 3, rng);
    const Algebra b = random_algebra(2, 3, rng);
    const Element x = random_element(a, rng);
    const Element y = random_element(b, rng);
    const double expected = x.norm() * y.norm();
    EXPECT_NEAR(tensor(x, y).norm(), expected, 1e-9 * expected);
  }
}

TEST(TensorProduct, MultiplicativeAndStarPreserving) {
  Rng rng(6);
  const TensorLayout layout(Algebra({2, 1}), Algebra({2}));
  for (int t = 0; t < 20; ++t) {
    const Element x = random_element(layout.left(), rng);
    const Element x2 = random_element(layout.left(), rng);
    const Element y = random_element(layout.right(), rng);
    const Element y2 = random_element(layout.right(), rng);
    const Element lhs = layout.tensor(x, y) * layout.tensor(x2, y2);
    EXPECT_LE((lhs - layout.tensor(x * x2, y * y2)).norm(), 1e-12 * lhs.norm() + 1e-12);
    EXPECT_LE((layout.tensor(x, y).adjoint() - layout.tensor(x.adjoint(), y.adjoint())).norm(), 1e-13);
  }
}

TEST(TensorProduct, SlicesEvaluateOneFactor) {
  Rng rng(7);
  const TensorLayout layout(Algebra({2}), Algebra({1, 2}));
  const Element x = random_element(layout.left(), rng);
  const Element y = random_element(layout.right(), rng);
  const LinearFunctional phi = random_faithful_state(layout.left(), rng);
  const LinearFunctional chi = random_faithful_state(layout.right(), rng);
  EXPECT_LE((layout.slice_left(phi, layout.tensor(x, y)) - phi(x) * y).norm(), 1e-12);
  EXPECT_LE((layout.slice_right(layout.tensor(x, y), chi) - chi(y) * x).norm(), 1e-12);
}

TEST(Functionals, Classification) {
  const Algebra m2({2});
  const LinearFunctional tr = normalized_trace(m2);
  EXPECT_TRUE(tr.is_state());
  EXPECT_TRUE(tr.is_faithful());
  EXPECT_TRUE(tr.is_trace());
  const LinearFunctional rho = corpus::diagonal_state(m2, {1.0 / 3.0, 2.0 / 3.0});
  EXPECT_TRUE(rho.is_state());
  EXPECT_TRUE(rho.is_faithful());
  EXPECT_FALSE(rho.is_trace());
  const LinearFunctional pure = corpus::diagonal_state(commutative_algebra(2), {1.0, 0.0});
  EXPECT_TRUE(pure.is_state());
  EXPECT_FALSE(pure.is_faithful());
  const LinearFunctional signed_fn = corpus::diagonal_state(commutative_algebra(2), {1.5, -0.5});
  EXPECT_FALSE(signed_fn.is_state());
}

TEST(OrthonormalBasis, TraceOnTwoPoints) {
  const Algebra c2 = commutative_algebra(2);
  const auto basis = orthonormal_basis(c2, normalized_trace(c2));
  ASSERT_EQ(basis.size(), 2u);
  for (int i = 0; i < 2; ++i) {
    const Element expected = std::sqrt(2.0) * Element::matrix_unit(c2, i);
    EXPECT_LE((basis[static_cast<std::size_t>(i)] - expected).norm(), 1e-14);
  }
}

TEST(OrthonormalBasis, TraceOnMatrixAlgebraIsScaledMatrixUnits) {
  for (int n = 1; n <= 4; ++n) {
    const Algebra mn({n});
    const auto basis = orthonormal_basis(mn, normalized_trace(mn));
    for (int i = 0; i < mn.dim(); ++i) {
      const Element expected = std::sqrt(static_cast<double>(n)) * Element::matrix_unit(mn, i);
      EXPECT_LE((basis[static_cast<std::size_t>(i)] - expected).norm(), 1e-13);
    }
  }
}

TEST(OrthonormalBasis, NonFaithfulStateIsRejected) {
  const Algebra c2 = commutative_algebra(2);
  EXPECT_THROW(orthonormal_basis(c2, corpus::diagonal_state(c2, {1.0, 0.0})), DegenerateState);
}

TEST(OrthonormalBasis, GramMatrixIsIdentityForRandomStates) {
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const Algebra a = random_algebra(3, 3, rng);
    const LinearFunctional omega = random_faithful_state(a, rng);
    const auto basis = orthonormal_basis(a, omega);
    const Matrix g = gram_matrix(basis, omega);
    EXPECT_LE(max_abs(g - Matrix::Identity(g.rows(), g.cols())), 1e-9);
  }
}

TEST(SigmaMap, TracialIsIdentity) {
  const Algebra m2({2});
  const Matrix s = sigma_map(m2, normalized_trace(m2));
  EXPECT_LE(max_abs(s - Matrix::Identity(4, 4)), 1e-12);
}

TEST(SigmaMap, CommutativeIsIdentity) {
  Rng rng(9);
  const Algebra c4 = commutative_algebra(4);
  const Matrix s = sigma_map(c4, random_faithful_state(c4, rng));
  EXPECT_LE(max_abs(s - Matrix::Identity(4, 4)), 1e-12);
}

// With ω(xy) = ω(yσ(x)) and ω = tr(ρ ·), cyclicity gives σ(x) = ρxρ⁻¹.
TEST(SigmaMap, DiagonalDensityConjugates) {
  const Algebra m2({2});
  const LinearFunctional omega = corpus::diagonal_state(m2, {1.0 / 3.0, 2.0 / 3.0});
  const Matrix s = sigma_map(m2, omega);
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = 1.0 / 3.0;
  rho(1, 1) = 2.0 / 3.0;
  Rng rng(10);
  for (int t = 0; t < 10; ++t) {
    const Element x = random_element(m2, rng);
    const Element expected(m2, {rho * x.block(0) * rho.inverse()});
    EXPECT_LE((apply_linear(m2, s, x) - expected).norm(), 1e-12);
  }
  // On matrix units: σ(E_12) = (1/2) E_12 and σ(E_21) = 2 E_21.
  EXPECT_NEAR(std::abs(s(1, 1) - 0.5), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s(2, 2) - 2.0), 0.0, 1e-12);
}

TEST(SigmaMap, DefiningRelationOnRandomStates) {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Algebra a = random_algebra(2, 3, rng);
    const LinearFunctional omega = random_faithful_state(a, rng);
    const Matrix s = sigma_map(a, omega);
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
      const Element x = Element::matrix_unit(a, i);
      const Element sx = apply_linear(a, s, x);
      for (int j = 0; j < a.dim(); ++j) {
        const Element y = Element::matrix_unit(a, j);
        worst = std::max(worst, std::abs(omega(x * y) - omega(y * sx)));
      }
    }
    EXPECT_LE(worst, 1e-9);
    const Matrix inv = s.inverse();
    EXPECT_LE(max_abs(s * inv - Matrix::Identity(s.rows(), s.cols())), 1e-9);
  }
}

TEST(SigmaMap, NonFaithfulIsRejected) {
  const Algebra m2({2});
  EXPECT_THROW(sigma_map(m2, corpus::diagonal_state(m2, {1.0, 0.0})), DegenerateState);
}
