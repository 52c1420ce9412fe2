#include <gtest/gtest.h>

#include <numbers>

#include "qfam/corpus.hpp"
#include "qfam/errors.hpp"
#include "qfam/linalg.hpp"
#include "qfam/random.hpp"
#include "qfam/representation.hpp"
#include "support/oracles.hpp"

using namespace qfam;

namespace {

QuantumSemigroup cyclic(int n) { return classical_semigroup_algebra(corpus::cyclic_group_table(n)); }

LinearFunctional uniform(int n) { return normalized_trace(commutative_algebra(n)); }

double entrywise_gap(const AlgebraMatrix& x, const AlgebraMatrix& y) {
  double worst = 0.0;
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j) worst = std::max(worst, (x(i, j) - y(i, j)).norm());
  return worst;
}

AlgebraMatrix column_fault() {
  const Algebra c2 = commutative_algebra(2);
  const Element p = Element::matrix_unit(c2, 0);
  const Element q = Element::identity(c2) - p;
  return AlgebraMatrix(c2, 2, {p, q, p, q});
}

}  // namespace

TEST(RepresentationDefect, OneDimensionalIdentity) {
  const QuantumSemigroup s = classical_semigroup_algebra(corpus::left_zero_table(3));
  EXPECT_EQ(representation_defect(AlgebraMatrix::identity(s.algebra(), 1), s), 0.0);
}

TEST(RepresentationDefect, RegularRepresentation) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(representation_defect(corpus::regular_representation(n), cyclic(n)), 0.0);
  }
}

TEST(RepresentationDefect, RandomEntriesFail) {
  Rng rng(51);
  const QuantumSemigroup s = cyclic(3);
  std::vector<Element> entries;
  for (int i = 0; i < 4; ++i) entries.push_back(random_element(s.algebra(), rng));
  EXPECT_GT(representation_defect(AlgebraMatrix(s.algebra(), 2, entries), s), 0.1);
}

TEST(RepresentationDefect, Mismatch) {
  EXPECT_THROW(representation_defect(corpus::regular_representation(2), cyclic(3)), IncompatibleAlgebra);
}

TEST(TensorRepresentations, UnitLaw) {
  const Representation v = corpus::regular_representation(3);
  const Representation t = tensor_representations(v, AlgebraMatrix::identity(v.algebra(), 1));
  EXPECT_EQ(entrywise_gap(t, v), 0.0);
}

TEST(TensorRepresentations, IsometriesAndRepresentationsPersist) {
  const Representation v = corpus::regular_representation(3);
  const Representation w = tensor_representations(v, v);
  EXPECT_LE(isometry_defect(v), 1e-12);
  EXPECT_LE(isometry_defect(w), 1e-9);
  EXPECT_LE(representation_defect(w, cyclic(3)), 1e-9);
  EXPECT_EQ(w.size(), 9);
}

TEST(ActionMatrix, TrivialFamilyIsIdentity) {
  Rng rng(52);
  const Algebra m({2, 1});
  const QuantumFamily t = trivial_family(m, commutative_algebra(2));
  const ActionMatrixReport r = action_matrix(t, random_faithful_state(m, rng));
  EXPECT_LE(entrywise_gap(r.matrix, AlgebraMatrix::identity(t.label(), m.dim())), 1e-12);
  EXPECT_LE(r.isometry_defect, 1e-12);
}

TEST(ActionMatrix, WangFamilyRecoversMagicUnitary) {
  const AlgebraMatrix u = nonclassical_magic_4x4(0.7).unitary;
  const ActionMatrixReport r = action_matrix(wang_family(u), uniform(4));
  EXPECT_LE(entrywise_gap(r.matrix, u), 1e-12);
  EXPECT_LE(r.isometry_defect, 1e-9);
}

TEST(ActionMatrix, ConjugationWithTraceIsUnitary) {
  const ActionMatrixReport r =
      action_matrix(corpus::z2_conjugation_family(), normalized_trace(Algebra({2})));
  EXPECT_LE(r.isometry_defect, 1e-9);
  EXPECT_LE(isometry_defect(r.matrix.adjoint()), 1e-9);
  ASSERT_TRUE(r.adjoint_isometry_defect.has_value());
  EXPECT_LE(*r.adjoint_isometry_defect, 1e-9);
}

TEST(ActionMatrix, NonTracialOmitsAdjointEntries) {
  const ActionMatrixReport r = action_matrix(
      corpus::z2_conjugation_family(), corpus::diagonal_state(Algebra({2}), {1.0 / 3.0, 2.0 / 3.0}));
  EXPECT_FALSE(r.adjoint_entries.has_value());
  EXPECT_LE(r.isometry_defect, 1e-9);
}

TEST(ActionMatrix, NonFaithfulStateIsRejected) {
  EXPECT_THROW(action_matrix(corpus::translation_family(2),
                             corpus::diagonal_state(commutative_algebra(2), {1.0, 0.0})),
               DegenerateState);
}

// Whenever the action equation holds, ã is a representation of the label.
TEST(ActionMatrix, ActionsGiveRepresentations) {
  const QuantumSemigroup map2 = classical_semigroup_algebra(corpus::map_monoid_table(2));
  const ActionMatrixReport all = action_matrix(corpus::all_maps_family(2), uniform(2), &map2);
  ASSERT_TRUE(all.representation_defect.has_value());
  EXPECT_LE(*all.representation_defect, 1e-9);
  // Not invariant, hence not isometric.
  EXPECT_GT(all.isometry_defect, 0.1);

  const QuantumSemigroup z2 = cyclic(2);
  const ActionMatrixReport conj = action_matrix(
      corpus::z2_conjugation_family(), corpus::diagonal_state(Algebra({2}), {1.0 / 3.0, 2.0 / 3.0}), &z2);
  EXPECT_LE(*conj.representation_defect, 1e-9);
}

TEST(MagicUnitary, PermutationsPass) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& perm : corpus::permutations(n)) {
      const MagicReport r = magic_unitary_check(permutation_magic(perm));
      EXPECT_TRUE(r.pass);
      EXPECT_EQ(r.max_commutator, 0.0);
    }
  }
}

TEST(MagicUnitary, NonclassicalWitness) {
  const MagicReport r = magic_unitary_check(nonclassical_magic_4x4(0.7).unitary);
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.max_commutator, 0.1);
  EXPECT_NEAR(r.max_commutator, std::sin(1.4) / 2.0, 1e-12);
}

TEST(MagicUnitary, QuarterTurnCommutator) {
  const MagicReport r = magic_unitary_check(nonclassical_magic_4x4(std::numbers::pi / 4).unitary);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.max_commutator, 0.5, 1e-12);
}

TEST(MagicUnitary, SmallAngleAlmostCommutes) {
  const MagicReport r = magic_unitary_check(nonclassical_magic_4x4(1e-6).unitary);
  EXPECT_LT(r.max_commutator, 1e-5);
  EXPECT_TRUE(nonclassical_magic_4x4(0.0).degenerate);
  EXPECT_FALSE(nonclassical_magic_4x4(0.3).degenerate);
}

TEST(MagicUnitary, SumsAreExactForAllAngles) {
  for (double theta : {0.1, 0.5, 0.7, 1.0, 1.5}) {
    const MagicReport r = magic_unitary_check(nonclassical_magic_4x4(theta).unitary);
    EXPECT_LE(r.row_sum, 1e-15);
    EXPECT_LE(r.column_sum, 1e-15);
  }
}

TEST(MagicUnitary, ColumnFault) {
  const MagicReport r = magic_unitary_check(column_fault());
  EXPECT_FALSE(r.pass);
  EXPECT_GE(r.column_sum, 1.0);
  EXPECT_EQ(r.row_sum, 0.0);
}

TEST(MagicUnitary, RaggedInput) {
  const Algebra c = scalars();
  const Element one = Element::identity(c);
  const Element zero = Element::zero(c);
  EXPECT_THROW(magic_unitary_check(std::vector<std::vector<Element>>{{one, zero}, {zero}}), InvalidMatrix);
}

TEST(ProjectionFamily, DiagonalPartition) {
  const Algebra c5 = commutative_algebra(5);
  std::vector<Element> ps;
  for (int i = 0; i < 5; ++i) ps.push_back(Element::matrix_unit(c5, i));
  const ProjectionFamilyReport r = projection_family_check(ps);
  EXPECT_EQ(r.sum_defect, 0.0);
  EXPECT_EQ(r.orthogonality_defect, 0.0);
}

TEST(ProjectionFamily, RotatedPartition) {
  Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    const ProjectionFamilyReport r = projection_family_check(random_projection_partition(5, 3, rng));
    EXPECT_LE(r.sum_defect, 1e-9);
    EXPECT_LE(r.orthogonality_defect, 1e-9);
  }
}

TEST(ProjectionFamily, RepeatedProjectionBreaksTheSum) {
  const Algebra m2({2});
  const Element p = Element::matrix_unit(m2, 0);
  const std::vector<Element> ps = {p, p};
  EXPECT_GT(projection_family_check(ps).sum_defect, 0.5);
}

TEST(ProjectionFamily, FootnoteLaw) {
  Rng rng(54);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> parts(1, 5);
  int used = 0;
  for (int t = 0; t < 200; ++t) {
    const auto ps = random_projection_partition(dim(rng), parts(rng), rng);
    const ProjectionFamilyReport r = projection_family_check(ps);
    if (r.sum_defect > 1e-12) continue;
    ++used;
    EXPECT_LE(r.orthogonality_defect, 1e-9);
  }
  EXPECT_GT(used, 150);
}

TEST(WangFamily, IdentityPermutation) {
  const QuantumFamily w = wang_family(permutation_magic({0, 1, 2}));
  EXPECT_EQ(triviality_defect(w), 0.0);
}

TEST(WangFamily, ThreeCycleIsAShift) {
  const std::vector<int> perm = {1, 2, 0};
  const QuantumFamily w = wang_family(permutation_magic(perm));
  // Ψ(e_j) = e_{π(j)}: the dual of the set map π⁻¹.
  SetMap inverse(3);
  for (int j = 0; j < 3; ++j) inverse[static_cast<std::size_t>(perm[j])] = j;
  EXPECT_EQ(basis_defect(w.morphism(), singleton_family(set_map_morphism(inverse)).morphism()), 0.0);
  EXPECT_EQ(inverse, corpus::cyclic_shift(3, 2));
}

TEST(WangFamily, NonclassicalIsVerifiedAndPreservesUniform) {
  const QuantumFamily w = wang_family(nonclassical_magic_4x4(0.7).unitary);
  EXPECT_LE(w.morphism().defects().max(), 1e-12);
  EXPECT_LE(invariance_defects(w, uniform(4)).defect, 1e-12);
}

TEST(WangFamily, RejectsNonMagic) { EXPECT_THROW(wang_family(column_fault()), NotMagic); }

TEST(WangFamily, EvaluationRecoversPermutations) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& perm : corpus::permutations(n)) {
      const QuantumFamily w = wang_family(permutation_magic(perm));
      const StarMorphism theta = evaluate_at_character(w, characters_of(w.label())[0].morphism);
      SetMap inverse(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) inverse[static_cast<std::size_t>(perm[j])] = j;
      EXPECT_EQ(basis_defect(theta, set_map_morphism(inverse)), 0.0);
    }
  }
}

TEST(Modular, ConjugationWithDiagonalDensity) {
  const ModularReport r = modular_compatibility(
      corpus::z2_conjugation_family(), corpus::diagonal_state(Algebra({2}), {1.0 / 3.0, 2.0 / 3.0}));
  EXPECT_LE(r.defect, 1e-9);
  EXPECT_LE(r.left_inverse_defect, 1e-8);
  // S is diagonal with entries 1, 1/2, 2, 1 on the orthonormal matrix units.
  EXPECT_NEAR(std::abs(r.s(1, 1)), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(r.s(2, 2)), 2.0, 1e-12);
}

TEST(Modular, TracialCaseIsAbarIsometry) {
  for (const auto& [family, state] : {std::pair{corpus::z2_conjugation_family(), normalized_trace(Algebra({2}))},
                                      std::pair{wang_family(nonclassical_magic_4x4(0.7).unitary), uniform(4)}}) {
    const ModularReport r = modular_compatibility(family, state);
    EXPECT_LE(std::abs(r.defect - r.abar_isometry_defect), 1e-12);
    EXPECT_LE(r.defect, 1e-8);
    EXPECT_LE(r.s.cwiseAbs().maxCoeff() - 1.0, 1e-12);
  }
}

TEST(Modular, NamesViolatedHypothesis) {
  const QuantumFamily conj = corpus::z2_conjugation_family();
  const Algebra m2({2});
  auto message = [&](const LinearFunctional& omega) {
    try {
      modular_compatibility(conj, omega);
    } catch (const PreconditionViolated& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message(corpus::diagonal_state(m2, {1.0, 0.0})).rfind("faithful", 0), 0u);
  EXPECT_EQ(message(corpus::diagonal_state(m2, {1.0, 1.0})).rfind("state", 0), 0u);
  // A density that does not commute with diag(1, −1) is not invariant.
  Matrix rho(2, 2);
  rho << 0.5, 0.2, 0.2, 0.5;
  EXPECT_EQ(message(LinearFunctional(Element(m2, {rho}))).rfind("invariant", 0), 0u);
}

// Ψ(e_j) = Σ_i e_i ⊗ 1/2 on ℂ² preserves the uniform state but is not a
// *-homomorphism; admitted with a loose tolerance it fails the identity.
TEST(Modular, BrokenFamilyHasDefect) {
  const Algebra c2 = commutative_algebra(2);
  const TensorLayout layout(c2, scalars());
  const StarMorphism half(c2, layout.product(), Matrix::Constant(2, 2, 0.5));
  const QuantumFamily broken(c2, c2, scalars(), half, 1.0);
  const ModularReport r = modular_compatibility(broken, uniform(2));
  EXPECT_GT(r.defect, 0.5);
}

TEST(Podles, TrivialWithScalarLabel) {
  const Algebra m({2, 1});
  const RankReport r = podles_rank(trivial_family(m, scalars()));
  EXPECT_TRUE(r.full);
  EXPECT_EQ(r.rank, m.dim());
}

TEST(Podles, ConjugationFamily) {
  const QuantumFamily f = corpus::z2_conjugation_family();
  const RankReport r = podles_rank(f);
  EXPECT_EQ(r.rank, 8);
  EXPECT_TRUE(r.full);
  EXPECT_EQ(oracle::gaussian_rank(podles_span(f)), 8);
}

TEST(Podles, NonclassicalWangFamilyMatchesSpanOracle) {
  const QuantumFamily w = wang_family(nonclassical_magic_4x4(0.7).unitary);
  const RankReport r = podles_rank(w);
  EXPECT_EQ(r.rank, oracle::gaussian_rank(podles_span(w)));
  EXPECT_EQ(r.rank, 16);
  EXPECT_TRUE(r.full);
}

TEST(Podles, AllMapsIsNotDense) {
  // Non-injective maps collapse points, so the span misses M ⊗ B.
  EXPECT_FALSE(podles_rank(corpus::all_maps_family(2)).full);
}

// For C(ℤ_n) with its regular representation, c ⊗ v_kl lies in
// span{(a ⊗ I)Δ(b)} for every basis element c.
TEST(Properties, LemmaSpanMembership) {
  for (int n = 1; n <= 5; ++n) {
    const QuantumSemigroup s = cyclic(n);
    const Representation v = corpus::regular_representation(n);
    ASSERT_LE(isometry_defect(v), 1e-12);
    const Matrix span = cancellation_span(s, Side::left);
    double worst = 0.0;
    for (int c = 0; c < n; ++c) {
      for (const auto& entry : v.entries()) {
        const Element x = s.layout().tensor(Element::matrix_unit(s.algebra(), c), entry);
        worst = std::max(worst, span_residual(span, x.coords()));
      }
    }
    EXPECT_LE(worst, 1e-9);
  }
}

TEST(Properties, IsometryForInvariantCorpusStates) {
  Rng rng(55);
  for (int t = 0; t < 10; ++t) {
    const AlgebraMatrix u = random_permutation_mixture(4, 3, 3, rng);
    const QuantumFamily w = wang_family(u);
    ASSERT_LE(invariance_defects(w, uniform(4)).defect, 1e-10);
    const ActionMatrixReport r = action_matrix(w, uniform(4));
    EXPECT_LE(r.isometry_defect, 1e-8);
    EXPECT_LE(entrywise_gap(r.matrix, u), 1e-12);
  }
}
