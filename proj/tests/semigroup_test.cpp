#include <gtest/gtest.h>

#include "qfam/corpus.hpp"
#include "qfam/errors.hpp"
#include "qfam/random.hpp"
#include "qfam/semigroup.hpp"
#include "support/oracles.hpp"

using namespace qfam;

namespace {

QuantumSemigroup classical(const MultiplicationTable& t) { return classical_semigroup_algebra(t); }

LinearFunctional random_functional(const Algebra& a, Rng& rng) {
  return LinearFunctional(random_element(a, rng));
}

}  // namespace

TEST(Coassociativity, ClassicalExamples) {
  EXPECT_EQ(coassociativity_defect(classical(corpus::cyclic_group_table(2))), 0.0);
  EXPECT_EQ(coassociativity_defect(classical(corpus::left_zero_table(3))), 0.0);
  EXPECT_EQ(coassociativity_defect(classical(corpus::map_monoid_table(2))), 0.0);
}

TEST(Coassociativity, LeftZeroCoproduct) {
  const QuantumSemigroup s = classical(corpus::left_zero_table(2));
  for (int i = 0; i < 2; ++i) {
    const Element e = Element::matrix_unit(s.algebra(), i);
    EXPECT_EQ((s.delta(e) - s.layout().left_embed(e)).norm(), 0.0);
  }
}

TEST(Coassociativity, PerturbationIsDetected) {
  const QuantumSemigroup s = classical(corpus::cyclic_group_table(3));
  Matrix delta = s.comultiplication().matrix();
  delta(0, 1) += 0.1;
  const QuantumSemigroup broken(s.algebra(), StarMorphism(s.algebra(), s.layout().product(), delta));
  EXPECT_GE(coassociativity_defect(broken), 0.05);
}

TEST(Counit, ClassicalExamples) {
  EXPECT_EQ(counit_defect(classical(corpus::cyclic_group_table(4))), 0.0);
  const QuantumSemigroup map2 = classical(corpus::map_monoid_table(2));
  ASSERT_TRUE(map2.counit().has_value());
  // The identity map {0 ↦ 0, 1 ↦ 1} is lookup table index 1.
  EXPECT_EQ(find_identity(corpus::map_monoid_table(2)), std::optional<int>(1));
  EXPECT_EQ(counit_defect(map2), 0.0);
}

TEST(Counit, WrongPointIsDetected) {
  const QuantumSemigroup z3 = classical(corpus::cyclic_group_table(3));
  Matrix row = Matrix::Zero(1, 3);
  row(0, 1) = 1.0;
  const QuantumSemigroup wrong(z3.algebra(), z3.comultiplication(),
                               StarMorphism(z3.algebra(), scalars(), row));
  EXPECT_GE(counit_defect(wrong), 0.5);
}

TEST(Counit, MissingIsAnError) {
  const QuantumSemigroup lz = classical(corpus::left_zero_table(2));
  EXPECT_FALSE(lz.counit().has_value());
  EXPECT_THROW(counit_defect(lz), MissingComponent);
}

TEST(Action, TrivialFamilyUnderAnyCoproduct) {
  const QuantumSemigroup s = classical(corpus::left_zero_table(2));
  EXPECT_EQ(action_defect(trivial_family(Algebra({2, 1}), s.algebra()), s), 0.0);
}

TEST(Action, AllMapsUnderCompositionDual) {
  EXPECT_EQ(action_defect(corpus::all_maps_family(2), classical(corpus::map_monoid_table(2))), 0.0);
  EXPECT_EQ(action_defect(corpus::all_maps_family(3), classical(corpus::map_monoid_table(3))), 0.0);
}

TEST(Action, ConjugationUnderGroupLaw) {
  EXPECT_EQ(action_defect(corpus::z2_conjugation_family(), classical(corpus::cyclic_group_table(2))),
            0.0);
}

TEST(Action, WrongCoproductIsDetected) {
  // The all-maps family is not an action for the opposite monoid.
  auto table = corpus::map_monoid_table(2);
  MultiplicationTable opposite = table;
  for (std::size_t a = 0; a < table.size(); ++a)
    for (std::size_t b = 0; b < table.size(); ++b) opposite[a][b] = table[b][a];
  EXPECT_GT(action_defect(corpus::all_maps_family(2), classical(opposite)), 0.5);
}

TEST(Action, Mismatch) {
  EXPECT_THROW(action_defect(corpus::all_maps_family(2), classical(corpus::cyclic_group_table(3))),
               IncompatibleAlgebra);
}

TEST(QsMorphism, Examples) {
  const QuantumSemigroup z3 = classical(corpus::cyclic_group_table(3));
  EXPECT_EQ(qs_morphism_defect(identity_morphism(z3.algebra()), z3, z3), 0.0);

  // Restriction of functions on Map₂ to the permutations {id, swap}.
  const QuantumSemigroup map2 = classical(corpus::map_monoid_table(2));
  const auto tables = enumerate_set_map_tables(2);
  const int id = static_cast<int>(std::find(tables.begin(), tables.end(), SetMap{0, 1}) - tables.begin());
  const int sw = static_cast<int>(std::find(tables.begin(), tables.end(), SetMap{1, 0}) - tables.begin());
  MultiplicationTable s2 = {{0, 1}, {1, 0}};
  const QuantumSemigroup cs2 = classical(s2);
  Matrix restrict = Matrix::Zero(2, 4);
  restrict(0, id) = 1.0;
  restrict(1, sw) = 1.0;
  EXPECT_EQ(qs_morphism_defect(StarMorphism(map2.algebra(), cs2.algebra(), restrict), map2, cs2), 0.0);

  // The counit as a morphism onto the trivial semigroup ℂ.
  const QuantumSemigroup point = classical({{0}});
  EXPECT_EQ(qs_morphism_defect(*z3.counit(), z3, point), 0.0);
}

TEST(Convolution, CounitIsNeutral) {
  Rng rng(41);
  const QuantumSemigroup z3 = classical(corpus::cyclic_group_table(3));
  const LinearFunctional eps = morphism_as_functional(*z3.counit());
  for (int t = 0; t < 20; ++t) {
    const LinearFunctional phi = random_functional(z3.algebra(), rng);
    EXPECT_LE((convolve(eps, phi, z3).values() - phi.values()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((convolve(phi, eps, z3).values() - phi.values()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Convolution, GroupCharacters) {
  const QuantumSemigroup z4 = classical(corpus::cyclic_group_table(4));
  const auto chars = characters_of(z4.algebra());
  for (int g = 0; g < 4; ++g) {
    for (int h = 0; h < 4; ++h) {
      const LinearFunctional c = convolve(chars[g].functional(), chars[h].functional(), z4);
      EXPECT_EQ((c.values() - chars[(g + h) % 4].functional().values()).cwiseAbs().maxCoeff(), 0.0);
    }
  }
}

TEST(Convolution, Associative) {
  Rng rng(42);
  const QuantumSemigroup s = classical(corpus::map_monoid_table(2));
  for (int t = 0; t < 50; ++t) {
    const LinearFunctional a = random_functional(s.algebra(), rng);
    const LinearFunctional b = random_functional(s.algebra(), rng);
    const LinearFunctional c = random_functional(s.algebra(), rng);
    const RowVector lhs = convolve(convolve(a, b, s), c, s).values();
    const RowVector rhs = convolve(a, convolve(b, c, s), s).values();
    EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9);
  }
}

// The characters of C(S) under convolution reproduce S, for every semigroup
// of order ≤ 3 and the full transformation monoid on two points.
TEST(Convolution, CharacterMonoidIsTheSemigroup) {
  std::vector<oracle::Table> tables;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : oracle::all_semigroups(n)) tables.push_back(t);
  }
  tables.push_back(oracle::lookup_monoid(2));
  for (const auto& t : tables) {
    const QuantumSemigroup s = classical(t);
    const auto chars = characters_of(s.algebra());
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        const LinearFunctional c = convolve(chars[a].functional(), chars[b].functional(), s);
        const auto uv = static_cast<std::size_t>(t[a][b]);
        EXPECT_EQ((c.values() - chars[uv].functional().values()).cwiseAbs().maxCoeff(), 0.0);
      }
    }
  }
}

TEST(ClassicalSemigroup, Validation) {
  EXPECT_THROW(classical({{0, 1}, {1, 2}}), InvalidSemigroup);         // out of range
  EXPECT_THROW(classical({{0, 1}, {1}}), InvalidSemigroup);            // ragged
  EXPECT_THROW(classical({{1, 0}, {0, 0}}), InvalidSemigroup);         // (00)0 ≠ 0(00)
  EXPECT_NO_THROW(classical(corpus::cyclic_group_table(2)));
}

TEST(ClassicalSemigroup, MonoidTableMatchesOracle) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(corpus::map_monoid_table(n), oracle::lookup_monoid(n));
}

TEST(ClassicalSemigroup, AssociativeTablesMatchOracle) {
  for (int n = 1; n <= 3; ++n) {
    auto ours = associative_tables(n);
    auto theirs = oracle::all_semigroups(n);
    EXPECT_TRUE(std::is_sorted(ours.begin(), ours.end()));
    std::sort(theirs.begin(), theirs.end());
    EXPECT_EQ(ours, theirs);
  }
  EXPECT_EQ(oracle::all_semigroups(2).size(), 8u);
  EXPECT_EQ(oracle::all_semigroups(3).size(), 113u);
}

TEST(Cancellation, CyclicGroupsAreFull) {
  for (int n = 1; n <= 5; ++n) {
    const QuantumSemigroup s = classical(corpus::cyclic_group_table(n));
    for (Side side : {Side::left, Side::right}) {
      const RankReport r = cancellation_rank(s, side);
      EXPECT_EQ(r.rank, n * n);
      EXPECT_TRUE(r.full);
    }
  }
}

TEST(Cancellation, LeftZeroSemigroup) {
  const QuantumSemigroup s = classical(corpus::left_zero_table(2));
  const RankReport left = cancellation_rank(s, Side::left);
  const RankReport right = cancellation_rank(s, Side::right);
  EXPECT_EQ(left.rank, 2);
  EXPECT_FALSE(left.full);
  EXPECT_EQ(right.rank, 4);
  EXPECT_TRUE(right.full);
}

TEST(Cancellation, MapMonoidIsNotFull) {
  const QuantumSemigroup s = classical(corpus::map_monoid_table(2));
  EXPECT_FALSE(cancellation_rank(s, Side::left).full);
  EXPECT_FALSE(cancellation_rank(s, Side::right).full);
}

// Span{(e_i ⊗ I)Δ(e_j)} is full exactly when every x ↦ ax is injective, and
// span{Δ(e_i)(I ⊗ e_j)} exactly when every x ↦ xa is.
TEST(Cancellation, AgreesWithClassicalOracle) {
  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : oracle::all_semigroups(n)) {
      const QuantumSemigroup s = classical(t);
      EXPECT_EQ(cancellation_rank(s, Side::left).full, oracle::left_cancellative(t));
      EXPECT_EQ(cancellation_rank(s, Side::right).full, oracle::right_cancellative(t));
      EXPECT_EQ(oracle::gaussian_rank(cancellation_span(s, Side::left)),
                cancellation_rank(s, Side::left).rank);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 122);
}

TEST(Cancellation, ClassicalHelperMatchesOracle) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : oracle::all_semigroups(n)) {
      EXPECT_EQ(classically_cancellative(t, Side::left), oracle::left_cancellative(t));
      EXPECT_EQ(classically_cancellative(t, Side::right), oracle::right_cancellative(t));
    }
  }
}

TEST(Coideal, HoldsForDeformedStates) {
  Rng rng(43);
  const QuantumSemigroup map2 = classical(corpus::map_monoid_table(2));
  const QuantumFamily f = corpus::all_maps_family(2);
  for (int t = 0; t < 10; ++t) {
    EXPECT_LE(coideal_defect(f, map2, random_faithful_state(f.source(), rng)), 1e-9);
  }
  // Also with a non-faithful state, where the canonical basis is used.
  EXPECT_LE(coideal_defect(f, map2, corpus::diagonal_state(f.source(), {1.0, 0.0})), 1e-9);
}
