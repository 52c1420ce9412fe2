#pragma once

#include <vector>

#include "qfam/family.hpp"
#include "qfam/representation.hpp"
#include "qfam/semigroup.hpp"

// Standard finite examples: classical semigroups, the families they act
// through, and states used by the verification suites.
namespace qfam::corpus {

// ℤ_n under addition.
MultiplicationTable cyclic_group_table(int n);

// uv = u.
MultiplicationTable left_zero_table(int n);

// All maps {0..n-1} → {0..n-1}, indexed as in enumerate_set_map_tables.
// The product f·g applies f first: (f·g)(x) = g(f(x)). With this convention
// the all-maps family is an action of C(Map_n) with the dual comultiplication.
MultiplicationTable map_monoid_table(int n);

// x ↦ x + shift mod n.
SetMap cyclic_shift(int n, int shift = 1);

// The family of all nⁿ set maps on ℂⁿ, labelled by ℂ^{nⁿ}.
QuantumFamily all_maps_family(int n);

// Translations x ↦ x + g of ℤ_n, labelled by C(ℤ_n).
QuantumFamily translation_family(int n);

// Conjugation by {I, diag(1, −1)} on M₂, labelled by C(ℤ₂).
QuantumFamily z2_conjugation_family();

// v_{kl} = δ_{(l−k) mod n} over C(ℤ_n).
Representation regular_representation(int n);

// Diagonal density on the algebra: block entries taken in order from `diag`.
LinearFunctional diagonal_state(const Algebra& algebra, const std::vector<double>& diag);

// All permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> permutations(int n);

}  // namespace qfam::corpus
