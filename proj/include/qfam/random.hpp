#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qfam/algebra_matrix.hpp"
#include "qfam/family.hpp"

namespace qfam {

using Rng = std::mt19937_64;

// Haar-distributed unitary from the QR decomposition of a complex Gaussian.
Matrix random_unitary(int n, Rng& rng);

Element random_element(const Algebra& algebra, Rng& rng);
Element random_unitary_element(const Algebra& algebra, Rng& rng);

// Faithful state with a random density.
LinearFunctional random_faithful_state(const Algebra& algebra, Rng& rng);

// Random algebra with 1..max_blocks blocks of size 1..max_block_dim.
Algebra random_algebra(int max_blocks, int max_block_dim, Rng& rng);

// A random unital *-homomorphism: for each codomain block a random
// multiplicity vector over the domain blocks, conjugated by a random unitary.
// Empty when no unital *-homomorphism exists between the two algebras.
std::optional<StarMorphism> random_star_hom(const Algebra& domain, const Algebra& codomain,
                                            Rng& rng);

std::optional<QuantumFamily> random_family(const Algebra& source, const Algebra& target_factor,
                                           const Algebra& label, Rng& rng);

// Orthogonal projections in M_d summing to I, with random ranks (possibly
// zero) and a random common eigenbasis.
std::vector<Element> random_projection_partition(int d, int parts, Rng& rng);

// n×n magic unitary over M_d: a_ij = Σ_k [i = π_k(j)] P_k for a random
// projection partition (P_k) of M_d and permutations π_k drawn from `perms`
// (all of S_n when empty).
AlgebraMatrix random_permutation_mixture(int n, int d, int parts, Rng& rng,
                                         const std::vector<std::vector<int>>& perms = {});

}  // namespace qfam
