#pragma once

#include <optional>
#include <vector>

#include "qfam/family.hpp"
#include "qfam/morphism.hpp"

namespace qfam {

// (A, Δ) with an optional counit ε. Construction only checks shapes; the
// algebraic laws are measured by the defect functions below.
class QuantumSemigroup {
 public:
  QuantumSemigroup(Algebra algebra, StarMorphism comultiplication,
                   std::optional<StarMorphism> counit = std::nullopt);

  const Algebra& algebra() const noexcept { return layout_.left(); }
  const TensorLayout& layout() const noexcept { return layout_; }
  const StarMorphism& comultiplication() const noexcept { return delta_; }
  const std::optional<StarMorphism>& counit() const noexcept { return counit_; }

  Element delta(const Element& x) const { return delta_(x); }

 private:
  TensorLayout layout_;  // A ⊗ A
  StarMorphism delta_;
  std::optional<StarMorphism> counit_;
};

// max over the canonical basis of ‖(Δ ⊗ id)Δ(a) − (id ⊗ Δ)Δ(a)‖.
double coassociativity_defect(const QuantumSemigroup& s);

// max of ‖(ε ⊗ id)Δ(a) − a‖ and ‖(id ⊗ ε)Δ(a) − a‖ over the canonical basis.
// Throws MissingComponent without a counit.
double counit_defect(const QuantumSemigroup& s);

// max over M's canonical basis of ‖(Ψ ⊗ id)Ψ(m) − (id ⊗ Δ)Ψ(m)‖.
double action_defect(const QuantumFamily& psi, const QuantumSemigroup& s);

// max over the canonical basis of ‖(Λ ⊗ Λ)Δ_A(a) − Δ_B(Λ(a))‖.
double qs_morphism_defect(const StarMorphism& lambda, const QuantumSemigroup& source,
                          const QuantumSemigroup& target);

// φ ∗ ψ = (φ ⊗ ψ) ∘ Δ.
LinearFunctional convolve(const LinearFunctional& phi, const LinearFunctional& psi,
                          const QuantumSemigroup& s);

// Multiplication table over {0..n-1}: table[u][v] = uv.
using MultiplicationTable = std::vector<std::vector<int>>;

// C(S) = ℂⁿ with Δ(δ_s) = Σ_{uv = s} δ_u ⊗ δ_v and counit at a two-sided
// identity when one exists. Throws InvalidSemigroup for malformed or
// non-associative tables.
QuantumSemigroup classical_semigroup_algebra(const MultiplicationTable& table);

// Index of a two-sided identity, if any.
std::optional<int> find_identity(const MultiplicationTable& table);

enum class Side { left, right };

struct RankReport {
  int rank = 0;
  int ambient = 0;
  bool full = false;
};

// Left: rank of span{(e_i ⊗ I)Δ(e_j)}. Right: rank of span{Δ(e_i)(I ⊗ e_j)}.
RankReport cancellation_rank(const QuantumSemigroup& s, Side side, double rel_cut = kRankCut);

// Classical counterpart of cancellation_rank(C(S), side).full. Left: every
// x ↦ ax is injective. Right: every x ↦ xa is injective.
bool classically_cancellative(const MultiplicationTable& table, Side side);

// Every associative table on {0..n-1}, in lexicographic order of the cells.
// Throws ResourceLimit for n > 3.
std::vector<MultiplicationTable> associative_tables(int n);

// Vectors (canonical coordinates of A ⊗ A) whose span cancellation_rank measures.
Matrix cancellation_span(const QuantumSemigroup& s, Side side);

// Residual of Δ(X_l) = Σ_p X_p ⊗ a_{pl} + I ⊗ X_l for the generators X_l of
// invariance_defects, maximised over l.
double coideal_defect(const QuantumFamily& psi, const QuantumSemigroup& s,
                      const LinearFunctional& omega);

}  // namespace qfam
