#pragma once

#include <vector>

#include "qfam/algebra.hpp"
#include "qfam/algebra_matrix.hpp"
#include "qfam/morphism.hpp"

namespace qfam {

// A *-homomorphism Ψ: B → C ⊗ A, read as a family of maps from the quantum
// space of C to that of B labelled by the quantum space of A.
class QuantumFamily {
 public:
  // Throws NotAHomomorphism when the morphism's defects exceed tol and
  // IncompatibleAlgebra when the morphism does not map source into C ⊗ A.
  QuantumFamily(Algebra source, Algebra target_factor, Algebra label, StarMorphism morphism,
                double tol = kDefaultTol);

  const Algebra& source() const noexcept { return source_; }
  const Algebra& target_factor() const noexcept { return layout_.left(); }
  const Algebra& label() const noexcept { return layout_.right(); }
  const TensorLayout& layout() const noexcept { return layout_; }
  const StarMorphism& morphism() const noexcept { return morphism_; }
  bool is_self_map() const noexcept { return source_ == layout_.left(); }

  Element operator()(const Element& x) const { return morphism_(x); }

  // max over the canonical basis of ‖Ψ(e)‖; 1 for every *-homomorphism.
  double norm() const;

 private:
  Algebra source_;
  TensorLayout layout_;
  StarMorphism morphism_;
};

QuantumFamily make_family(Algebra source, Algebra target_factor, Algebra label,
                          StarMorphism morphism, double tol = kDefaultTol);

// Ψ(b) = b ⊗ I.
QuantumFamily trivial_family(const Algebra& source, const Algebra& label);

// A single morphism φ: B → C read as a family labelled by ℂ.
QuantumFamily singleton_family(const StarMorphism& phi);

// Ψ(e_j) = Σ_t φ_{f_t}(e_j) ⊗ δ_t on ℂⁿ, labelled by ℂ^{#tables}.
QuantumFamily classical_family(const std::vector<SetMap>& tables);

// Ψ(m) = Σ_g u_g m u_g* ⊗ δ_g, labelled by ℂ^{#unitaries}.
QuantumFamily conjugation_family(const std::vector<Element>& unitaries);

// Ψ₁ △ Ψ₂ = (Ψ₁ ⊗ id) ∘ Ψ₂ for Ψ₁: C → D ⊗ A₁ and Ψ₂: B → C ⊗ A₂, a family
// B → D ⊗ (A₁ ⊗ A₂).
QuantumFamily compose_families(const QuantumFamily& first, const QuantumFamily& second);

// max ‖Ψ(e) − e ⊗ I‖ over the canonical basis.
double triviality_defect(const QuantumFamily& psi);

// Coefficients a_{kl} with Ψ(m_l) = Σ_k m_k ⊗ a_{kl} for a basis (m_l) of a
// self-map's algebra.
AlgebraMatrix action_coefficients(const QuantumFamily& psi, std::span<const Element> basis);

struct InvarianceReport {
  double defect = 0.0;
  // X_l = Σ_k ω(m_k) a_{kl} − ω(m_l) I.
  std::vector<Element> generators;
  // True when the generators use the ω-orthonormal basis, false for the
  // canonical one.
  bool orthonormal_basis = false;
};

// defect = max over the canonical basis of ‖(ω ⊗ id)Ψ(m) − ω(m) I‖.
InvarianceReport invariance_defects(const QuantumFamily& psi, const LinearFunctional& omega);

// max over the canonical basis of ‖(id ⊗ σ_{B,C})(Ψ_B △ Ψ_C)(m) − (Ψ_C △ Ψ_B)(m)‖.
double commutation_defect(const QuantumFamily& psi_b, const QuantumFamily& psi_c);

struct FixedPointSpace {
  int dimension = 0;
  std::vector<Element> basis;
  bool ergodic = false;
};

// Null space of m ↦ Ψ(m) − m ⊗ I.
FixedPointSpace fixed_point_space(const QuantumFamily& psi, double rel_cut = kRankCut);

// (id ⊗ λ) ∘ Ψ. Throws InvalidCharacter when λ is not a character of the label.
StarMorphism evaluate_at_character(const QuantumFamily& psi, const StarMorphism& lambda);

// max over the canonical basis of ‖(id ⊗ Λ)Φ(b) − Ψ(b)‖.
double factorization_defect(const QuantumFamily& phi, const StarMorphism& lambda,
                            const QuantumFamily& psi);

}  // namespace qfam
