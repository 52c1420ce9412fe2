#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qfam/algebra_matrix.hpp"
#include "qfam/family.hpp"
#include "qfam/semigroup.hpp"

namespace qfam {

// An n-dimensional representation is a matrix over the semigroup's algebra.
using Representation = AlgebraMatrix;

// max over (k,l) of ‖Δ(v_{kl}) − Σ_r v_{kr} ⊗ v_{rl}‖.
double representation_defect(const Representation& v, const QuantumSemigroup& s);

// V ⊤ W = V₁₃W₂₃: entry ((i,a),(j,b)) = v_{ij} w_{ab}, row index i·k + a.
Representation tensor_representations(const Representation& v, const Representation& w);

// ‖X*X − I‖ in M_n ⊗ B.
double isometry_defect(const AlgebraMatrix& x);

struct ActionMatrixReport {
  // ã with Φ(m_l) = Σ_k m_k ⊗ a_{kl} in the ω-orthonormal basis.
  AlgebraMatrix matrix;
  std::vector<Element> basis;
  double isometry_defect = 0.0;
  std::optional<double> representation_defect;
  // b̃ = (a_{kl}*), only formed when ω is a trace.
  std::optional<AlgebraMatrix> adjoint_entries;
  std::optional<double> adjoint_isometry_defect;
};

// Throws DegenerateState for a non-faithful ω.
ActionMatrixReport action_matrix(const QuantumFamily& phi, const LinearFunctional& omega,
                                 const QuantumSemigroup* semigroup = nullptr);

struct MagicReport {
  bool pass = false;
  double idempotent = 0.0;   // max ‖a² − a‖
  double selfadjoint = 0.0;  // max ‖a* − a‖
  double row_sum = 0.0;      // max_i ‖Σ_j a_ij − I‖
  double column_sum = 0.0;   // max_j ‖Σ_i a_ij − I‖
  double max_commutator = 0.0;
  double max_defect() const { return std::max({idempotent, selfadjoint, row_sum, column_sum}); }
};

MagicReport magic_unitary_check(const AlgebraMatrix& u, double tol = kDefaultTol);
// Throws InvalidMatrix for ragged input.
MagicReport magic_unitary_check(const std::vector<std::vector<Element>>& rows,
                                double tol = kDefaultTol);

struct ProjectionFamilyReport {
  double sum_defect = 0.0;
  double orthogonality_defect = 0.0;
};

ProjectionFamilyReport projection_family_check(std::span<const Element> projections);

// Ψ(e_j) = Σ_i e_i ⊗ a_ij on ℂⁿ labelled by B. Throws NotMagic when the
// relations fail at tol.
QuantumFamily wang_family(const AlgebraMatrix& u, double tol = kDefaultTol);

// Scalar 0/1 magic unitary of a permutation over ℂ: a_ij = [i = perm(j)].
AlgebraMatrix permutation_magic(const std::vector<int>& perm);

struct NonclassicalMagic {
  AlgebraMatrix unitary;
  // θ outside the open interval (0, π/2): the projections commute.
  bool degenerate = false;
};

// [[p, 1−p, 0, 0], [1−p, p, 0, 0], [0, 0, q, 1−q], [0, 0, 1−q, q]] over M₂
// with p = diag(1, 0) and q the projection onto (cos θ, sin θ).
NonclassicalMagic nonclassical_magic_4x4(double theta);

struct ModularReport {
  double defect = 0.0;               // ‖S⊗I − ā*(S⊗I)ā‖
  double left_inverse_defect = 0.0;  // ‖(S⁻¹⊗I)ā*(S⊗I)ā − I‖
  double abar_isometry_defect = 0.0; // ‖ā*ā − I‖
  Matrix s;                          // σ in the ω-orthonormal basis, σ(m_i) = Σ_p s_ip m_p
  AlgebraMatrix abar;                // entrywise adjoint of ã
};

// Throws PreconditionViolated naming the failed hypothesis when ω is not a
// faithful state or is not invariant for Φ at tol.
ModularReport modular_compatibility(const QuantumFamily& phi, const LinearFunctional& omega,
                                    double tol = kDefaultTol);
double modular_compatibility_defect(const QuantumFamily& phi, const LinearFunctional& omega,
                                    double tol = kDefaultTol);

// Matrix of sigma_map in an orthonormal basis, row convention σ(m_i) = Σ_p s_ip m_p.
Matrix modular_matrix(const Algebra& algebra, const LinearFunctional& omega,
                      std::span<const Element> basis);

// Columns: canonical coordinates of Φ(e_i)(I ⊗ f_j) in M ⊗ B.
Matrix podles_span(const QuantumFamily& phi);
RankReport podles_rank(const QuantumFamily& phi, double rel_cut = kRankCut);

}  // namespace qfam
