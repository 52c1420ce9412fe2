#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "qfam/algebra.hpp"

namespace qfam {

struct DefectReport {
  double mult = 0.0;  // max ‖φ(xy) − φ(x)φ(y)‖ over canonical basis pairs
  double star = 0.0;  // max ‖φ(x*) − φ(x)*‖ over the canonical basis
  double unit = 0.0;  // ‖φ(I) − I‖
  double max() const { return std::max({mult, star, unit}); }
};

// A linear map between two algebras, stored as a dense matrix in canonical
// bases. The defect report is computed on first request and shared between
// copies; the map itself never changes after construction.
class StarMorphism {
 public:
  StarMorphism(Algebra domain, Algebra codomain, Matrix map_matrix);

  const Algebra& domain() const noexcept { return domain_; }
  const Algebra& codomain() const noexcept { return codomain_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  const DefectReport& defects() const;
  bool is_star_hom(double tol = kDefaultTol) const { return defects().max() <= tol; }

  Element operator()(const Element& x) const;
  // Image of the index-th canonical basis element.
  Element image(int index) const;

 private:
  struct Cache {
    std::once_flag once;
    DefectReport report;
  };

  Algebra domain_;
  Algebra codomain_;
  Matrix matrix_;
  std::shared_ptr<Cache> cache_;
};

// Builds the morphism and evaluates its defects eagerly. The returned flag
// mirrors is_star_hom(tol).
struct VerifiedMorphism {
  StarMorphism morphism;
  bool is_star_hom;
};
VerifiedMorphism make_and_verify_morphism(Algebra domain, Algebra codomain, Matrix map_matrix,
                                          double tol = kDefaultTol);

StarMorphism identity_morphism(const Algebra& algebra);

// φ ∘ ψ; requires codomain(ψ) = domain(φ).
StarMorphism compose_morphisms(const StarMorphism& phi, const StarMorphism& psi);

// φ ⊗ ψ between the left-major tensor layouts of domains and codomains.
StarMorphism tensor_morphisms(const StarMorphism& phi, const StarMorphism& psi);

// Same matrix, codomain replaced by an algebra with identical canonical
// basis (e.g. C ⊗ ℂ read as C, or (A⊗B)⊗C read as A⊗(B⊗C)).
StarMorphism with_codomain(const StarMorphism& phi, const Algebra& codomain);

// max over the canonical basis e of ‖lhs(e) − rhs(e)‖. Both maps must share
// domain and codomain.
double basis_defect(const StarMorphism& lhs, const StarMorphism& rhs);

// σ_{B,C}: B ⊗ C → C ⊗ B, x ⊗ y ↦ y ⊗ x.
StarMorphism flip(const Algebra& b, const Algebra& c);

// Permutation matrix carrying (A⊗B)⊗C coordinates to A⊗(B⊗C) coordinates.
// With left-major ordering this is the identity; exposed so callers and
// tests can state that fact instead of assuming it.
Matrix associator(const Algebra& a, const Algebra& b, const Algebra& c);

// A character: evaluation of a one-dimensional block.
struct Character {
  int block;
  StarMorphism morphism;

  LinearFunctional functional() const;
};

// One character per 1×1 block, in block order.
std::vector<Character> characters_of(const Algebra& algebra);

// Reads a multiplicative functional as a morphism into ℂ.
StarMorphism functional_as_morphism(const LinearFunctional& phi);
LinearFunctional morphism_as_functional(const StarMorphism& phi);

// Lookup table f: {0..n-1} → {0..n-1}, stored as f[i].
using SetMap = std::vector<int>;

// φ_f(e_j) = Σ_{i : f(i) = j} e_i, i.e. g ↦ g ∘ f on functions.
StarMorphism set_map_morphism(const SetMap& f);

// All nⁿ lookup tables in lexicographic order of (f(0), ..., f(n-1)).
std::vector<SetMap> enumerate_set_map_tables(int n, int cap = 6);

// The duals of all set maps, in the order of enumerate_set_map_tables.
std::vector<StarMorphism> enumerate_set_maps(int n, int cap = 6);

}  // namespace qfam
