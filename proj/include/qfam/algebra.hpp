#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qfam/errors.hpp"

namespace qfam {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;

// Absolute tolerance used by every pass/fail decision unless overridden.
inline constexpr double kDefaultTol = 1e-9;
// Smallest density eigenvalue accepted for a faithful functional.
inline constexpr double kFaithfulFloor = 1e-12;
// Relative singular value cut for numeric ranks and null spaces.
inline constexpr double kRankCut = 1e-9;

// Position of a matrix unit E^(k)_{r,s} in the canonical basis.
struct BasisLabel {
  int block;
  int row;
  int col;
  bool operator==(const BasisLabel&) const = default;
};

// Finite direct sum M_{n_1} ⊕ ... ⊕ M_{n_K}. The canonical basis is the list
// of matrix units ordered lexicographically by (block, row, col).
class Algebra {
 public:
  explicit Algebra(std::vector<int> block_dims);

  const std::vector<int>& block_dims() const noexcept { return dims_; }
  int num_blocks() const noexcept { return static_cast<int>(dims_.size()); }
  int block_dim(int k) const { return dims_.at(k); }
  int block_offset(int k) const { return offsets_.at(k); }
  int dim() const noexcept { return dim_; }
  bool is_commutative() const noexcept;

  int basis_index(int block, int row, int col) const;
  BasisLabel basis_label(int index) const;

  std::string to_string() const;

  bool operator==(const Algebra& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<int> offsets_;
  int dim_ = 0;
};

Algebra make_algebra(std::vector<int> dims);

// ℂ, the one-dimensional algebra.
inline Algebra scalars() { return Algebra({1}); }
// ℂⁿ, the algebra of functions on an n-point set.
Algebra commutative_algebra(int n);

class Element {
 public:
  Element(Algebra algebra, std::vector<Matrix> blocks);

  static Element zero(const Algebra& algebra);
  static Element identity(const Algebra& algebra);
  static Element matrix_unit(const Algebra& algebra, int basis_index);
  static Element from_coords(const Algebra& algebra, const Vector& coords);

  const Algebra& algebra() const noexcept { return algebra_; }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }
  const Matrix& block(int k) const { return blocks_.at(k); }

  // Coordinates in the canonical basis.
  Vector coords() const;

  Element adjoint() const;
  // Largest singular value over all blocks.
  double norm() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(Complex alpha);

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(Complex alpha, Element x) { return x *= alpha; }
  friend Element operator*(const Element& x, const Element& y);

 private:
  Algebra algebra_;
  std::vector<Matrix> blocks_;
};

inline double operator_norm(const Element& x) { return x.norm(); }

// Largest singular value of a single dense matrix.
double operator_norm(const Matrix& m);

void require_same_algebra(const Algebra& a, const Algebra& b, const char* where);

// ω(x) = Σ_k trace(ρ_k x_k).
class LinearFunctional {
 public:
  explicit LinearFunctional(Element density);

  // Builds the functional whose values on the canonical basis are `values`.
  static LinearFunctional from_values(const Algebra& algebra, const RowVector& values);

  const Algebra& algebra() const noexcept { return density_.algebra(); }
  const Element& density() const noexcept { return density_; }

  Complex operator()(const Element& x) const;
  // Values on the canonical basis, so that ω(x) = values() * x.coords().
  RowVector values() const;

  bool is_state(double tol = kDefaultTol) const;
  bool is_faithful(double floor = kFaithfulFloor) const;
  bool is_trace(double tol = kDefaultTol) const;
  // Minimum eigenvalue over all Hermitian parts of the density blocks.
  double min_density_eigenvalue() const;

 private:
  Element density_;
};

// Normalised trace: density I / Σ n_k.
LinearFunctional normalized_trace(const Algebra& algebra);

// Tensor product of algebras with left-major block ordering and the index
// maps between the product basis and pairs of factor basis indices.
class TensorLayout {
 public:
  TensorLayout(Algebra left, Algebra right);

  const Algebra& left() const noexcept { return left_; }
  const Algebra& right() const noexcept { return right_; }
  const Algebra& product() const noexcept { return product_; }

  int product_index(int left_index, int right_index) const {
    return pair_to_product_[static_cast<std::size_t>(left_index) * right_.dim() + right_index];
  }
  std::pair<int, int> factor_indices(int product_index) const {
    return product_to_pair_.at(product_index);
  }

  Element tensor(const Element& x, const Element& y) const;
  // x ⊗ I and I ⊗ y.
  Element left_embed(const Element& x) const;
  Element right_embed(const Element& y) const;

  // (φ ⊗ id)(z) and (id ⊗ φ)(z) for a functional on one factor.
  Element slice_left(const LinearFunctional& phi, const Element& z) const;
  Element slice_right(const Element& z, const LinearFunctional& phi) const;

  // Reshape a product element into a left.dim() × right.dim() coefficient
  // matrix: z = Σ_{ij} C_{ij} E_i ⊗ F_j.
  Matrix pair_coefficients(const Element& z) const;
  Element from_pair_coefficients(const Matrix& coefficients) const;

 private:
  Algebra left_;
  Algebra right_;
  Algebra product_;
  std::vector<int> pair_to_product_;
  std::vector<std::pair<int, int>> product_to_pair_;
};

TensorLayout tensor(const Algebra& left, const Algebra& right);
Element tensor(const Element& x, const Element& y);
LinearFunctional tensor(const LinearFunctional& phi, const LinearFunctional& psi);

// Gram–Schmidt over the canonical basis in canonical order for the scalar
// product ⟨x, y⟩ = ω(x* y). Throws DegenerateState when ω is not faithful.
std::vector<Element> orthonormal_basis(const Algebra& algebra, const LinearFunctional& omega);

// Gram matrix G_{ij} = ω(x_i* x_j).
Matrix gram_matrix(std::span<const Element> xs, const LinearFunctional& omega);

// The unique linear σ with ω(xy) = ω(yσ(x)) for all x, y, as a matrix acting
// on canonical coordinates. Throws DegenerateState when ω is not faithful.
Matrix sigma_map(const Algebra& algebra, const LinearFunctional& omega);

// Apply a matrix in canonical coordinates to an element of `algebra`.
Element apply_linear(const Algebra& codomain, const Matrix& map, const Element& x);

}  // namespace qfam
