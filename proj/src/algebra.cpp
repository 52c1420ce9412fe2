#include "qfam/algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace qfam {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double hermitian_min_eigenvalue(const Matrix& m) {
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(std::vector<int> block_dims) : dims_(std::move(block_dims)) {
  if (dims_.empty()) {
    throw InvalidDimension("algebra needs at least one block");
  }
  offsets_.reserve(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (dims_[k] < 1) {
      throw InvalidDimension("block " + std::to_string(k) + " has nonpositive size " +
                             std::to_string(dims_[k]));
    }
    offsets_.push_back(dim_);
    dim_ += dims_[k] * dims_[k];
  }
}

bool Algebra::is_commutative() const noexcept {
  return std::all_of(dims_.begin(), dims_.end(), [](int n) { return n == 1; });
}

int Algebra::basis_index(int block, int row, int col) const {
  const int n = block_dim(block);
  if (row < 0 || row >= n || col < 0 || col >= n) {
    throw InvalidDimension("matrix unit index out of range");
  }
  return offsets_[block] + row * n + col;
}

BasisLabel Algebra::basis_label(int index) const {
  if (index < 0 || index >= dim_) {
    throw InvalidDimension("basis index " + std::to_string(index) + " out of range");
  }
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const int k = static_cast<int>(std::distance(offsets_.begin(), it)) - 1;
  const int local = index - offsets_[k];
  return {k, local / dims_[k], local % dims_[k]};
}

std::string Algebra::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k != 0) os << "+";
    if (dims_[k] == 1) {
      os << "C";
    } else {
      os << "M" << dims_[k];
    }
  }
  return os.str();
}

Algebra make_algebra(std::vector<int> dims) { return Algebra(std::move(dims)); }

Algebra commutative_algebra(int n) {
  if (n < 1) throw InvalidDimension("commutative algebra needs n >= 1");
  return Algebra(std::vector<int>(static_cast<std::size_t>(n), 1));
}

void require_same_algebra(const Algebra& a, const Algebra& b, const char* where) {
  if (!(a == b)) {
    throw IncompatibleAlgebra(std::string(where) + ": " + a.to_string() + " vs " + b.to_string());
  }
}

// ---------------------------------------------------------------- Element

Element::Element(Algebra algebra, std::vector<Matrix> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != algebra_.num_blocks()) {
    throw InvalidMatrix("element has " + std::to_string(blocks_.size()) + " blocks, algebra " +
                        algebra_.to_string() + " has " + std::to_string(algebra_.num_blocks()));
  }
  for (int k = 0; k < algebra_.num_blocks(); ++k) {
    const int n = algebra_.block_dim(k);
    if (blocks_[k].rows() != n || blocks_[k].cols() != n) {
      throw InvalidMatrix("block " + std::to_string(k) + " must be " + std::to_string(n) + "x" +
                          std::to_string(n));
    }
  }
}

Element Element::zero(const Algebra& algebra) {
  std::vector<Matrix> blocks;
  for (int n : algebra.block_dims()) blocks.push_back(Matrix::Zero(n, n));
  return Element(algebra, std::move(blocks));
}

Element Element::identity(const Algebra& algebra) {
  std::vector<Matrix> blocks;
  for (int n : algebra.block_dims()) blocks.push_back(Matrix::Identity(n, n));
  return Element(algebra, std::move(blocks));
}

Element Element::matrix_unit(const Algebra& algebra, int basis_index) {
  Element e = zero(algebra);
  const auto [k, r, s] = algebra.basis_label(basis_index);
  e.blocks_[k](r, s) = 1.0;
  return e;
}

Element Element::from_coords(const Algebra& algebra, const Vector& coords) {
  if (coords.size() != algebra.dim()) {
    throw InvalidMatrix("coordinate vector of length " + std::to_string(coords.size()) +
                        " for algebra of dimension " + std::to_string(algebra.dim()));
  }
  std::vector<Matrix> blocks;
  blocks.reserve(algebra.num_blocks());
  for (int k = 0; k < algebra.num_blocks(); ++k) {
    const int n = algebra.block_dim(k);
    Matrix b(n, n);
    const int off = algebra.block_offset(k);
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) b(r, s) = coords[off + r * n + s];
    }
    blocks.push_back(std::move(b));
  }
  return Element(algebra, std::move(blocks));
}

Vector Element::coords() const {
  Vector v(algebra_.dim());
  for (int k = 0; k < algebra_.num_blocks(); ++k) {
    const int n = algebra_.block_dim(k);
    const int off = algebra_.block_offset(k);
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) v[off + r * n + s] = blocks_[k](r, s);
    }
  }
  return v;
}

Element Element::adjoint() const {
  std::vector<Matrix> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) blocks.push_back(b.adjoint());
  return Element(algebra_, std::move(blocks));
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.size() == 1) return std::abs(m(0, 0));
  if (m.norm() == 0.0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double Element::norm() const {
  double best = 0.0;
  for (const auto& b : blocks_) {
    // Frobenius norm bounds the operator norm from above.
    if (b.norm() <= best) continue;
    best = std::max(best, operator_norm(b));
  }
  return best;
}

Element& Element::operator+=(const Element& other) {
  require_same_algebra(algebra_, other.algebra_, "element addition");
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += other.blocks_[k];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_algebra(algebra_, other.algebra_, "element subtraction");
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] -= other.blocks_[k];
  return *this;
}

Element& Element::operator*=(Complex alpha) {
  for (auto& b : blocks_) b *= alpha;
  return *this;
}

Element operator*(const Element& x, const Element& y) {
  require_same_algebra(x.algebra_, y.algebra_, "element product");
  std::vector<Matrix> blocks;
  blocks.reserve(x.blocks_.size());
  for (std::size_t k = 0; k < x.blocks_.size(); ++k) blocks.push_back(x.blocks_[k] * y.blocks_[k]);
  return Element(x.algebra_, std::move(blocks));
}

// ------------------------------------------------------ LinearFunctional

LinearFunctional::LinearFunctional(Element density) : density_(std::move(density)) {}

LinearFunctional LinearFunctional::from_values(const Algebra& algebra, const RowVector& values) {
  if (values.size() != algebra.dim()) {
    throw InvalidMatrix("functional needs " + std::to_string(algebra.dim()) + " values");
  }
  // ω(E_{rs}) = ρ_{sr}
  Element rho = Element::from_coords(algebra, values.transpose());
  std::vector<Matrix> blocks;
  for (const auto& b : rho.blocks()) blocks.push_back(b.transpose());
  return LinearFunctional(Element(algebra, std::move(blocks)));
}

Complex LinearFunctional::operator()(const Element& x) const {
  require_same_algebra(algebra(), x.algebra(), "functional evaluation");
  Complex total = 0.0;
  for (int k = 0; k < algebra().num_blocks(); ++k) {
    total += density_.block(k).transpose().cwiseProduct(x.block(k)).sum();
  }
  return total;
}

RowVector LinearFunctional::values() const {
  RowVector w(algebra().dim());
  for (int k = 0; k < algebra().num_blocks(); ++k) {
    const int n = algebra().block_dim(k);
    const int off = algebra().block_offset(k);
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) w[off + r * n + s] = density_.block(k)(s, r);
    }
  }
  return w;
}

double LinearFunctional::min_density_eigenvalue() const {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& b : density_.blocks()) lo = std::min(lo, hermitian_min_eigenvalue(b));
  return lo;
}

namespace {
bool density_is_hermitian(const Element& rho, double tol) {
  for (const auto& b : rho.blocks()) {
    if ((b - b.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}
}  // namespace

bool LinearFunctional::is_state(double tol) const {
  if (!density_is_hermitian(density_, tol)) return false;
  if (min_density_eigenvalue() < -tol) return false;
  return std::abs((*this)(Element::identity(algebra())) - 1.0) <= tol;
}

bool LinearFunctional::is_faithful(double floor) const {
  return density_is_hermitian(density_, kDefaultTol) && min_density_eigenvalue() >= floor;
}

bool LinearFunctional::is_trace(double tol) const {
  for (const auto& b : density_.blocks()) {
    const Complex c = b.trace() / static_cast<double>(b.rows());
    if (std::abs(c.imag()) > tol || c.real() < -tol) return false;
    const Matrix residual = b - c * Matrix::Identity(b.rows(), b.cols());
    if (residual.cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

LinearFunctional normalized_trace(const Algebra& algebra) {
  const int total = std::accumulate(algebra.block_dims().begin(), algebra.block_dims().end(), 0);
  Element rho = Element::identity(algebra);
  rho *= Complex(1.0 / total);
  return LinearFunctional(std::move(rho));
}

// ---------------------------------------------------------- TensorLayout

TensorLayout::TensorLayout(Algebra left, Algebra right)
    : left_(std::move(left)), right_(std::move(right)), product_({1}) {
  std::vector<int> dims;
  dims.reserve(static_cast<std::size_t>(left_.num_blocks()) * right_.num_blocks());
  for (int n : left_.block_dims()) {
    for (int m : right_.block_dims()) dims.push_back(n * m);
  }
  product_ = Algebra(std::move(dims));

  const int dl = left_.dim();
  const int dr = right_.dim();
  pair_to_product_.assign(static_cast<std::size_t>(dl) * dr, -1);
  product_to_pair_.assign(static_cast<std::size_t>(product_.dim()), {-1, -1});
  const int nr = right_.num_blocks();
  for (int i = 0; i < dl; ++i) {
    const auto [k, r, s] = left_.basis_label(i);
    for (int j = 0; j < dr; ++j) {
      const auto [l, t, u] = right_.basis_label(j);
      const int m = right_.block_dim(l);
      const int p = product_.basis_index(k * nr + l, r * m + t, s * m + u);
      pair_to_product_[static_cast<std::size_t>(i) * dr + j] = p;
      product_to_pair_[p] = {i, j};
    }
  }
}

Element TensorLayout::tensor(const Element& x, const Element& y) const {
  require_same_algebra(left_, x.algebra(), "tensor left factor");
  require_same_algebra(right_, y.algebra(), "tensor right factor");
  std::vector<Matrix> blocks;
  blocks.reserve(product_.num_blocks());
  for (const auto& a : x.blocks()) {
    for (const auto& b : y.blocks()) blocks.push_back(kron(a, b));
  }
  return Element(product_, std::move(blocks));
}

Element TensorLayout::left_embed(const Element& x) const {
  return tensor(x, Element::identity(right_));
}

Element TensorLayout::right_embed(const Element& y) const {
  return tensor(Element::identity(left_), y);
}

Matrix TensorLayout::pair_coefficients(const Element& z) const {
  require_same_algebra(product_, z.algebra(), "pair coefficients");
  const Vector v = z.coords();
  Matrix c(left_.dim(), right_.dim());
  for (int i = 0; i < left_.dim(); ++i) {
    for (int j = 0; j < right_.dim(); ++j) c(i, j) = v[product_index(i, j)];
  }
  return c;
}

Element TensorLayout::from_pair_coefficients(const Matrix& coefficients) const {
  if (coefficients.rows() != left_.dim() || coefficients.cols() != right_.dim()) {
    throw InvalidMatrix("pair coefficient matrix has wrong shape");
  }
  Vector v(product_.dim());
  for (int i = 0; i < left_.dim(); ++i) {
    for (int j = 0; j < right_.dim(); ++j) v[product_index(i, j)] = coefficients(i, j);
  }
  return Element::from_coords(product_, v);
}

Element TensorLayout::slice_left(const LinearFunctional& phi, const Element& z) const {
  require_same_algebra(left_, phi.algebra(), "left slice");
  const RowVector out = phi.values() * pair_coefficients(z);
  return Element::from_coords(right_, out.transpose());
}

Element TensorLayout::slice_right(const Element& z, const LinearFunctional& phi) const {
  require_same_algebra(right_, phi.algebra(), "right slice");
  const Vector out = pair_coefficients(z) * phi.values().transpose();
  return Element::from_coords(left_, out);
}

TensorLayout tensor(const Algebra& left, const Algebra& right) { return TensorLayout(left, right); }

Element tensor(const Element& x, const Element& y) {
  return TensorLayout(x.algebra(), y.algebra()).tensor(x, y);
}

LinearFunctional tensor(const LinearFunctional& phi, const LinearFunctional& psi) {
  // trace((ρ ⊗ τ)(x ⊗ y)) = trace(ρx) trace(τy)
  return LinearFunctional(tensor(phi.density(), psi.density()));
}

// --------------------------------------------------- state-induced geometry

namespace {

// G_{ij} = ω(E_i* E_j) on the canonical basis.
Matrix canonical_gram(const Algebra& algebra, const RowVector& w) {
  const int d = algebra.dim();
  Matrix g = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const auto [k, r, s] = algebra.basis_label(i);
    for (int j = 0; j < d; ++j) {
      const auto [l, t, u] = algebra.basis_label(j);
      // E_{rs}* E_{tu} = E_{sr} E_{tu} = δ_{rt} E_{su}
      if (k == l && r == t) g(i, j) = w[algebra.basis_index(k, s, u)];
    }
  }
  return g;
}

void require_faithful_gram(const Matrix& gram) {
  const double lo = hermitian_min_eigenvalue(gram);
  if ((gram - gram.adjoint()).cwiseAbs().maxCoeff() > kDefaultTol || lo < kFaithfulFloor) {
    throw DegenerateState("functional is not faithful: Gram matrix min eigenvalue " +
                          std::to_string(lo));
  }
}

}  // namespace

Matrix gram_matrix(std::span<const Element> xs, const LinearFunctional& omega) {
  const auto n = static_cast<Eigen::Index>(xs.size());
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Element xi_star = xs[i].adjoint();
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = omega(xi_star * xs[j]);
  }
  return g;
}

std::vector<Element> orthonormal_basis(const Algebra& algebra, const LinearFunctional& omega) {
  require_same_algebra(algebra, omega.algebra(), "orthonormal basis");
  const Matrix gram = canonical_gram(algebra, omega.values());
  require_faithful_gram(gram);

  const int d = algebra.dim();
  // Columns hold canonical coordinates of the orthonormal vectors.
  Matrix q = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    Vector v = Vector::Unit(d, j);
    // two passes of classical Gram–Schmidt
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        const Complex proj = q.col(i).dot(gram * v);
        v -= proj * q.col(i);
      }
    }
    const double len = std::sqrt(std::abs(v.dot(gram * v)));
    if (len < std::sqrt(kFaithfulFloor)) {
      throw DegenerateState("Gram–Schmidt hit a null vector at basis index " + std::to_string(j));
    }
    q.col(j) = v / len;
  }

  std::vector<Element> basis;
  basis.reserve(d);
  for (int j = 0; j < d; ++j) basis.push_back(Element::from_coords(algebra, q.col(j)));
  return basis;
}

Matrix sigma_map(const Algebra& algebra, const LinearFunctional& omega) {
  require_same_algebra(algebra, omega.algebra(), "sigma map");
  if (!omega.is_faithful()) {
    throw DegenerateState("modular map needs a faithful functional (min density eigenvalue " +
                          std::to_string(omega.min_density_eigenvalue()) + ")");
  }
  const RowVector w = omega.values();
  const int d = algebra.dim();
  // W_{ip} = ω(E_i E_p); the defining relation on basis pairs reads W T = Wᵀ.
  Matrix big_w = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const auto [k, r, s] = algebra.basis_label(i);
    for (int p = 0; p < d; ++p) {
      const auto [l, t, u] = algebra.basis_label(p);
      if (k == l && s == t) big_w(i, p) = w[algebra.basis_index(k, r, u)];
    }
  }
  Eigen::FullPivLU<Matrix> lu(big_w);
  if (!lu.isInvertible()) {
    throw DegenerateState("modular map system is singular");
  }
  return lu.solve(Matrix(big_w.transpose()));
}

Element apply_linear(const Algebra& codomain, const Matrix& map, const Element& x) {
  if (map.cols() != x.algebra().dim() || map.rows() != codomain.dim()) {
    throw IncompatibleAlgebra("linear map shape does not match operand");
  }
  return Element::from_coords(codomain, map * x.coords());
}

}  // namespace qfam
