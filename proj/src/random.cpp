#include "qfam/random.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qfam {

namespace {

Matrix gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

int uniform_int(int lo, int hi, Rng& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// All m ≥ 0 with Σ_k m_k dims_k = total.
std::vector<std::vector<int>> multiplicity_vectors(const std::vector<int>& dims, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(dims.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int remaining) {
    if (k == dims.size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int m = 0; m * dims[k] <= remaining; ++m) {
      current[k] = m;
      rec(k + 1, remaining - m * dims[k]);
    }
    current[k] = 0;
  };
  rec(0, total);
  return out;
}

}  // namespace

Matrix random_unitary(int n, Rng& rng) {
  const Matrix z = gaussian(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double a = std::abs(d);
    if (a > 0.0) q.col(i) *= d / a;
  }
  return q;
}

Element random_element(const Algebra& algebra, Rng& rng) {
  std::vector<Matrix> blocks;
  for (int n : algebra.block_dims()) blocks.push_back(gaussian(n, n, rng));
  return Element(algebra, std::move(blocks));
}

Element random_unitary_element(const Algebra& algebra, Rng& rng) {
  std::vector<Matrix> blocks;
  for (int n : algebra.block_dims()) blocks.push_back(random_unitary(n, rng));
  return Element(algebra, std::move(blocks));
}

LinearFunctional random_faithful_state(const Algebra& algebra, Rng& rng) {
  std::vector<Matrix> blocks;
  Complex total = 0.0;
  for (int n : algebra.block_dims()) {
    const Matrix g = gaussian(n, n, rng);
    Matrix rho = g * g.adjoint() + 0.1 * Matrix::Identity(n, n);
    total += rho.trace();
    blocks.push_back(std::move(rho));
  }
  for (auto& b : blocks) b /= total;
  return LinearFunctional(Element(algebra, std::move(blocks)));
}

Algebra random_algebra(int max_blocks, int max_block_dim, Rng& rng) {
  const int k = uniform_int(1, max_blocks, rng);
  std::vector<int> dims;
  for (int i = 0; i < k; ++i) dims.push_back(uniform_int(1, max_block_dim, rng));
  return Algebra(std::move(dims));
}

std::optional<StarMorphism> random_star_hom(const Algebra& domain, const Algebra& codomain,
                                            Rng& rng) {
  const auto& dims = domain.block_dims();
  Matrix m = Matrix::Zero(codomain.dim(), domain.dim());
  for (int j = 0; j < codomain.num_blocks(); ++j) {
    const int big = codomain.block_dim(j);
    const auto options = multiplicity_vectors(dims, big);
    if (options.empty()) return std::nullopt;
    const auto& mult = options[static_cast<std::size_t>(
        uniform_int(0, static_cast<int>(options.size()) - 1, rng))];
    const Matrix u = random_unitary(big, rng);
    int offset = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const int n = dims[k];
      for (int copy = 0; copy < mult[k]; ++copy) {
        for (int r = 0; r < n; ++r) {
          for (int s = 0; s < n; ++s) {
            // E_{rs} ↦ U (E_{rs} placed at this copy) U*
            const Matrix image = u.col(offset + r) * u.col(offset + s).adjoint();
            const int col = domain.basis_index(static_cast<int>(k), r, s);
            for (int a = 0; a < big; ++a) {
              for (int b = 0; b < big; ++b) m(codomain.basis_index(j, a, b), col) += image(a, b);
            }
          }
        }
        offset += n;
      }
    }
  }
  return StarMorphism(domain, codomain, std::move(m));
}

std::optional<QuantumFamily> random_family(const Algebra& source, const Algebra& target_factor,
                                           const Algebra& label, Rng& rng) {
  const TensorLayout layout(target_factor, label);
  auto phi = random_star_hom(source, layout.product(), rng);
  if (!phi) return std::nullopt;
  return QuantumFamily(source, target_factor, label, std::move(*phi));
}

std::vector<Element> random_projection_partition(int d, int parts, Rng& rng) {
  if (d < 1 || parts < 1) throw InvalidDimension("projection partition needs d, parts >= 1");
  std::vector<int> owner(static_cast<std::size_t>(d));
  for (auto& o : owner) o = uniform_int(0, parts - 1, rng);
  const Matrix u = random_unitary(d, rng);
  const Algebra md({d});
  std::vector<Element> out;
  for (int p = 0; p < parts; ++p) {
    Matrix proj = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      if (owner[i] == p) proj += u.col(i) * u.col(i).adjoint();
    }
    out.emplace_back(md, std::vector<Matrix>{proj});
  }
  return out;
}

AlgebraMatrix random_permutation_mixture(int n, int d, int parts, Rng& rng,
                                         const std::vector<std::vector<int>>& perms) {
  if (n < 1) throw InvalidDimension("magic unitary size must be positive");
  std::vector<std::vector<int>> pool = perms;
  if (pool.empty()) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      pool.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  const auto projections = random_projection_partition(d, parts, rng);
  const Algebra md({d});
  std::vector<Element> entries(static_cast<std::size_t>(n) * n, Element::zero(md));
  for (const auto& proj : projections) {
    const auto& pi = pool[static_cast<std::size_t>(
        uniform_int(0, static_cast<int>(pool.size()) - 1, rng))];
    for (int j = 0; j < n; ++j) entries[static_cast<std::size_t>(pi[j]) * n + j] += proj;
  }
  return AlgebraMatrix(md, n, std::move(entries));
}

}  // namespace qfam
