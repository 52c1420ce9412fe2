#include "qfam/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qfam::corpus {

MultiplicationTable cyclic_group_table(int n) {
  if (n < 1) throw InvalidDimension("cyclic group order must be positive");
  MultiplicationTable t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) t[u][v] = (u + v) % n;
  }
  return t;
}

MultiplicationTable left_zero_table(int n) {
  if (n < 1) throw InvalidDimension("semigroup order must be positive");
  MultiplicationTable t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int u = 0; u < n; ++u) std::fill(t[u].begin(), t[u].end(), u);
  return t;
}

MultiplicationTable map_monoid_table(int n) {
  const auto maps = enumerate_set_map_tables(n);
  std::map<SetMap, int> index;
  for (std::size_t i = 0; i < maps.size(); ++i) index[maps[i]] = static_cast<int>(i);
  MultiplicationTable t(maps.size(), std::vector<int>(maps.size()));
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (std::size_t b = 0; b < maps.size(); ++b) {
      SetMap h(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) h[x] = maps[b][maps[a][x]];
      t[a][b] = index.at(h);
    }
  }
  return t;
}

SetMap cyclic_shift(int n, int shift) {
  SetMap f(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) f[x] = ((x + shift) % n + n) % n;
  return f;
}

QuantumFamily all_maps_family(int n) { return classical_family(enumerate_set_map_tables(n)); }

QuantumFamily translation_family(int n) {
  std::vector<SetMap> tables;
  for (int g = 0; g < n; ++g) tables.push_back(cyclic_shift(n, g));
  return classical_family(tables);
}

QuantumFamily z2_conjugation_family() {
  const Algebra m2({2});
  Matrix u = Matrix::Identity(2, 2);
  u(1, 1) = -1.0;
  return conjugation_family({Element::identity(m2), Element(m2, {u})});
}

Representation regular_representation(int n) {
  const Algebra a = commutative_algebra(n);
  std::vector<Element> entries;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) entries.push_back(Element::matrix_unit(a, ((l - k) % n + n) % n));
  }
  return Representation(a, n, std::move(entries));
}

LinearFunctional diagonal_state(const Algebra& algebra, const std::vector<double>& diag) {
  const int total = std::accumulate(algebra.block_dims().begin(), algebra.block_dims().end(), 0);
  if (static_cast<int>(diag.size()) != total) {
    throw InvalidDimension("diagonal state needs " + std::to_string(total) + " entries");
  }
  std::vector<Matrix> blocks;
  std::size_t pos = 0;
  for (int n : algebra.block_dims()) {
    Matrix b = Matrix::Zero(n, n);
    for (int r = 0; r < n; ++r) b(r, r) = diag[pos++];
    blocks.push_back(std::move(b));
  }
  return LinearFunctional(Element(algebra, std::move(blocks)));
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace qfam::corpus
