#include "hzalg/random.hpp"

namespace hzalg {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

ChainComplex random_complex(Rng& rng, Ring ring, int lo, int hi, bool torsion, Grading grading,
                            std::size_t max_rank) {
  std::vector<std::size_t> rank;
  for (int n = lo; n <= hi; ++n) rank.push_back(uniform(rng, 0, long(max_rank)));
  // Torsion exponents t_n with t_{n-1} | t_n (0 meaning free) keep d well defined.
  const long base = uniform(rng, 2, 3);
  std::vector<long> t(rank.size(), 0);
  if (torsion) {
    bool free_from_here = false;
    for (std::size_t i = 0; i < rank.size(); ++i) {
      if (!free_from_here && uniform(rng, 0, 2) == 0) free_from_here = true;
      t[i] = free_from_here ? 0 : base;
    }
  }
  std::vector<FpGroup> groups;
  for (std::size_t i = 0; i < rank.size(); ++i) {
    Matrix rel = t[i] ? Matrix::scalar(rank[i], t[i]) : Matrix(rank[i], 0);
    groups.emplace_back(ring, rank[i], rel);
  }
  std::vector<Matrix> diffs;
  for (std::size_t i = 1; i < rank.size(); ++i) {
    // Columns of d_i are chosen inside the kernel of d_{i-1}.
    Matrix basis = i == 1 ? Matrix::identity(rank[0]) : kernel_basis(diffs.back(), Ring::Integers);
    Matrix coeff = random_matrix(rng, basis.cols(), rank[i], -2, 2);
    Matrix d = basis * coeff;
    // Over Z/t the differential only matters modulo t; keep entries small.
    diffs.push_back(d);
  }
  return ChainComplex(ring, lo, std::move(groups), std::move(diffs), grading);
}

ChainMap random_chain_map(Rng& rng, const ChainComplex& source, const ChainComplex& target) {
  ChainMapGroup hom(source, target);
  ChainMap f = ChainMap::zero(source, target);
  for (std::size_t i = 0; i < hom.generator_count(); ++i) {
    const long c = uniform(rng, -2, 2);
    if (c == 0) continue;
    ChainMap g = hom.generator(i);
    for (long k = 0; k < (c < 0 ? -c : c); ++k) f = f + (c < 0 ? -g : g);
  }
  return f;
}

Matrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  Matrix m = Matrix::identity(n);
  if (n < 2) return n == 1 && uniform(rng, 0, 1) ? Matrix{{-1}} : m;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = uniform(rng, 0, long(n) - 1);
    std::size_t j = uniform(rng, 0, long(n) - 2);
    if (j >= i) ++j;
    const long c = uniform(rng, 0, 1) ? 1 : -1;
    // row_i += c * row_j
    for (std::size_t col = 0; col < n; ++col) m(i, col) += c * m(j, col);
  }
  return m;
}

SimplicialAbelianGroup random_simplicial_group(Rng& rng, Ring ring, std::size_t truncation, bool torsion) {
  const int top = std::max(0, int(truncation) - 2);
  ChainComplex c = random_complex(rng, ring, 0, top, torsion, Grading::NonNegative, 2);
  SimplicialAbelianGroup a = dold_kan_gamma(c, truncation);
  const std::size_t n = uniform(rng, 0, 2);
  a = direct_sum(a, free_abelian(simplicial_sphere(n, truncation), ring));
  std::vector<Matrix> p;
  for (std::size_t k = 0; k <= truncation; ++k) p.push_back(random_unimodular(rng, a.generators(k), 4));
  return change_basis(a, p);
}

}  // namespace hzalg
