#pragma once

// Slow, independent reference computations used as test oracles.

#include "hzalg/matrix.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using hzalg::Matrix;

// Determinant by cofactor expansion; only used on tiny minors.
inline mpz_class det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0).get_num();
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m(0, j)) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    mpz_class sub = det(m.select_rows(rows).select_columns(cols));
    total += (j % 2 ? -1 : 1) * m(0, j).get_num() * sub;
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors via gcds of k x k minors.
inline std::vector<mpz_class> determinantal_factors(const Matrix& m) {
  std::vector<mpz_class> d{1};
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        mpz_class x = det(m.select_rows(r).select_columns(c));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      }
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<mpz_class> factors;
  for (std::size_t k = 1; k < d.size(); ++k) factors.push_back(d[k] / d[k - 1]);
  return factors;
}


inline std::size_t matrix_rank(const Matrix& m) { return determinantal_factors(m).size(); }

struct GroupShape {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;
};

// H_n of a complex of free groups from the invariant factors of d_n, d_{n+1}.
inline GroupShape free_homology(std::size_t gens, const Matrix& d_n, const Matrix& d_next) {
  GroupShape out;
  const std::size_t rn = d_n.rows() && d_n.cols() ? matrix_rank(d_n) : 0;
  std::vector<mpz_class> f;
  if (d_next.rows() && d_next.cols()) f = determinantal_factors(d_next);
  out.free_rank = gens - rn - f.size();
  for (const auto& x : f)
    if (x != 1) out.torsion.push_back(x);
  return out;
}

}  // namespace oracle
