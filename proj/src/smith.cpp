#include "hzalg/smith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <type_traits>

namespace hzalg {
namespace {

template <class T>
constexpr bool kField = std::is_same_v<T, mpq_class>;

template <class T>
T convert(const Scalar& x) {
  if constexpr (kField<T>) {
    return x;
  } else {
    if (x.get_den() != 1) throw std::invalid_argument("non-integral entry in integer matrix");
    return x.get_num();
  }
}

template <class T>
bool is_unit(const T& x) {
  if constexpr (kField<T>)
    return sgn(x) != 0;
  else
    return x == 1 || x == -1;
}

template <class T>
T abs_value(const T& x) {
  return sgn(x) < 0 ? T(-x) : x;
}

// Quotient used to reduce a by b; over Z the remainder shrinks strictly.
template <class T>
T reduce_quotient(const T& a, const T& b) {
  if constexpr (kField<T>) {
    return a / b;
  } else {
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
}

template <class T>
using Columns = std::vector<std::vector<T>>;

template <class T>
Columns<T> to_columns(const Matrix& m) {
  Columns<T> cols(m.cols(), std::vector<T>(m.rows()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (sgn(m(i, j)) != 0) cols[j][i] = convert<T>(m(i, j));
  return cols;
}

template <class T>
Matrix from_columns(const Columns<T>& cols, std::size_t rows, std::size_t count) {
  Matrix m(rows, count);
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (sgn(cols[j][i]) != 0) m(i, j) = Scalar(cols[j][i]);
  return m;
}

// dst -= q * src
template <class T>
void axpy(std::vector<T>& dst, const std::vector<T>& src, const T& q) {
  for (std::size_t i = 0; i < src.size(); ++i)
    if (sgn(src[i]) != 0) dst[i] -= q * src[i];
}

template <class T>
void negate(std::vector<T>& v) {
  for (auto& x : v)
    if (sgn(x) != 0) x = -x;
}

template <class T>
ColumnEchelon echelon_impl(const Matrix& m, bool with_transform) {
  const std::size_t rows = m.rows(), n = m.cols();
  Columns<T> cols = to_columns<T>(m);
  Columns<T> tr;
  if (with_transform) {
    tr.assign(n, std::vector<T>(n));
    for (std::size_t j = 0; j < n; ++j) tr[j][j] = 1;
  }
  ColumnEchelon out;
  std::size_t c = 0;
  for (std::size_t r = 0; r < rows && c < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = c; j < n; ++j) {
        if (sgn(cols[j][r]) == 0) continue;
        if (best == n || abs_value(cols[j][r]) < abs_value(cols[best][r])) best = j;
      }
      if (best == n) break;
      std::swap(cols[c], cols[best]);
      if (with_transform) std::swap(tr[c], tr[best]);
      bool clean = true;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (sgn(cols[j][r]) == 0) continue;
        T q = reduce_quotient(cols[j][r], cols[c][r]);
        axpy(cols[j], cols[c], q);
        if (with_transform) axpy(tr[j], tr[c], q);
        if (sgn(cols[j][r]) != 0) clean = false;
      }
      if (!clean) continue;
      if constexpr (!kField<T>) {
        if (sgn(cols[c][r]) < 0) {
          negate(cols[c]);
          if (with_transform) negate(tr[c]);
        }
      }
      out.pivot_rows.push_back(r);
      ++c;
      break;
    }
  }
  out.rank = c;
  out.H = from_columns(cols, rows, n);
  if (with_transform) out.T = from_columns(tr, n, n);
  return out;
}

// Dense Smith reduction on a row-major array, optionally tracking U, U^{-1}
// and V.  Returns the nonzero diagonal.
template <class T>
struct SmithState {
  std::vector<std::vector<T>> a;  // rows
  std::size_t m = 0, n = 0;
  bool track_u = false, track_v = false;
  std::vector<std::vector<T>> u, uinv, v;  // u, uinv row-major; v row-major

  void row_sub(std::size_t i, std::size_t t, const T& q) {  // row_i -= q row_t
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(a[t][j]) != 0) a[i][j] -= q * a[t][j];
    if (track_u) {
      for (std::size_t j = 0; j < m; ++j)
        if (sgn(u[t][j]) != 0) u[i][j] -= q * u[t][j];
      for (std::size_t k = 0; k < m; ++k)  // uinv: col_t += q col_i
        if (sgn(uinv[k][i]) != 0) uinv[k][t] += q * uinv[k][i];
    }
  }
  void row_swap(std::size_t i, std::size_t t) {
    std::swap(a[i], a[t]);
    if (track_u) {
      std::swap(u[i], u[t]);
      for (std::size_t k = 0; k < m; ++k) std::swap(uinv[k][i], uinv[k][t]);
    }
  }
  void row_scale(std::size_t i, const T& s) {  // s must be a unit
    for (auto& x : a[i])
      if (sgn(x) != 0) x *= s;
    if (track_u) {
      for (auto& x : u[i])
        if (sgn(x) != 0) x *= s;
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(uinv[k][i]) != 0) uinv[k][i] /= s;
    }
  }
  void col_sub(std::size_t j, std::size_t t, const T& q) {  // col_j -= q col_t
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(a[i][t]) != 0) a[i][j] -= q * a[i][t];
    if (track_v)
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(v[i][t]) != 0) v[i][j] -= q * v[i][t];
  }
  void col_swap(std::size_t j, std::size_t t) {
    for (std::size_t i = 0; i < m; ++i) std::swap(a[i][j], a[i][t]);
    if (track_v)
      for (std::size_t i = 0; i < n; ++i) std::swap(v[i][j], v[i][t]);
  }

  std::vector<T> run() {
    std::vector<T> diag;
    const std::size_t lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
      if (!move_min_to(t, t, true)) break;
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (sgn(a[i][t]) == 0) continue;
          row_sub(i, t, reduce_quotient(a[i][t], a[t][t]));
          if (sgn(a[i][t]) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (sgn(a[t][j]) == 0) continue;
          col_sub(j, t, reduce_quotient(a[t][j], a[t][t]));
          if (sgn(a[t][j]) != 0) dirty = true;
        }
        if (dirty) {
          move_min_to(t, t, false);
          continue;
        }
        if constexpr (!kField<T>) {
          bool fixed = false;
          for (std::size_t i = t + 1; i < m && !fixed; ++i)
            for (std::size_t j = t + 1; j < n; ++j) {
              if (sgn(a[i][j]) == 0) continue;
              if (mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) continue;
              row_sub(t, i, T(-1));  // row_t += row_i
              fixed = true;
              break;
            }
          if (fixed) continue;
        }
        break;
      }
      if constexpr (kField<T>) {
        if (a[t][t] != 1) row_scale(t, T(1) / a[t][t]);
      } else {
        if (sgn(a[t][t]) < 0) row_scale(t, T(-1));
      }
      diag.push_back(a[t][t]);
    }
    return diag;
  }

  // Moves the smallest nonzero entry of the trailing block (or only of row t
  // and column t when `whole` is false) to position (t, t).
  bool move_min_to(std::size_t t, std::size_t, bool whole) {
    std::size_t bi = m, bj = n;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (sgn(a[i][j]) == 0) return;
      if (bi == m || abs_value(a[i][j]) < abs_value(a[bi][bj])) {
        bi = i;
        bj = j;
      }
    };
    if (whole) {
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) consider(i, j);
    } else {
      for (std::size_t i = t; i < m; ++i) consider(i, t);
      for (std::size_t j = t; j < n; ++j) consider(t, j);
    }
    if (bi == m) return false;
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
    return true;
  }
};

template <class T>
SmithState<T> make_state(const Matrix& mat, bool track_u, bool track_v) {
  SmithState<T> s;
  s.m = mat.rows();
  s.n = mat.cols();
  s.a.assign(s.m, std::vector<T>(s.n));
  for (std::size_t i = 0; i < s.m; ++i)
    for (std::size_t j = 0; j < s.n; ++j)
      if (sgn(mat(i, j)) != 0) s.a[i][j] = convert<T>(mat(i, j));
  s.track_u = track_u;
  s.track_v = track_v;
  auto ident = [](std::size_t k) {
    std::vector<std::vector<T>> id(k, std::vector<T>(k));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    return id;
  };
  if (track_u) {
    s.u = ident(s.m);
    s.uinv = ident(s.m);
  }
  if (track_v) s.v = ident(s.n);
  return s;
}

template <class T>
Matrix rows_to_matrix(const std::vector<std::vector<T>>& r, std::size_t m, std::size_t n) {
  Matrix out(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(r[i][j]) != 0) out(i, j) = Scalar(r[i][j]);
  return out;
}

template <class T>
SmithForm smith_impl(const Matrix& mat) {
  auto s = make_state<T>(mat, true, true);
  s.run();
  return {rows_to_matrix(s.u, s.m, s.m), rows_to_matrix(s.a, s.m, s.n), rows_to_matrix(s.v, s.n, s.n)};
}

// Sparse elimination of unit pivots, then dense Smith on the remainder.
template <class T>
Invariants invariants_impl(std::size_t gens, const Matrix& relations) {
  struct Rel {
    std::map<std::size_t, T> e;
    bool alive = true;
  };
  std::vector<Rel> rels;
  rels.reserve(relations.cols());
  std::vector<std::set<std::size_t>> occ(gens);
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    Rel r;
    for (std::size_t i = 0; i < gens; ++i)
      if (sgn(relations(i, j)) != 0) r.e.emplace(i, convert<T>(relations(i, j)));
    if (r.e.empty()) continue;
    for (const auto& [g, _] : r.e) occ[g].insert(rels.size());
    rels.push_back(std::move(r));
  }
  std::vector<bool> gen_alive(gens, true);
  std::vector<std::size_t> order(rels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return rels[x].e.size() < rels[y].e.size(); });
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t id : order) {
      Rel& r = rels[id];
      if (!r.alive || r.e.empty()) continue;
      std::size_t pg = gens;
      for (const auto& [g, v] : r.e)
        if (is_unit(v) && (pg == gens || occ[g].size() < occ[pg].size())) pg = g;
      if (pg == gens) continue;
      const T pv = r.e.at(pg);
      std::vector<std::size_t> others(occ[pg].begin(), occ[pg].end());
      for (std::size_t oid : others) {
        if (oid == id) continue;
        Rel& o = rels[oid];
        T f = o.e.at(pg) / pv;
        for (const auto& [h, w] : r.e) {
          T& slot = o.e[h];
          slot -= f * w;
          if (sgn(slot) == 0) {
            o.e.erase(h);
            occ[h].erase(oid);
          } else {
            occ[h].insert(oid);
          }
        }
      }
      for (const auto& [h, _] : r.e) occ[h].erase(id);
      r.alive = false;
      r.e.clear();
      gen_alive[pg] = false;
      progress = true;
    }
  }
  std::vector<std::size_t> gidx;
  std::vector<std::size_t> pos(gens, gens);
  for (std::size_t g = 0; g < gens; ++g)
    if (gen_alive[g]) {
      pos[g] = gidx.size();
      gidx.push_back(g);
    }
  std::vector<std::size_t> ridx;
  for (std::size_t k = 0; k < rels.size(); ++k)
    if (rels[k].alive && !rels[k].e.empty()) ridx.push_back(k);
  Matrix rest(gidx.size(), ridx.size());
  for (std::size_t c = 0; c < ridx.size(); ++c)
    for (const auto& [g, v] : rels[ridx[c]].e) rest(pos[g], c) = Scalar(v);

  Invariants inv;
  if (rest.cols() > rest.rows()) {
    Ring ring = kField<T> ? Ring::Rationals : Ring::Integers;
    auto ech = column_echelon(rest, ring, false);
    rest = ech.H.block(0, 0, rest.rows(), ech.rank);
  }
  auto s = make_state<T>(rest, false, false);
  auto diag = s.run();
  inv.free_rank = gidx.size() - diag.size();
  if constexpr (!kField<T>) {
    for (const auto& d : diag)
      if (d != 1) inv.torsion.push_back(d);
  }
  return inv;
}

template <class T>
SmithPresentation presentation_impl(std::size_t gens, const Matrix& relations) {
  Ring ring = kField<T> ? Ring::Rationals : Ring::Integers;
  Matrix rel = relations;
  if (rel.cols() > 0) {
    auto ech = column_echelon(rel, ring, false);
    rel = ech.H.block(0, 0, gens, ech.rank);
  } else {
    rel = Matrix(gens, 0);
  }
  auto s = make_state<T>(rel, true, false);
  auto diag = s.run();
  std::vector<std::size_t> keep;
  std::vector<T> tors;
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (!is_unit(diag[i])) {
      keep.push_back(i);
      tors.push_back(diag[i]);
    }
  for (std::size_t i = diag.size(); i < gens; ++i) keep.push_back(i);
  Matrix u = rows_to_matrix(s.u, gens, gens);
  Matrix uinv = rows_to_matrix(s.uinv, gens, gens);
  SmithPresentation out;
  out.gens = keep.size();
  out.relations = Matrix(keep.size(), tors.size());
  for (std::size_t k = 0; k < tors.size(); ++k) out.relations(k, k) = Scalar(tors[k]);
  out.to = u.select_rows(keep);
  out.from = uinv.select_columns(keep);
  return out;
}

}  // namespace

SmithForm smith_normal_form(const Matrix& m, Ring ring) {
  return ring == Ring::Integers ? smith_impl<mpz_class>(m) : smith_impl<mpq_class>(m);
}

Invariants presentation_invariants(std::size_t gens, const Matrix& relations, Ring ring) {
  if (relations.rows() != gens) throw std::invalid_argument("relations: row count must equal generator count");
  return ring == Ring::Integers ? invariants_impl<mpz_class>(gens, relations)
                                : invariants_impl<mpq_class>(gens, relations);
}

SmithPresentation smith_presentation(std::size_t gens, const Matrix& relations, Ring ring) {
  if (relations.rows() != gens) throw std::invalid_argument("relations: row count must equal generator count");
  return ring == Ring::Integers ? presentation_impl<mpz_class>(gens, relations)
                                : presentation_impl<mpq_class>(gens, relations);
}

ColumnEchelon column_echelon(const Matrix& m, Ring ring, bool with_transform) {
  return ring == Ring::Integers ? echelon_impl<mpz_class>(m, with_transform)
                                : echelon_impl<mpq_class>(m, with_transform);
}

Matrix kernel_basis(const Matrix& m, Ring ring) {
  auto ech = column_echelon(m, ring, true);
  return ech.T.block(0, ech.rank, m.cols(), m.cols() - ech.rank);
}

Lattice::Lattice(std::size_t ambient, Ring ring) : ambient_(ambient), ring_(ring), basis_(ambient, 0) {}

Lattice::Lattice(const Matrix& generators, Ring ring) : ambient_(generators.rows()), ring_(ring) {
  auto ech = column_echelon(generators, ring, false);
  basis_ = ech.H.block(0, 0, ambient_, ech.rank);
  pivots_ = std::move(ech.pivot_rows);
}

std::optional<Matrix> Lattice::coordinates(const Matrix& vectors) const {
  if (vectors.rows() != ambient_) throw std::invalid_argument("lattice coordinates: dimension mismatch");
  using Entries = std::vector<std::pair<std::size_t, Scalar>>;
  std::vector<Entries> columns(vectors.cols()), basis_cols(rank());
  vectors.for_each_nonzero([&](std::size_t i, std::size_t c, const Scalar& x) { columns[c].emplace_back(i, x); });
  basis_.for_each_nonzero([&](std::size_t i, std::size_t j, const Scalar& x) { basis_cols[j].emplace_back(i, x); });
  Matrix out(rank(), vectors.cols());
  std::vector<Scalar> v(ambient_);
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < vectors.cols(); ++c) {
    touched.clear();
    for (const auto& [i, x] : columns[c]) {
      v[i] = x;
      touched.push_back(i);
    }
    bool ok = true;
    for (std::size_t j = 0; ok && j < rank(); ++j) {
      const std::size_t p = pivots_[j];
      if (sgn(v[p]) == 0) continue;
      Scalar y = v[p] / basis_(p, j);
      if (ring_ == Ring::Integers && y.get_den() != 1) ok = false;
      out(j, c) = y;
      for (const auto& [i, b] : basis_cols[j]) {
        v[i] -= y * b;
        touched.push_back(i);
      }
    }
    for (std::size_t i : touched) {
      if (sgn(v[i]) != 0) ok = false;
      v[i] = 0;
    }
    if (!ok) return std::nullopt;
  }
  return out;
}

bool Lattice::contains(const Matrix& vectors) const { return coordinates(vectors).has_value(); }

std::optional<Matrix> inverse(const Matrix& m, Ring ring) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i)
      if (sgn(a[i][c]) != 0) {
        p = i;
        break;
      }
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    mpq_class piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j)
        if (sgn(a[c][j]) != 0) a[i][j] -= f * a[c][j];
    }
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j];
  if (ring == Ring::Integers && !inv.is_integral()) return std::nullopt;
  return inv;
}

std::size_t rank(const Matrix& m) { return column_echelon(m, Ring::Rationals, false).rank; }

}  // namespace hzalg
