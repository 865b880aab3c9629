#pragma once

// Matrices with exact rational entries.  Integer matrices are the special
// case where every entry has denominator one.  Large matrices are stored as
// one ordered map per row; small ones densely.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace hzalg {

using Scalar = mpq_class;

enum class Ring { Integers, Rationals };

std::string ring_name(Ring ring);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix scalar(std::size_t n, const Scalar& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  /// On sparse storage this inserts an explicit entry.
  Scalar& operator()(std::size_t i, std::size_t j) { return sparse_ ? rowmap_[i][j] : data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    if (!sparse_) return data_[i * cols_ + j];
    auto it = rowmap_[i].find(j);
    return it == rowmap_[i].end() ? zero_ : it->second;
  }
  bool sparse() const { return sparse_; }

  /// f(i, j, value) over the nonzero entries, row by row.
  template <class F>
  void for_each_nonzero(F&& f) const {
    for (std::size_t i = 0; i < rows_; ++i) for_each_in_row(i, [&](std::size_t j, const Scalar& v) { f(i, j, v); });
  }
  /// f(j, value) over the nonzero entries of row i.
  template <class F>
  void for_each_in_row(std::size_t i, F&& f) const {
    if (sparse_) {
      for (const auto& [j, v] : rowmap_[i])
        if (sgn(v) != 0) f(j, v);
    } else {
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(data_[i * cols_ + j]) != 0) f(j, data_[i * cols_ + j]);
    }
  }
  std::size_t nonzeros() const;

  bool is_zero() const;
  bool is_integral() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix column(std::size_t j) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& m, const Scalar& factor = 1);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  static const Scalar zero_;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool sparse_ = false;
  std::vector<Scalar> data_;
  std::vector<std::map<std::size_t, Scalar>> rowmap_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Column-major vectorization, vec(A X B) = (B^T kron A) vec(X).
Matrix vec(const Matrix& m);
Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

/// Permutation matrix sending basis vector j to basis vector perm[j].
Matrix permutation_matrix(const std::vector<std::size_t>& perm);

/// Entries drawn uniformly from [lo, hi]; deterministic given the engine state.
template <class Engine>
Matrix random_matrix(Engine& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      auto span = static_cast<unsigned long>(hi - lo + 1);
      m(i, j) = lo + static_cast<long>(rng() % span);
    }
  return m;
}

}  // namespace hzalg
