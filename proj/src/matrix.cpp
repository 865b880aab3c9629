#include "hzalg/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hzalg {

std::string ring_name(Ring ring) { return ring == Ring::Integers ? "Z" : "Q"; }

namespace {
// Above this many cells a matrix is stored sparsely.
constexpr std::size_t kSparseCells = std::size_t(1) << 14;
}  // namespace

const Scalar Matrix::zero_ = 0;

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows > 1 && cols > 1 && rows * cols > kSparseCells) {
    sparse_ = true;
    rowmap_.resize(rows);
  } else {
    data_.resize(rows * cols);
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::scalar(std::size_t n, const Scalar& value) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for_each_nonzero([&](std::size_t, std::size_t, const Scalar&) { ++n; });
  return n;
}

bool Matrix::is_zero() const { return nonzeros() == 0; }

bool Matrix::is_integral() const {
  bool ok = true;
  for_each_nonzero([&](std::size_t, std::size_t, const Scalar& x) { ok = ok && x.get_den() == 1; });
  return ok;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  std::size_t diagonal = 0;
  bool ok = true;
  for_each_nonzero([&](std::size_t i, std::size_t j, const Scalar& x) {
    if (i != j || x != 1) ok = false;
    else ++diagonal;
  });
  return ok && diagonal == rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for_each_nonzero([&](std::size_t i, std::size_t j, const Scalar& x) { t(j, i) = x; });
  return t;
}

Matrix Matrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix out(rows_, idx.size());
  std::vector<std::vector<std::size_t>> where(cols_);
  for (std::size_t k = 0; k < idx.size(); ++k) where.at(idx[k]).push_back(k);
  for_each_nonzero([&](std::size_t i, std::size_t j, const Scalar& x) {
    for (std::size_t k : where[j]) out(i, k) = x;
  });
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix out(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for_each_in_row(idx.at(k), [&](std::size_t j, const Scalar& x) { out(k, j) = x; });
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block");
  Matrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (sparse_) {
      const auto& row = rowmap_[r0 + i];
      for (auto it = row.lower_bound(c0); it != row.end() && it->first < c0 + nc; ++it)
        if (sgn(it->second) != 0) out(i, it->first - c0) = it->second;
    } else {
      for (std::size_t j = 0; j < nc; ++j)
        if (sgn(data_[(r0 + i) * cols_ + c0 + j]) != 0) out(i, j) = data_[(r0 + i) * cols_ + c0 + j];
    }
  }
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("set_block");
  if (sparse_) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      auto& row = rowmap_[r0 + i];
      row.erase(row.lower_bound(c0), row.lower_bound(c0 + m.cols_));
    }
  } else {
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] = 0;
  }
  m.for_each_nonzero([&](std::size_t i, std::size_t j, const Scalar& x) { (*this)(r0 + i, c0 + j) = x; });
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& m, const Scalar& factor) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("add_block");
  m.for_each_nonzero([&](std::size_t i, std::size_t j, const Scalar& x) { (*this)(r0 + i, c0 + j) += factor * x; });
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  add_block(0, 0, other, 1);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  add_block(0, 0, other, -1);
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (sgn(x) != 0) x *= s;
  for (auto& row : rowmap_)
    for (auto& [j, x] : row)
      if (sgn(x) != 0) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  a.for_each_nonzero([&](std::size_t i, std::size_t k, const Scalar& aik) {
    b.for_each_in_row(k, [&](std::size_t j, const Scalar& bkj) { c(i, j) += aik * bkj; });
  });
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (!a.sparse_ && !b.sparse_) return a.data_ == b.data_;
  bool same = true;
  a.for_each_nonzero([&](std::size_t i, std::size_t j, const Scalar& x) { same = same && b(i, j) == x; });
  return same && a.nonzeros() == b.nonzeros();
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  a.for_each_nonzero([&](std::size_t i, std::size_t j, const Scalar& x) {
    b.for_each_nonzero(
        [&](std::size_t k, std::size_t l, const Scalar& y) { out(i * b.rows() + k, j * b.cols() + l) = x * y; });
  });
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += p.cols();
  }
  Matrix out(rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix out(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Matrix vec(const Matrix& m) {
  Matrix v(m.rows() * m.cols(), 1);
  m.for_each_nonzero([&](std::size_t i, std::size_t j, const Scalar& x) { v(j * m.rows() + i, 0) = x; });
  return v;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows() != rows * cols || v.cols() != 1) throw std::invalid_argument("unvec: shape mismatch");
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (sgn(v(j * rows + i, 0)) != 0) m(i, j) = v(j * rows + i, 0);
  return m;
}

Matrix permutation_matrix(const std::vector<std::size_t>& perm) {
  Matrix p(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) p(perm[j], j) = 1;
  return p;
}

}  // namespace hzalg
