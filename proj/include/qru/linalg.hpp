// Dense exact linear algebra over Q(zeta_N): products, RREF, rank,
// nullspace, inverse, Kronecker products.  Dimensions here stay small
// (at most N^3 for the regular representation), so dense Gaussian
// elimination with exact division is the right tool.
#pragma once

#include <cassert>
#include <vector>

#include "qru/cyclo.hpp"

namespace qru {

class Matrix {
 public:
  Matrix() : fld_(nullptr), rows_(0), cols_(0) {}
  Matrix(const Field& f, long rows, long cols)
      : fld_(&f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const Field& f, long n) {
    Matrix m(f, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  const Field& field() const { return *fld_; }
  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Scalar& at(long i, long j) { return data_[i * cols_ + j]; }
  const Scalar& at(long i, long j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix r(*a.fld_, a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (long j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }
  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x *= s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(*fld_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }
  Matrix conj_transpose() const {
    Matrix r(*fld_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
  }

  Scalar trace() const {
    Scalar t = Scalar::zero(*fld_);
    for (long i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
  }

  Matrix pow(long e) const {
    assert(rows_ == cols_ && e >= 0);
    Matrix r = identity(*fld_, rows_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  static Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long j = 0; j < a.cols_; ++j) {
        if (a.at(i, j).is_zero()) continue;
        for (long k = 0; k < b.rows_; ++k)
          for (long l = 0; l < b.cols_; ++l)
            if (!b.at(k, l).is_zero())
              r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
      }
    return r;
  }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<long> rref() {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < cols_ && row < rows_; ++col) {
      long p = -1;
      for (long i = row; i < rows_; ++i)
        if (!at(i, col).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != row)
        for (long j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
      Scalar inv = at(row, col).inverse();
      for (long j = col; j < cols_; ++j) at(row, j) *= inv;
      for (long i = 0; i < rows_; ++i) {
        if (i == row || at(i, col).is_zero()) continue;
        Scalar f = at(i, col);
        for (long j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  long rank() const {
    Matrix m = *this;
    return static_cast<long>(m.rref().size());
  }

  /// Columns form a basis of the kernel {v : A v = 0}.
  Matrix nullspace() const {
    Matrix m = *this;
    std::vector<long> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (long p : pivots) is_pivot[p] = true;
    long nfree = cols_ - static_cast<long>(pivots.size());
    Matrix basis(*fld_, cols_, nfree);
    long bcol = 0;
    for (long col = 0; col < cols_; ++col) {
      if (is_pivot[col]) continue;
      basis.at(col, bcol) = Scalar::one(*fld_);
      for (size_t r = 0; r < pivots.size(); ++r)
        basis.at(pivots[r], bcol) = -m.at(static_cast<long>(r), col);
      ++bcol;
    }
    return basis;
  }

  Matrix inverse() const {
    assert(rows_ == cols_);
    Matrix aug(*fld_, rows_, 2 * cols_);
    for (long i = 0; i < rows_; ++i) {
      for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = Scalar::one(*fld_);
    }
    auto pivots = aug.rref();
    if (static_cast<long>(pivots.size()) != rows_)
      throw std::domain_error("Matrix::inverse: singular matrix");
    Matrix r(*fld_, rows_, cols_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
  }

  /// Solve A X = B; requires a solution to exist (checked exactly).
  Matrix solve(const Matrix& b) const {
    assert(rows_ == b.rows_);
    Matrix aug(*fld_, rows_, cols_ + b.cols_);
    for (long i = 0; i < rows_; ++i) {
      for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      for (long j = 0; j < b.cols_; ++j) aug.at(i, cols_ + j) = b.at(i, j);
    }
    Matrix work = aug;
    auto pivots = work.rref();
    Matrix x(*fld_, cols_, b.cols_);
    for (size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] >= cols_) throw std::domain_error("Matrix::solve: inconsistent system");
      for (long j = 0; j < b.cols_; ++j) x.at(pivots[r], j) = work.at(static_cast<long>(r), cols_ + j);
    }
    return x;
  }

  /// Horizontal concatenation of column blocks.
  static Matrix hcat(const std::vector<Matrix>& blocks) {
    long cols = 0;
    for (const auto& b : blocks) cols += b.cols_;
    Matrix r(blocks.front().field(), blocks.front().rows_, cols);
    long off = 0;
    for (const auto& b : blocks) {
      for (long i = 0; i < b.rows_; ++i)
        for (long j = 0; j < b.cols_; ++j) r.at(i, off + j) = b.at(i, j);
      off += b.cols_;
    }
    return r;
  }

  Matrix col(long j) const {
    Matrix c(*fld_, rows_, 1);
    for (long i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
  }

 private:
  const Field* fld_;
  long rows_, cols_;
  std::vector<Scalar> data_;
};

// ---- rational (Q-linear) elimination, used where a system is only
// Q-linear because complex conjugation is involved ----

inline long rat_rref(std::vector<std::vector<Rat>>& m) {
  long rows = static_cast<long>(m.size());
  if (rows == 0) return 0;
  long cols = static_cast<long>(m[0].size());
  long row = 0;
  for (long col = 0; col < cols && row < rows; ++col) {
    long p = -1;
    for (long i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    Rat inv = 1 / m[row][col];
    for (long j = col; j < cols; ++j) m[row][j] *= inv;
    for (long i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (long j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  return row;
}

}  // namespace qru
