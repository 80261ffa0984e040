#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefkit/dual.hpp"
#include "lefkit/rational.hpp"

namespace lefkit {

// Dense row-major matrix over an exact commutative ring T.
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  Mat(int rows, int cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != size_t(rows) * cols) throw std::invalid_argument("entry count mismatch");
  }
  // Row-of-rows literal, handy in tests.
  Mat(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    e_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
      if (int(r.size()) != cols_) throw std::invalid_argument("ragged rows");
      for (const auto& x : r) e_.push_back(x);
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
  const std::vector<T>& entries() const { return e_; }
  std::vector<T>& entries() { return e_; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!(x == T(0))) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    T s(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
    return s;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    check_same(x, y);
    Mat r(x.rows_, x.cols_);
    for (size_t k = 0; k < x.e_.size(); ++k) r.e_[k] = x.e_[k] + y.e_[k];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    check_same(x, y);
    Mat r(x.rows_, x.cols_);
    for (size_t k = 0; k < x.e_.size(); ++k) r.e_[k] = x.e_[k] - y.e_[k];
    return r;
  }
  friend Mat operator-(const Mat& x) {
    Mat r(x.rows_, x.cols_);
    for (size_t k = 0; k < x.e_.size(); ++k) r.e_[k] = -x.e_[k];
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (xik == T(0)) continue;
        for (int j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend Mat operator*(const T& c, const Mat& x) {
    Mat r(x.rows_, x.cols_);
    for (size_t k = 0; k < x.e_.size(); ++k) r.e_[k] = c * x.e_[k];
    return r;
  }
  Mat& operator+=(const Mat& y) { return *this = *this + y; }
  Mat& operator-=(const Mat& y) { return *this = *this - y; }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<T> r(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == T(0))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  // [X, Y] = XY - YX.
  friend Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

  // Kronecker product in row-major pair order: index (i,j) of the product
  // space is i*y.rows()+j.
  friend Mat kron(const Mat& x, const Mat& y) {
    Mat r(x.rows_ * y.rows_, x.cols_ * y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int j = 0; j < x.cols_; ++j) {
        if (x(i, j) == T(0)) continue;
        for (int p = 0; p < y.rows_; ++p)
          for (int q = 0; q < y.cols_; ++q)
            r(i * y.rows_ + p, j * y.cols_ + q) = x(i, j) * y(p, q);
      }
    return r;
  }

  Mat block(int row0, int col0, int nrows, int ncols) const {
    Mat r(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) r(i, j) = (*this)(row0 + i, col0 + j);
    return r;
  }
  void set_block(int row0, int col0, const Mat& b) {
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) (*this)(row0 + i, col0 + j) = b(i, j);
  }

 private:
  static void check_same(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<T> e_;
};

using QMat = Mat<Rat>;
using QVec = std::vector<Rat>;

inline QVec operator+(const QVec& x, const QVec& y) {
  QVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}
inline QVec operator-(const QVec& x, const QVec& y) {
  QVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}
inline QVec operator*(const Rat& c, const QVec& x) {
  QVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}
inline bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}
inline QVec zero_vec(int n) { return QVec(size_t(n), Rat(0)); }
inline QVec unit_vec(int n, int i) {
  QVec v = zero_vec(n);
  v[size_t(i)] = 1;
  return v;
}

inline Mat<Dual> to_dual(const QMat& m) {
  Mat<Dual> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Dual(m(i, j));
  return r;
}

// Exact derivative at the identity of t -> f(I + tA): evaluate f at I + eps*A
// over dual numbers and read off the eps parts.
inline QMat dual_apply(const std::function<Mat<Dual>(const Mat<Dual>&)>& f, const QMat& a) {
  if (!a.is_square()) throw std::invalid_argument("direction must be square");
  int n = a.rows();
  Mat<Dual> x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = Dual(Rat(i == j ? 1 : 0), a(i, j));
  Mat<Dual> y = f(x);
  QMat r(y.rows(), y.cols());
  for (int i = 0; i < y.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j) r(i, j) = y(i, j).b;
  return r;
}

}  // namespace lefkit
