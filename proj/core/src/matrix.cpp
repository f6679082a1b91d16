#include "corrgap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace corrgap {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_columns(const std::vector<CVec>& cols) {
  if (cols.empty()) throw std::invalid_argument("from_columns: no columns");
  const std::size_t n = cols.front().size();
  for (const auto& c : cols) {
    if (c.size() != n) throw std::invalid_argument("from_columns: ragged columns");
  }
  Matrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, j) += aik * rhs(k, j);
    }
  }
  return m;
}

CVec Matrix::operator*(const CVec& x) const {
  if (cols_ != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  CVec y(rows_, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < rows_; ++i) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += rhs.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= rhs.data_[i];
  return m;
}

Matrix Matrix::scaled(cplx factor) const {
  Matrix m = *this;
  for (auto& v : m.data_) v *= factor;
  return m;
}

CVec Matrix::column(std::size_t j) const {
  CVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const CVec& v) {
  if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::frobenius() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double Matrix::hermiticity_defect() const {
  if (rows_ != cols_) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return m;
}

Matrix Matrix::hermitian_part() const {
  if (rows_ != cols_) throw std::invalid_argument("hermitian_part: matrix not square");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    }
  }
  return m;
}

cplx inner(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: length mismatch");
  cplx s(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const CVec& a) { return std::sqrt(std::real(inner(a, a))); }

void normalize(CVec& a) {
  const double n = norm(a);
  if (n == 0.0) throw std::invalid_argument("normalize: zero vector");
  for (auto& v : a) v /= n;
}

cplx det(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return cplx(1.0, 0.0);
  Matrix lu = a;
  cplx d(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return cplx(0.0, 0.0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      d = -d;
    }
    d *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return d;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace corrgap
