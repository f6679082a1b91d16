#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace corrgap {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

// Dense row-major complex matrix. Sized for desk-scale problems
// (dimensions in the tens), so everything is plain loops.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<CVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix adjoint() const;
  Matrix operator*(const Matrix& rhs) const;
  CVec operator*(const CVec& x) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(cplx factor) const;

  CVec column(std::size_t j) const;
  void set_column(std::size_t j, const CVec& v);

  double max_abs() const;
  double frobenius() const;
  double hermiticity_defect() const;  // max |a_ij - conj(a_ji)|
  Matrix hermitian_part() const;      // (A + A^dag)/2

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

cplx inner(const CVec& a, const CVec& b);  // sum conj(a_i) b_i
double norm(const CVec& a);
void normalize(CVec& a);

// Determinant of a square matrix by LU with partial pivoting.
cplx det(const Matrix& a);

Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace corrgap
