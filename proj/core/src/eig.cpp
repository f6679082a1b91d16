#include "corrgap/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace corrgap {

namespace {

double offdiag_frobenius(const Matrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// One rotation in the (p, q) plane zeroing a(p, q).
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx w = apq / mag;  // phase of the pivot
  const double app = std::real(a(p, p));
  const double aqq = std::real(a(q, q));
  const double tau = (aqq - app) / (2.0 * mag);
  double t;
  if (tau >= 0.0) {
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  } else {
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  // A <- J^dag A J with J(p,p)=c, J(p,q)=s*w, J(q,p)=-s*conj(w), J(q,q)=c.
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = c * akp - s * std::conj(w) * akq;
    a(k, q) = s * w * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = c * apk - s * w * aqk;
    a(q, k) = s * std::conj(w) * apk + c * aqk;
  }
  a(p, q) = cplx(0.0, 0.0);
  a(q, p) = cplx(0.0, 0.0);
  a(p, p) = cplx(std::real(a(p, p)), 0.0);
  a(q, q) = cplx(std::real(a(q, q)), 0.0);

  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = c * vkp - s * std::conj(w) * vkq;
    v(k, q) = s * w * vkp + c * vkq;
  }
}

// Modified Gram-Schmidt over a span of columns.
void reorthonormalize(Matrix& v, std::size_t lo, std::size_t hi) {
  for (std::size_t j = lo; j < hi; ++j) {
    CVec col = v.column(j);
    for (std::size_t k = lo; k < j; ++k) {
      const CVec prev = v.column(k);
      const cplx ov = inner(prev, col);
      for (std::size_t i = 0; i < col.size(); ++i) col[i] -= ov * prev[i];
    }
    normalize(col);
    v.set_column(j, col);
  }
}

}  // namespace

EigenSystem eigh(const Matrix& a_in) {
  if (a_in.rows() != a_in.cols()) throw std::invalid_argument("eigh: matrix not square");
  const std::size_t n = a_in.rows();
  if (n == 0) throw std::invalid_argument("eigh: empty matrix");

  const double scale = a_in.max_abs();
  if (a_in.hermiticity_defect() > 1e-10 * std::max(1.0, scale)) {
    throw std::invalid_argument("eigh: matrix not Hermitian");
  }

  Matrix a = a_in.hermitian_part();
  Matrix v = Matrix::identity(n);

  const double fro = a.frobenius();
  const double threshold = 1e-13 * fro;
  bool converged = (fro == 0.0) || (n == 1);
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    if (offdiag_frobenius(a) <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }
  if (!converged && offdiag_frobenius(a) > threshold) {
    throw std::runtime_error("eigh: Jacobi sweeps did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::real(a(i, i)) < std::real(a(j, j));
  });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = std::real(a(order[k], order[k]));
    out.vectors.set_column(k, v.column(order[k]));
  }

  // Within a degenerate cluster the rotations can leave slightly
  // non-orthogonal columns; clean them up.
  const double cluster_tol = 1e-8 * std::max(1.0, scale);
  std::size_t lo = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == n || out.values[k] - out.values[k - 1] > cluster_tol) {
      if (k - lo > 1) reorthonormalize(out.vectors, lo, k);
      lo = k;
    }
  }
  return out;
}

}  // namespace corrgap
