#include "biqo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace biqo {

double Vector::norm() const {
  double s = 0.0;
  for (const auto &c : e_) s += std::norm(c);
  return std::sqrt(s);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex Matrix::trace() const {
  if (rows_ != cols_) throw DimensionError("trace: matrix is not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto &c : e_) m = std::max(m, std::abs(c));
  return m;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto &c : e_) s += std::norm(c);
  return std::sqrt(s);
}

namespace {

void require_same_shape(const Matrix &a, const Matrix &b, const char *op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape mismatch");
}

} // namespace

Matrix operator+(const Matrix &a, const Matrix &b) {
  require_same_shape(a, b, "operator+");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
  require_same_shape(a, b, "operator-");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw DimensionError("operator*: inner dimensions do not match");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator*(Complex s, const Matrix &m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  return out;
}

Vector operator*(const Matrix &m, const Vector &v) {
  if (m.cols() != v.dim())
    throw DimensionError("operator*: matrix/vector dimension mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Complex inner(const Vector &a, const Vector &b) {
  if (a.dim() != b.dim())
    throw DimensionError("inner: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Matrix outer(const Vector &a, const Vector &b) {
  Matrix out(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      out(i, j) = a[i] * std::conj(b[j]);
  return out;
}

Matrix tensor_product(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex f = a(ia, ja);
      if (f == Complex(0.0)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
    }
  return out;
}

Vector tensor_product(const Vector &a, const Vector &b) {
  Vector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

Matrix partial_trace(const Matrix &m, Factor keep, std::size_t d1,
                     std::size_t d2) {
  if (m.rows() != m.cols())
    throw DimensionError("partial_trace: matrix is not square");
  if (m.rows() != d1 * d2)
    throw DimensionError("partial_trace: size does not factor as d1*d2");
  const std::size_t dk = (keep == Factor::First) ? d1 : d2;
  const std::size_t dt = (keep == Factor::First) ? d2 : d1;
  Matrix out(dk, dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      Complex s = 0.0;
      for (std::size_t t = 0; t < dt; ++t) {
        // row-major composite index: (first)*d2 + (second)
        const std::size_t r =
            (keep == Factor::First) ? i * d2 + t : t * d2 + i;
        const std::size_t c =
            (keep == Factor::First) ? j * d2 + t : t * d2 + j;
        s += m(r, c);
      }
      out(i, j) = s;
    }
  return out;
}

namespace {

double offdiagonal_mass(const Matrix &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

void require_hermitian(const Matrix &m, const char *op) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(op) + ": matrix is not square");
  double defect = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
  if (defect > tol::kHermitian)
    throw DomainError(std::string(op) + ": matrix is not Hermitian");
}

} // namespace

EigenSystem hermitian_eigen(const Matrix &m) {
  require_hermitian(m, "hermitian_eigen");
  const std::size_t n = m.rows();

  // Work on an exactly Hermitian copy.
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Complex(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  Matrix v = Matrix::identity(n);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiagonal_mass(a) < tol::kJacobiOffDiagonal) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= std::numeric_limits<double>::min()) continue;
        const Complex phase = apq / r; // e^{i phi}
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Unitary on the (p,q) plane: U_pp = c, U_pq = s,
        // U_qp = -s conj(phase), U_qq = c conj(phase).
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        const double app = a(p, p).real() - t * r;
        const double aqq = a(q, q).real() + t * r;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + uqp * akq;
          a(k, q) = s * akp + uqq * akq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + uqp * vkq;
          v(k, q) = s * vkp + uqq * vkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = app;
        a(q, q) = aqq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double trace_norm(const Matrix &m) {
  const EigenSystem es = hermitian_eigen(m);
  double s = 0.0;
  for (double lambda : es.values) s += std::abs(lambda);
  return s;
}

double von_neumann_entropy(const Matrix &rho) {
  require_hermitian(rho, "von_neumann_entropy");
  if (std::abs(rho.trace().real() - 1.0) > tol::kDensityTrace ||
      std::abs(rho.trace().imag()) > tol::kDensityTrace)
    throw DomainError("von_neumann_entropy: trace is not 1");
  const EigenSystem es = hermitian_eigen(rho);
  double h = 0.0;
  for (double lambda : es.values) {
    if (lambda < tol::kEigenvalueFloor)
      throw DomainError("von_neumann_entropy: negative eigenvalue");
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return std::max(h, 0.0);
}

double binary_entropy(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12)
    throw DomainError("binary_entropy: probability outside [0,1]");
  p = std::clamp(p, 0.0, 1.0);
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

} // namespace biqo
