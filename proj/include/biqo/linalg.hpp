#ifndef BIQO_LINALG_HPP
#define BIQO_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "biqo/errors.hpp"

namespace biqo {

using Complex = std::complex<double>;

// Dense complex column vector. Dimensions in this library are tiny (2 to 8),
// so everything is stored flat and copied by value.
class Vector {
public:
  Vector() = default;
  explicit Vector(std::size_t dim) : e_(dim) {}
  Vector(std::initializer_list<Complex> init) : e_(init) {}

  std::size_t dim() const { return e_.size(); }
  Complex &operator[](std::size_t i) { return e_[i]; }
  const Complex &operator[](std::size_t i) const { return e_[i]; }

  double norm() const;

private:
  std::vector<Complex> e_;
};

// Dense complex matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex &operator()(std::size_t i, std::size_t j) {
    return e_[i * cols_ + j];
  }
  const Complex &operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  Matrix adjoint() const;
  Complex trace() const;
  double max_abs() const;        // max |entry|
  double frobenius_norm() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Complex> e_;
};

Matrix operator+(const Matrix &a, const Matrix &b);
Matrix operator-(const Matrix &a, const Matrix &b);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator*(Complex s, const Matrix &m);
Vector operator*(const Matrix &m, const Vector &v);

// <a|b>, conjugate-linear in the first argument.
Complex inner(const Vector &a, const Vector &b);

// |a><b|
Matrix outer(const Vector &a, const Vector &b);

// Kronecker products with index convention (i_a * rows_b + i_b).
Matrix tensor_product(const Matrix &a, const Matrix &b);
Vector tensor_product(const Vector &a, const Vector &b);

// Which tensor factor a partial trace keeps.
enum class Factor { First, Second };

// Reduce a (d1*d2)-dim operator to the kept factor, summing out the other.
// Throws DimensionError if the operator is not square of size d1*d2.
Matrix partial_trace(const Matrix &m, Factor keep, std::size_t d1,
                     std::size_t d2);

struct EigenSystem {
  std::vector<double> values; // descending
  Matrix vectors;             // column k pairs with values[k]
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Throws DomainError if the input fails the Hermiticity check
// (max |A - A^dag| entry above 1e-12).
EigenSystem hermitian_eigen(const Matrix &m);

// Sum of absolute eigenvalues, tr|A|, for Hermitian A.
double trace_norm(const Matrix &m);

// -sum lambda log2 lambda in bits, with 0 log 0 = 0. The input must be a
// density operator: Hermitian, unit trace (1e-12), eigenvalues >= -1e-10.
double von_neumann_entropy(const Matrix &rho);

// -p log2 p - (1-p) log2(1-p); exact 0 at the endpoints. Accepts p within
// 1e-12 outside [0,1] (clamped); beyond that throws DomainError.
double binary_entropy(double p);

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kDensityTrace = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;
inline constexpr double kJacobiOffDiagonal = 1e-14;
} // namespace tol

} // namespace biqo

#endif
