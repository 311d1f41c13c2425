#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

// Dense complex matrix kernel for the tiny Hilbert spaces of this project
// (dimensions 2, 4, 8 and 16).  Everything is value-semantic and pure; no
// operation mutates its inputs.

namespace dephsim {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  // Zero matrix.  Rows and cols must each be one of {2, 4, 8, 16}.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  // Dense construction from row-major data; rejects non-finite entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix adjoint() const;

  Complex trace() const;
  double frobenius_norm() const;
  // Induced infinity norm (max absolute row sum).
  double inf_norm() const;
  double max_abs() const;
  // max |m(i,j) - conj(m(j,i))|; zero for exactly Hermitian matrices.
  double hermiticity_deviation() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;  // row-major
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; rejects results larger than 16x16.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct Eigensystem {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, same order
};

// Cyclic Jacobi diagonalization of a Hermitian matrix.  The input must be
// Hermitian within tol::hermiticity; otherwise the call is rejected with the
// offending deviation in the message.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

// exp(m) by scaling-and-squaring with a fixed-order truncated series.  The
// generator norms in this project reach ~2 * (Omega1/gamma) * gammaT, far
// beyond the naive series radius, hence the scaling step.
ComplexMatrix matrix_exponential(const ComplexMatrix& m);

// Hermitian PSD square root.  Eigenvalues in [-tol::psd_eigenvalue, 0) are
// clamped to zero; anything lower is rejected as not PSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

}  // namespace dephsim
