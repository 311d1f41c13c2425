#include "dephsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dephsim/tolerances.hpp"

namespace dephsim {

namespace {

bool allowed_dim(std::size_t n) { return n == 2 || n == 4 || n == 8 || n == 16; }

void check_dims(std::size_t rows, std::size_t cols) {
  if (!allowed_dim(rows) || !allowed_dim(cols)) {
    std::ostringstream msg;
    msg << "matrix dimensions must be in {2, 4, 8, 16}, got " << rows << "x" << cols;
    throw std::invalid_argument(msg.str());
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  check_dims(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  check_dims(rows, cols);
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("entry count does not match matrix dimensions");
  }
  if (!all_finite()) {
    throw std::invalid_argument("matrix entries must be finite");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.begin()->size()) {
  check_dims(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ragged initializer for ComplexMatrix");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (!all_finite()) {
    throw std::invalid_argument("matrix entries must be finite");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = std::conj(entries_[i]);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

double ComplexMatrix::inf_norm() const {
  double best = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) row += std::abs((*this)(r, c));
    best = std::max(best, row);
  }
  return best;
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const Complex& z : entries_) best = std::max(best, std::abs(z));
  return best;
}

double ComplexMatrix::hermiticity_deviation() const {
  if (rows_ != cols_) throw std::invalid_argument("hermiticity of a non-square matrix");
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), finite);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix addition dimension mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix subtraction dimension mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > 16 || cols > 16) {
    throw std::invalid_argument("kron result exceeds the supported 16x16 size");
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac)
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
  return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c) sum += std::norm(m(r, c));
  return std::sqrt(sum);
}

// One Jacobi rotation annihilating a(p,q).  u carries the phase of the pivot
// so the 2x2 problem reduces to the real symmetric case.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex g = a(p, q);
  const double mag = std::abs(g);
  if (mag == 0.0) return;
  const Complex u = g / mag;

  const double alpha = a(p, p).real();
  const double beta = a(q, q).real();
  const double tau = (beta - alpha) / (2.0 * mag);
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // A <- A U  with U_pp = c, U_pq = s, U_qp = -conj(u) s, U_qq = conj(u) c.
  const std::size_t n = a.rows();
  for (std::size_t r = 0; r < n; ++r) {
    const Complex arp = a(r, p);
    const Complex arq = a(r, q);
    a(r, p) = c * arp - s * std::conj(u) * arq;
    a(r, q) = s * arp + c * std::conj(u) * arq;
  }
  // A <- U^dagger A.
  for (std::size_t col = 0; col < n; ++col) {
    const Complex apc = a(p, col);
    const Complex aqc = a(q, col);
    a(p, col) = c * apc - s * u * aqc;
    a(q, col) = s * apc + c * u * aqc;
  }
  // V <- V U.
  for (std::size_t r = 0; r < n; ++r) {
    const Complex vrp = v(r, p);
    const Complex vrq = v(r, q);
    v(r, p) = c * vrp - s * std::conj(u) * vrq;
    v(r, q) = s * vrp + c * std::conj(u) * vrq;
  }
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigensystem of a non-square matrix");
  const double dev = m.hermiticity_deviation();
  if (dev > tol::hermiticity) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |m - m^dagger| = " << dev;
    throw std::invalid_argument(msg.str());
  }

  const std::size_t n = m.rows();
  // Work on the Hermitian average so the diagonal stays real under rotation.
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  constexpr int max_sweeps = 100;
  double off = off_diagonal_norm(a);
  for (int sweep = 0; sweep < max_sweeps && off > tol::jacobi_off_diagonal; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    const double next = off_diagonal_norm(a);
    if (next >= off) break;  // stalled at rounding level
    off = next;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  Eigensystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix matrix_exponential(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exponential of a non-square matrix");
  if (!m.all_finite()) throw std::invalid_argument("matrix entries must be finite");

  const std::size_t n = m.rows();
  const double norm = m.inf_norm();

  // Scale so the series argument has norm <= 0.5.
  int squarings = 0;
  double scale = 1.0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    scale = std::ldexp(1.0, -squarings);
  }

  ComplexMatrix scaled = m;
  scaled *= scale;

  constexpr int series_order = 16;
  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= series_order; ++k) {
    term = term * scaled;
    term *= 1.0 / static_cast<double>(k);
    sum += term;
  }

  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  if (!sum.all_finite()) throw std::runtime_error("matrix exponential overflowed");
  return sum;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const Eigensystem es = hermitian_eigensystem(m);
  const std::size_t n = m.rows();
  if (es.eigenvalues.front() < -tol::psd_eigenvalue) {
    std::ostringstream msg;
    msg << "matrix is not PSD: min eigenvalue = " << es.eigenvalues.front();
    throw std::invalid_argument(msg.str());
  }

  // V sqrt(diag) V^dagger
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = std::max(es.eigenvalues[k], 0.0);
    const double root = std::sqrt(lambda);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) += root * es.eigenvectors(r, k) * std::conj(es.eigenvectors(c, k));
  }
  return out;
}

}  // namespace dephsim
