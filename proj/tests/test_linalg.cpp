#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dephsim/linalg.hpp"
#include "dephsim/tolerances.hpp"
#include "support/matrix_test_utils.hpp"

using namespace dephsim;
using dephsim::testing::max_entry_diff;
using dephsim::testing::random_hermitian;
using dephsim::testing::random_matrix;
using dephsim::testing::random_psd;

namespace {

const ComplexMatrix kSigmaX{{0.0, 1.0}, {1.0, 0.0}};
const ComplexMatrix kSigmaY{{0.0, Complex(0, 1)}, {Complex(0, -1), 0.0}};
const ComplexMatrix kSigmaZ{{1.0, 0.0}, {0.0, -1.0}};

}  // namespace

TEST_CASE("kron identity cases") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_entry_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

  const ComplexMatrix zi = kron(kSigmaZ, i2);
  ComplexMatrix expected(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(2, 2) = -1.0;
  expected(3, 3) = -1.0;
  CHECK(max_entry_diff(zi, expected) == 0.0);
}

TEST_CASE("kron sigma_y x sigma_y is the spin-flip antidiagonal") {
  // Hand expansion: the only nonzero entries are the antidiagonal
  // (-1, 1, 1, -1), independent of the single-qubit basis ordering.
  const ComplexMatrix yy = kron(kSigmaY, kSigmaY);
  ComplexMatrix expected(4, 4);
  expected(0, 3) = -1.0;
  expected(1, 2) = 1.0;
  expected(2, 1) = 1.0;
  expected(3, 0) = -1.0;
  CHECK(max_entry_diff(yy, expected) < 1e-15);
}

TEST_CASE("kron rejects results beyond 16x16") {
  CHECK_THROWS_AS(kron(ComplexMatrix::identity(4), ComplexMatrix::identity(8)),
                  std::invalid_argument);
}

TEST_CASE("kron bilinearity and mixed product on random 2x2 inputs") {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 200; ++it) {
    const ComplexMatrix a = random_matrix(rng, 2);
    const ComplexMatrix b = random_matrix(rng, 2);
    const ComplexMatrix c = random_matrix(rng, 2);
    const ComplexMatrix d = random_matrix(rng, 2);

    // (A + C) x B = A x B + C x B
    CHECK(max_entry_diff(kron(a + c, b), kron(a, b) + kron(c, b)) < 1e-12);
    // (A x B)(C x D) = AC x BD
    CHECK(max_entry_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("hermitian_eigensystem basic spectra") {
  const Eigensystem id = hermitian_eigensystem(ComplexMatrix::identity(4));
  for (double ev : id.eigenvalues) CHECK(ev == doctest::Approx(1.0).epsilon(1e-14));

  const Eigensystem sx = hermitian_eigensystem(kSigmaX);
  CHECK(sx.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(sx.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  ComplexMatrix diag(4, 4);
  diag(0, 0) = 0.05;
  diag(1, 1) = 0.05;
  diag(2, 2) = 0.05;
  diag(3, 3) = 0.85;
  const Eigensystem d = hermitian_eigensystem(diag);
  CHECK(d.eigenvalues[0] == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(d.eigenvalues[1] == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(d.eigenvalues[2] == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(d.eigenvalues[3] == doctest::Approx(0.85).epsilon(1e-14));
}

TEST_CASE("hermitian_eigensystem rejects non-Hermitian input") {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m(0, 1) = 0.5;  // asymmetric
  CHECK_THROWS_AS(hermitian_eigensystem(m), std::invalid_argument);
}

TEST_CASE("hermitian_eigensystem reconstructs 1000 random Hermitian 4x4 matrices") {
  std::mt19937_64 rng(202);
  double worst_recon = 0.0;
  double worst_unitary = 0.0;
  double worst_residual = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const ComplexMatrix m = random_hermitian(rng, 4);
    const Eigensystem es = hermitian_eigensystem(m);

    // ascending order
    for (std::size_t k = 1; k < es.eigenvalues.size(); ++k)
      CHECK(es.eigenvalues[k - 1] <= es.eigenvalues[k]);

    // V diag(lambda) V^dagger == m
    ComplexMatrix recon(4, 4);
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          recon(r, c) += es.eigenvalues[k] * es.eigenvectors(r, k) *
                         std::conj(es.eigenvectors(c, k));
    worst_recon = std::max(worst_recon, max_entry_diff(recon, m));

    worst_unitary = std::max(
        worst_unitary, max_entry_diff(es.eigenvectors.adjoint() * es.eigenvectors,
                                      ComplexMatrix::identity(4)));

    // m v_k = lambda_k v_k
    const ComplexMatrix mv = m * es.eigenvectors;
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t r = 0; r < 4; ++r)
        worst_residual = std::max(
            worst_residual, std::abs(mv(r, k) - es.eigenvalues[k] * es.eigenvectors(r, k)));
  }
  CHECK(worst_recon < 1e-9);
  CHECK(worst_unitary < 1e-10);
  CHECK(worst_residual < 1e-10);
}

TEST_CASE("matrix_exponential special cases") {
  CHECK(max_entry_diff(matrix_exponential(ComplexMatrix(4, 4)), ComplexMatrix::identity(4)) ==
        0.0);

  ComplexMatrix diag(4, 4);
  diag(0, 0) = 0.3;
  diag(1, 1) = -1.2;
  diag(2, 2) = 2.5;
  diag(3, 3) = 0.0;
  const ComplexMatrix e = matrix_exponential(diag);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::abs(e(i, i) - std::exp(diag(i, i))) < 1e-13);

  const ComplexMatrix nilpotent{{0.0, 1.0}, {0.0, 0.0}};
  const ComplexMatrix en = matrix_exponential(nilpotent);
  CHECK(en(0, 0) == Complex(1.0));
  CHECK(en(0, 1) == Complex(1.0));
  CHECK(en(1, 0) == Complex(0.0));
  CHECK(en(1, 1) == Complex(1.0));
}

TEST_CASE("matrix_exponential inverse identity at the driven-regime scale") {
  // Generator-shaped matrices: i * Hermitian (coherent part, norm up to 50)
  // plus a dissipative negative diagonal.  An iid-random ensemble at this
  // norm makes exp(m) exp(-m) ill-conditioned beyond 1e-9 for any expm.
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> rate(0.0, 4.0);
  for (int it = 0; it < 20; ++it) {
    ComplexMatrix h = random_hermitian(rng, 16);
    h *= 50.0 / h.frobenius_norm();
    ComplexMatrix m = Complex(0, 1) * h;
    for (std::size_t i = 0; i < 16; ++i) m(i, i) -= rate(rng);

    ComplexMatrix neg = m;
    neg *= -1.0;
    const ComplexMatrix prod = matrix_exponential(m) * matrix_exponential(neg);
    CHECK(max_entry_diff(prod, ComplexMatrix::identity(16)) < 1e-9);
  }
}

TEST_CASE("psd_sqrt special cases") {
  CHECK(max_entry_diff(psd_sqrt(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)) <
        1e-12);

  // rank-1 projector is its own square root
  ComplexMatrix p(2, 2);
  p(0, 0) = 0.5;
  p(0, 1) = 0.5;
  p(1, 0) = 0.5;
  p(1, 1) = 0.5;
  CHECK(max_entry_diff(psd_sqrt(p), p) < 1e-12);

  ComplexMatrix diag(4, 4);
  diag(0, 0) = 4.0;
  diag(1, 1) = 1.0;
  const ComplexMatrix root = psd_sqrt(diag);
  CHECK(root(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(root(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(root(2, 2)) < 1e-12);
  CHECK(std::abs(root(3, 3)) < 1e-12);
}

TEST_CASE("psd_sqrt rejects indefinite matrices") {
  CHECK_THROWS_AS(psd_sqrt(kSigmaZ), std::invalid_argument);
}

TEST_CASE("psd_sqrt squares back on random PSD matrices") {
  std::mt19937_64 rng(404);
  for (int it = 0; it < 200; ++it) {
    const ComplexMatrix m = random_psd(rng, 4);
    const ComplexMatrix r = psd_sqrt(m);
    CHECK(r.hermiticity_deviation() < 1e-12);
    CHECK(max_entry_diff(r * r, m) < 1e-9);
  }
}

TEST_CASE("ComplexMatrix rejects unsupported dimensions and non-finite entries") {
  CHECK_THROWS_AS(ComplexMatrix(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0, 3.0, std::nan("")}), std::invalid_argument);
}
