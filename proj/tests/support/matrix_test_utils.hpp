#pragma once

// Shared helpers for the test suites: entrywise comparisons and deterministic
// random matrix generators (fixed seeds live at the call sites).

#include <cmath>
#include <complex>
#include <random>

#include "dephsim/linalg.hpp"

namespace dephsim::testing {

inline double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scale * Complex(dist(rng), dist(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  ComplexMatrix g = random_matrix(rng, n, scale);
  ComplexMatrix h(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
  return h;
}

inline ComplexMatrix random_psd(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  ComplexMatrix g = random_matrix(rng, n, scale);
  return g * g.adjoint();
}

// Random density matrix: G G^dagger normalized to unit trace.
inline ComplexMatrix random_density_entries(std::mt19937_64& rng, std::size_t n = 4) {
  ComplexMatrix p = random_psd(rng, n);
  const double tr = p.trace().real();
  p *= 1.0 / tr;
  return p;
}

// Exactly unitary 2x2 from three angles.
inline ComplexMatrix random_unitary_2x2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const double a = angle(rng), b = angle(rng), th = angle(rng);
  const double c = std::cos(th), s = std::sin(th);
  return ComplexMatrix{{std::polar(c, a), std::polar(s, b)},
                       {-std::polar(s, -b), std::polar(c, -a)}};
}

}  // namespace dephsim::testing
