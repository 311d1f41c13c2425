#pragma once

// Numerical tolerances shared by the library and its tests.  Keeping them in
// one place guarantees that a test asserting an invariant uses the same bound
// the library enforces.

namespace dephsim::tol {

// Hermiticity acceptance: max |m(i,j) - conj(m(j,i))| over all entries.
inline constexpr double hermiticity = 1e-10;

// Unit-trace acceptance for density matrices: |Tr(rho) - 1|.
inline constexpr double trace = 1e-10;

// Eigenvalues above -psd_eigenvalue count as non-negative.
inline constexpr double psd_eigenvalue = 1e-10;

// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
inline constexpr double jacobi_off_diagonal = 1e-14;

// Floor applied to spectra before logarithms and square roots.
inline constexpr double eigenvalue_clamp = 1e-12;

// Slack allowed on X-state populations and normalization.
inline constexpr double coefficient_slack = 1e-12;
inline constexpr double coefficient_sum = 1e-10;

// Default bound for entries that must vanish in the stationary X-state form.
inline constexpr double x_state_pattern = 1e-8;

// Bound for entries outside the stationary three-qubit pattern.
inline constexpr double ghz_pattern = 1e-9;

// Conditional blocks: rho_vh vs rho_hv adjoint mismatch, and PSD slack of the
// assembled 8x8 matrix.
inline constexpr double block_adjoint = 1e-12;
inline constexpr double block_psd = 1e-9;

// Measurement outcomes rarer than this are treated as impossible.
inline constexpr double impossible_outcome = 1e-12;

// Residual norm ||L0 vec(rho)|| below which a state counts as stationary.
inline constexpr double stationary_residual = 1e-10;

// Slack allowed before clamping measure values into their ranges.
inline constexpr double measure_slack = 1e-12;

}  // namespace dephsim::tol
