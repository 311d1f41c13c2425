#pragma once

#include <complex>
#include <string>

#include "dephsim/linalg.hpp"
#include "dephsim/tolerances.hpp"

// Two-qubit states in the "Standard" basis
//   index 0 = |11>,  1 = |10>,  2 = |01>,  3 = |00>
// (qubit 1 first).  Every module in the project inherits this ordering.

namespace dephsim {

inline constexpr std::size_t idx_11 = 0;
inline constexpr std::size_t idx_10 = 1;
inline constexpr std::size_t idx_01 = 2;
inline constexpr std::size_t idx_00 = 3;

struct DensityDiagnostics {
  double hermiticity_deviation = 0.0;
  double trace_deviation = 0.0;
  double min_eigenvalue = 0.0;
  bool pass = false;
};

// 4x4 Hermitian, unit-trace, positive-semidefinite matrix.  Construction
// validates; use DensityDiagnostics to inspect a failing candidate.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat);

  const ComplexMatrix& mat() const { return mat_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

 private:
  ComplexMatrix mat_;
};

DensityDiagnostics validate_density(const ComplexMatrix& mat);

// Coefficients of the stationary X-form
//   a|11><11| + b|10><10| + c|01><01| + d|00><00| + f|10><01| + f*|01><10|.
// The pattern has no |11><00| corner: the dephasing fixed point removes it.
struct XStateCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  Complex f = 0.0;
};

// Checks population positivity, normalization, and |f|^2 <= b*c.
void validate_x_coefficients(const XStateCoefficients& x);

// Density matrix assembled from X-state coefficients.
DensityMatrix x_state_density(const XStateCoefficients& x);

// Reads the coefficients off a matrix of the X pattern; rejects the input if
// any entry outside the pattern (including the |11><00| corner) reaches tol.
XStateCoefficients as_x_state(const DensityMatrix& rho, double tol = tol::x_state_pattern);

// Bell states, in the conventions of this model:
//   Psi+- = (|11> +- |00>)/sqrt2   (fragile under collective dephasing)
//   Phi+- = (|10> +- |01>)/sqrt2   (robust: decoherence-free subspace)
enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

DensityMatrix bell_state(BellKind kind);

// r |Phi-><Phi-| + (1-r)/4 I;  r must lie in [0, 1].
DensityMatrix werner_state(double r);

// Three-qubit state as 4x4 blocks conditioned on the qubit-3 labels H, V.
// The assembled 8x8 matrix is [[hh, hv], [vh, vv]] (qubit 3 as the outer
// factor, H first).
struct ConditionalBlocks {
  ComplexMatrix rho_hh{4, 4};
  ComplexMatrix rho_hv{4, 4};
  ComplexMatrix rho_vh{4, 4};
  ComplexMatrix rho_vv{4, 4};
};

// Checks block Hermiticity/adjoint structure, trace normalization, and PSD of
// the assembled 8x8 matrix; throws on violation.
void validate_blocks(const ConditionalBlocks& blocks);

ComplexMatrix assemble_blocks(const ConditionalBlocks& blocks);

// Blocks of |GHZ> = (|11>|H> + |00>|V>)/sqrt2.
ConditionalBlocks ghz_blocks();

// State descriptors as the CLI spells them: "phi+", "phi-", "psi+", "psi-",
// "werner:<r>", "ghz".
struct StateDescriptor {
  enum class Kind { Bell, Werner, Ghz } kind = Kind::Bell;
  BellKind bell = BellKind::PhiMinus;
  double werner_r = 0.0;
};

StateDescriptor parse_state_descriptor(const std::string& text);
std::string format_state_descriptor(const StateDescriptor& desc);

// Two-qubit density matrix for bell/werner descriptors; rejects "ghz".
DensityMatrix descriptor_density(const StateDescriptor& desc);

}  // namespace dephsim
