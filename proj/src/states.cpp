#include "dephsim/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dephsim {

namespace {

ComplexMatrix pure_state(const std::vector<Complex>& amps) {
  ComplexMatrix rho(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) rho(r, c) = amps[r] * std::conj(amps[c]);
  return rho;
}

}  // namespace

DensityDiagnostics validate_density(const ComplexMatrix& mat) {
  DensityDiagnostics diag;
  if (mat.rows() != 4 || mat.cols() != 4) {
    throw std::invalid_argument("density matrix must be 4x4");
  }
  diag.hermiticity_deviation = mat.hermiticity_deviation();
  diag.trace_deviation = std::abs(mat.trace() - Complex(1.0));
  if (diag.hermiticity_deviation <= tol::hermiticity) {
    diag.min_eigenvalue = hermitian_eigensystem(mat).eigenvalues.front();
  } else {
    diag.min_eigenvalue = -1.0;  // not meaningful for non-Hermitian input
  }
  diag.pass = diag.hermiticity_deviation <= tol::hermiticity &&
              diag.trace_deviation <= tol::trace &&
              diag.min_eigenvalue >= -tol::psd_eigenvalue;
  return diag;
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  const DensityDiagnostics diag = validate_density(mat_);
  if (!diag.pass) {
    std::ostringstream msg;
    msg << "not a density matrix: hermiticity deviation " << diag.hermiticity_deviation
        << ", trace deviation " << diag.trace_deviation << ", min eigenvalue "
        << diag.min_eigenvalue;
    throw std::invalid_argument(msg.str());
  }
}

void validate_x_coefficients(const XStateCoefficients& x) {
  const double populations[] = {x.a, x.b, x.c, x.d};
  for (double p : populations) {
    if (!(p >= -tol::coefficient_slack)) {
      std::ostringstream msg;
      msg << "X-state population " << p << " below -" << tol::coefficient_slack;
      throw std::invalid_argument(msg.str());
    }
  }
  const double sum = x.a + x.b + x.c + x.d;
  if (std::abs(sum - 1.0) > tol::coefficient_sum) {
    std::ostringstream msg;
    msg << "X-state populations sum to " << sum << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
  if (std::norm(x.f) > x.b * x.c + tol::psd_eigenvalue) {
    std::ostringstream msg;
    msg << "|f|^2 = " << std::norm(x.f) << " exceeds b*c = " << x.b * x.c;
    throw std::invalid_argument(msg.str());
  }
}

DensityMatrix x_state_density(const XStateCoefficients& x) {
  validate_x_coefficients(x);
  ComplexMatrix m(4, 4);
  m(idx_11, idx_11) = std::max(x.a, 0.0);
  m(idx_10, idx_10) = std::max(x.b, 0.0);
  m(idx_01, idx_01) = std::max(x.c, 0.0);
  m(idx_00, idx_00) = std::max(x.d, 0.0);
  m(idx_10, idx_01) = x.f;
  m(idx_01, idx_10) = std::conj(x.f);
  return DensityMatrix(m);
}

XStateCoefficients as_x_state(const DensityMatrix& rho, double tol) {
  const ComplexMatrix& m = rho.mat();
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const bool in_pattern =
          (r == c) || (r == idx_10 && c == idx_01) || (r == idx_01 && c == idx_10);
      if (!in_pattern && std::abs(m(r, c)) >= tol) {
        std::ostringstream msg;
        msg << "entry (" << r << "," << c << ") = " << std::abs(m(r, c))
            << " violates the X-state pattern (tol " << tol << ")";
        throw std::invalid_argument(msg.str());
      }
    }
  }
  XStateCoefficients x;
  x.a = m(idx_11, idx_11).real();
  x.b = m(idx_10, idx_10).real();
  x.c = m(idx_01, idx_01).real();
  x.d = m(idx_00, idx_00).real();
  x.f = m(idx_10, idx_01);
  return x;
}

DensityMatrix bell_state(BellKind kind) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Complex> amps(4, 0.0);
  switch (kind) {
    case BellKind::PsiPlus:
      amps[idx_11] = s;
      amps[idx_00] = s;
      break;
    case BellKind::PsiMinus:
      amps[idx_11] = s;
      amps[idx_00] = -s;
      break;
    case BellKind::PhiPlus:
      amps[idx_10] = s;
      amps[idx_01] = s;
      break;
    case BellKind::PhiMinus:
      amps[idx_10] = s;
      amps[idx_01] = -s;
      break;
  }
  return DensityMatrix(pure_state(amps));
}

DensityMatrix werner_state(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    std::ostringstream msg;
    msg << "Werner parameter r = " << r << " outside [0, 1]";
    throw std::invalid_argument(msg.str());
  }
  ComplexMatrix m = bell_state(BellKind::PhiMinus).mat();
  m *= r;
  const double background = (1.0 - r) / 4.0;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) += background;
  return DensityMatrix(m);
}

void validate_blocks(const ConditionalBlocks& blocks) {
  if (blocks.rho_hh.hermiticity_deviation() > tol::hermiticity ||
      blocks.rho_vv.hermiticity_deviation() > tol::hermiticity) {
    throw std::invalid_argument("diagonal blocks must be Hermitian");
  }
  const double tr_h = blocks.rho_hh.trace().real();
  const double tr_v = blocks.rho_vv.trace().real();
  if (tr_h < -tol::psd_eigenvalue || tr_v < -tol::psd_eigenvalue) {
    throw std::invalid_argument("diagonal block traces must be non-negative");
  }
  if (std::abs(tr_h + tr_v - 1.0) > tol::trace) {
    std::ostringstream msg;
    msg << "block traces sum to " << tr_h + tr_v << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
  const ComplexMatrix adj = blocks.rho_hv.adjoint();
  double worst = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      worst = std::max(worst, std::abs(blocks.rho_vh(r, c) - adj(r, c)));
  if (worst > tol::block_adjoint) {
    std::ostringstream msg;
    msg << "rho_vh deviates from rho_hv^dagger by " << worst;
    throw std::invalid_argument(msg.str());
  }
  const double min_eig = hermitian_eigensystem(assemble_blocks(blocks)).eigenvalues.front();
  if (min_eig < -tol::block_psd) {
    std::ostringstream msg;
    msg << "assembled three-qubit matrix has eigenvalue " << min_eig;
    throw std::invalid_argument(msg.str());
  }
}

ComplexMatrix assemble_blocks(const ConditionalBlocks& blocks) {
  ComplexMatrix full(8, 8);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      full(r, c) = blocks.rho_hh(r, c);
      full(r, c + 4) = blocks.rho_hv(r, c);
      full(r + 4, c) = blocks.rho_vh(r, c);
      full(r + 4, c + 4) = blocks.rho_vv(r, c);
    }
  }
  return full;
}

ConditionalBlocks ghz_blocks() {
  ConditionalBlocks b;
  b.rho_hh(idx_11, idx_11) = 0.5;
  b.rho_vv(idx_00, idx_00) = 0.5;
  b.rho_hv(idx_11, idx_00) = 0.5;
  b.rho_vh = b.rho_hv.adjoint();
  return b;
}

StateDescriptor parse_state_descriptor(const std::string& text) {
  StateDescriptor desc;
  if (text == "phi+") {
    desc.kind = StateDescriptor::Kind::Bell;
    desc.bell = BellKind::PhiPlus;
  } else if (text == "phi-") {
    desc.kind = StateDescriptor::Kind::Bell;
    desc.bell = BellKind::PhiMinus;
  } else if (text == "psi+") {
    desc.kind = StateDescriptor::Kind::Bell;
    desc.bell = BellKind::PsiPlus;
  } else if (text == "psi-") {
    desc.kind = StateDescriptor::Kind::Bell;
    desc.bell = BellKind::PsiMinus;
  } else if (text == "ghz") {
    desc.kind = StateDescriptor::Kind::Ghz;
  } else if (text.rfind("werner:", 0) == 0) {
    desc.kind = StateDescriptor::Kind::Werner;
    const std::string arg = text.substr(7);
    std::size_t consumed = 0;
    try {
      desc.werner_r = std::stod(arg, &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse Werner parameter in '" + text + "'");
    }
    if (consumed != arg.size()) {
      throw std::invalid_argument("trailing characters in Werner parameter '" + text + "'");
    }
    if (!(desc.werner_r >= 0.0 && desc.werner_r <= 1.0)) {
      throw std::invalid_argument("Werner parameter outside [0, 1] in '" + text + "'");
    }
  } else {
    throw std::invalid_argument(
        "unknown state '" + text +
        "' (expected phi+, phi-, psi+, psi-, werner:<r>, or ghz)");
  }
  return desc;
}

std::string format_state_descriptor(const StateDescriptor& desc) {
  switch (desc.kind) {
    case StateDescriptor::Kind::Ghz:
      return "ghz";
    case StateDescriptor::Kind::Werner: {
      std::ostringstream out;
      out << "werner:" << desc.werner_r;
      return out.str();
    }
    case StateDescriptor::Kind::Bell:
      break;
  }
  switch (desc.bell) {
    case BellKind::PhiPlus:
      return "phi+";
    case BellKind::PhiMinus:
      return "phi-";
    case BellKind::PsiPlus:
      return "psi+";
    case BellKind::PsiMinus:
      return "psi-";
  }
  return "?";
}

DensityMatrix descriptor_density(const StateDescriptor& desc) {
  switch (desc.kind) {
    case StateDescriptor::Kind::Bell:
      return bell_state(desc.bell);
    case StateDescriptor::Kind::Werner:
      return werner_state(desc.werner_r);
    case StateDescriptor::Kind::Ghz:
      break;
  }
  throw std::invalid_argument("'ghz' is a three-qubit state; use the eraser commands");
}

}  // namespace dephsim
