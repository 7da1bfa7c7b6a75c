#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcn {

using Complex = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;
using VecR = Eigen::VectorXd;
using MatR = Eigen::MatrixXd;

inline constexpr Complex I{0.0, 1.0};

// Thrown when inputs leave the validated coordinate domain (strict
// inequalities with margin) or violate parameter constraints.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a numerical certificate fails mid-computation, e.g. a vector
// claimed tangent to the orbit has a large least-squares residual.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coupling constants of the model plus the matrix half-size n.
// Validation enforces mu > 0 and nu > |kappa| >= 0, which keeps every
// square-root bracket in the slice construction real and positive.
struct ModelParams {
  int n = 1;
  double mu = 0.1;
  double nu = 1.0;
  double kappa = 0.0;

  void validate() const;
  int N() const { return 2 * n; }
};

// Candidate Darboux chart: action-like variables lambda (strictly decreasing,
// pairwise gaps > 2*mu, lambda_n above both nu and |kappa|) and angles theta
// taken modulo 2*pi.
struct DualCoordinates {
  VecR lambda;
  VecR theta;

  // margin: how far inside the open domain the point must sit
  void validate(const ModelParams& p, double margin = 1e-8) const;
};

struct SpectralData {
  VecR Lambda;  // diag entries (lambda_1..lambda_n, -lambda_1..-lambda_n)
  MatC h;       // real orthogonal block rotation; identity when kappa = 0
};

// Point of the extended phase space T*U(2n) x O in left trivialization.
struct PhasePoint {
  MatC y;    // unitary
  MatC Y;    // anti-Hermitian
  MatC ul;   // orbit component (left), element of the fixed-point subalgebra
  MatC ur;   // orbit component (right), always -i*kappa*C
};

// Tangent vector at a PhasePoint. The right orbit factor is a single point,
// so its component is identically zero and not stored. When the generator D
// with dul = [D, ul] is known in closed form it is cached here to avoid a
// least-squares recovery.
struct Tangent {
  MatC dy;
  MatC dY;
  MatC dul;
  bool has_D = false;
  MatC D;   // valid only if has_D
};

// Switches that deliberately corrupt the implementation. They exist so the
// test harness can prove it detects wrong formulas; all default to off.
struct SeededDefects {
  // Swap commutator <-> anticommutator in the orbit component of the chi
  // Hamiltonian vector field.
  bool swap_orbit_bracket_parity = false;
  // Drop the constant off-diagonal shift in the numerator of the scattering
  // matrix entries.
  bool drop_scattering_shift = false;
};

inline double max_abs(const MatC& M) { return M.cwiseAbs().maxCoeff(); }
inline double max_abs(const VecC& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace bcn
