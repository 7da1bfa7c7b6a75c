#pragma once

#include "bcn/types.hpp"

namespace bcn {

// Z(ul) = (i mu)^{-1} ul + 1 - (1 - nu/mu) C. On slice points this equals the
// rank-one Gram matrix V V^dag.
MatC z_matrix(const MatC& ul, const ModelParams& p);

// Integer matrix power for small exponents.
MatC mat_pow(const MatC& M, int k);

// k-dependent bracket [A,B] for odd k, {A,B} for even k. The parity choice is
// validated against the finite-difference oracle in the tests, not assumed.
MatC pm_bracket(const MatC& A, const MatC& B, int k);

// Trace observables.
double phi(int m, const PhasePoint& x);
double chi(int k, const PhasePoint& x, const ModelParams& p);

// Closed forms on the slice.
double phi_red(int m, const VecR& lambda);
double chi_red(int k, const DualCoordinates& c, const ModelParams& p);

// Exterior derivatives paired with a tangent vector.
double d_phi(int m, const PhasePoint& x, const Tangent& t);
double d_chi(int k, const PhasePoint& x, const ModelParams& p, const Tangent& t);

// Hamiltonian vector fields. Both carry their orbit generator explicitly
// (hvf_phi's is zero), so downstream symplectic evaluations skip the
// least-squares recovery.
Tangent hvf_phi(int m, const PhasePoint& x);
Tangent hvf_chi(int k, const PhasePoint& x, const ModelParams& p,
                const SeededDefects& defects = {});

// Move x along the manifold-respecting curve
//   (y exp(t xi), Y + t dY, exp(tD) ul exp(-tD), ur)
// used by the finite-difference derivative checks.
PhasePoint flow_point(const PhasePoint& x, const MatC& xi, const MatC& dY,
                      const MatC& D, double t);

}  // namespace bcn
