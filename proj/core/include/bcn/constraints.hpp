#pragma once

#include "bcn/types.hpp"

namespace bcn {

// Momentum map of the gauge action: ((y Y y^-1)_+ + ul, -Y_+ + ur).
// Both components lie in the fixed-point subalgebra. Vanishes on slice points.
std::pair<MatC, MatC> momentum_map(const PhasePoint& x);

double constraint_violation(const PhasePoint& x);

// Does upsilon belong to the rank-one coadjoint orbit for these parameters?
// Reconstructs W = (i mu)^{-1} (upsilon - i(mu-nu)C) + 1 and tests that W is
// Hermitian PSD of rank one with trace 2n and range vector V obeying CV+V=0.
struct OrbitDiagnostics {
  bool pass = false;
  double hermiticity = 0;      // |W - W^dag|
  double rank_ratio = 0;       // second eigenvalue / largest
  double trace_error = 0;      // |tr W - 2n|
  double range_constraint = 0; // |C V + V| for the recovered range vector
  double negativity = 0;       // most negative eigenvalue (clipped at 0)
};
OrbitDiagnostics orbit_membership(const MatC& upsilon, const ModelParams& p,
                                  double rank_tol = 1e-8);

// The symplectic gauge action (gL y gR^-1, gR Y gR^-1, gL ul gL^-1, ur).
PhasePoint gauge_act(const MatC& gL, const MatC& gR, const PhasePoint& x);

// Positive half of the spectrum of -iY, sorted strictly decreasing.
VecR spectral_lambda(const MatC& Y, double symmetry_tol = 1e-9);

}  // namespace bcn
