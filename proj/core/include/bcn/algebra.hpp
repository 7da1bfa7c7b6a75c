#pragma once

#include <random>
#include <vector>

#include "bcn/types.hpp"

namespace bcn {

// The fixed Hermitian, unitary matrix with off-diagonal identity blocks.
MatC c_matrix(int n);

// Ad-invariant bilinear form tr(Y1*Y2). Real for anti-Hermitian arguments;
// the imaginary residue is asserted below tolerance and discarded.
double trace_form(const MatC& Y1, const MatC& Y2);

// Conjugation with the C matrix; an involution.
MatC gamma(const MatC& M);

// Split into the +1/-1 eigenspaces of the involution.
struct SplitPM {
  MatC plus;
  MatC minus;
};
SplitPM split_pm(const MatC& Y);

// Real basis of the fixed-point subalgebra { [[a,b],[b,a]] : a,b
// anti-Hermitian n x n }. Size 2n^2.
std::vector<MatC> gplus_basis(int n);

// Orthogonal projection onto the fixed-point subalgebra:
// (W - W^dag)/2 averaged with its involution image.
MatC project_gplus(const MatC& W);

bool is_gplus(const MatC& M, double tol = 1e-10);

// Seeded Haar-like random unitary (QR with phase correction).
MatC random_unitary(int n, std::mt19937_64& rng);

// Random element of the gauge subgroup, built blockwise from a pair of
// n x n unitaries through the fixed-point embedding.
MatC random_gplus_group(int n, std::mt19937_64& rng);

// Random element of the fixed-point subalgebra.
MatC random_gplus_algebra(int n, std::mt19937_64& rng);

// Minimum-norm solution D of [D, upsilon] = delta with D restricted to the
// fixed-point subalgebra. The commutator map is rank-deficient (the orbit has
// dimension 2(n-1)), so the solve is rank-revealing least squares.
// relative_residual receives |[D,upsilon] - delta| / max(1, |delta|).
MatC solve_orbit_generator(const MatC& upsilon, const MatC& delta,
                           double* relative_residual = nullptr);

// Orbit term of the symplectic form: <[D, D'], upsilon> with the generators
// recovered by solve_orbit_generator. Inputs must be orbit-tangent to
// tolerance; the value does not depend on the stabilizer ambiguity.
double kks_pairing(const MatC& upsilon, const MatC& delta, const MatC& delta_p,
                   double tangency_tol = 1e-8);

// Same, with one or both generators supplied (skips the least-squares solve).
double kks_pairing_known(const MatC& upsilon, const MatC& D, const MatC& D_p);

}  // namespace bcn
