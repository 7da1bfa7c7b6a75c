#pragma once

#include "bcn/types.hpp"

namespace bcn {

// Scalar entries of the block rotation diagonalizing the kappa-coupling.
// alpha^2 + beta^2 = 1; (1, 0) when kappa = 0.
std::pair<double, double> alpha_beta(double x, double kappa);

// Block rotation h = [[alpha, beta], [-beta, alpha]] (diagonal blocks built
// entrywise from lambda). Real orthogonal; gamma(h) = h^{-1}; identity at
// kappa = 0.
SpectralData build_h(const VecR& lambda, double kappa);

// The anti-Hermitian matrix i*h*diag(lambda, -lambda)*h^{-1} whose spectrum
// encodes the action variables.
MatC build_Y(const VecR& lambda, double kappa);

// Component vector of the rank-one orbit data on the slice; first n entries
// real positive, last n carry the angle phases. |F|^2 = 2n.
VecC build_F(const DualCoordinates& c, const ModelParams& p);

// Products X_a = F_a * conj(F_{n+a}); also available in closed form, and the
// two agree (asserted in tests).
VecC build_X(const DualCoordinates& c, const ModelParams& p);
VecC build_X_closed(const DualCoordinates& c, const ModelParams& p);

// Scattering-type unitary with entries
//   (2 mu F_j conj((CF)_k) - 2(mu-nu) C_{jk}) / (2 mu - L_j + L_k).
// gamma(A) = A^{-1}.
MatC build_A(const DualCoordinates& c, const ModelParams& p,
             const SeededDefects& defects = {});

// B = -(h A h)^dag; unitary with eigenvalues in conjugate pairs e^{+-2iq}.
MatC build_B(const DualCoordinates& c, const ModelParams& p,
             const SeededDefects& defects = {});

// Half-phases q with pi/2 > q_1 > ... > q_n > 0 recovered from the paired
// spectrum of B. pairing_error (optional) receives the max mismatch between
// each positive phase and its negated partner.
VecR extract_q(const MatC& B, double* pairing_error = nullptr);

// Principal matrix square root of B (unitary, eigenphases halved).
MatC build_y(const DualCoordinates& c, const ModelParams& p);
MatC principal_sqrt_unitary(const MatC& B);

// V = y h F; |V|^2 = 2n and CV + V = 0.
VecC build_V(const DualCoordinates& c, const ModelParams& p);

// Orbit element i*mu*(V V^dag - 1) + i*(mu-nu)*C.
MatC upsilon_ell(const VecC& V, const ModelParams& p);

// Full slice point (y, Y, upsilon_l, upsilon_r).
PhasePoint build_point(const DualCoordinates& c, const ModelParams& p,
                       const SeededDefects& defects = {});

// Same, keeping every intermediate for reporting and tests.
struct SliceBundle {
  PhasePoint x;
  SpectralData spectral;
  VecC F;
  MatC A;
  MatC B;
  VecR q;
  VecC V;
};
SliceBundle build_slice(const DualCoordinates& c, const ModelParams& p,
                        const SeededDefects& defects = {});

}  // namespace bcn
