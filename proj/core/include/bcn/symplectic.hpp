#pragma once
#include <bcn/types.hpp>

namespace bcn {

// Identifier for a member of the two observable families: phi(m) are the
// normalized power traces of Y, chi(k) the mixed traces involving the orbit
// variable. Used to request Hamiltonian vector fields and brackets by name.
struct Observable {
  enum class Kind { PowerTrace, MixedTrace };
  Kind kind;
  int index;
  static Observable phi(int m) { return {Kind::PowerTrace, m}; }
  static Observable chi(int k) { return {Kind::MixedTrace, k}; }
};

// Four-term breakdown of the symplectic form evaluated on a tangent pair:
//   total = t1 - t2 + t3 + t4
// t1 = <y^-1 dy, dY'>, t2 = <y^-1 dy', dY>, t3 = <[y^-1 dy, y^-1 dy'], Y>,
// t4 = <[D, D'], upsilon> (orbit part).
struct OmegaTerms {
  double t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0;
  double total() const { return t1 - t2 + t3 + t4; }
};

// Cotangent-bundle part of the symplectic form (three-term formula).
// Throws NumericalError if y^-1 dy deviates from anti-Hermitian beyond tol.
double omega_tstar(const PhasePoint& x, const Tangent& t1, const Tangent& t2,
                   double antiherm_tol = 1e-8);

// Full symplectic form: omega_tstar plus the orbit pairing on the dul
// components. The right factor contributes nothing (one-point orbit). When a
// tangent carries a precomputed generator D it is used directly; otherwise the
// generator is recovered by a least-squares solve whose relative residual must
// stay below tangency_tol.
double omega_total(const PhasePoint& x, const Tangent& t1, const Tangent& t2,
                   double tangency_tol = 1e-8);

// Same evaluation, split into the four constituent terms.
OmegaTerms omega_breakdown(const PhasePoint& x, const Tangent& t1,
                           const Tangent& t2, double tangency_tol = 1e-8);

// Hamiltonian vector field / differential of an observable by identifier.
Tangent hamiltonian_field(const Observable& f, const PhasePoint& x,
                          const ModelParams& p, const SeededDefects& defects = {});
double differential(const Observable& f, const PhasePoint& x,
                    const ModelParams& p, const Tangent& v);

// Poisson bracket {f, g} = Omega(X_g, X_f). The argument order inside Omega is
// calibrated against the closed form for {chi_k, phi_m} and fixed globally.
double poisson(const Observable& f, const Observable& g, const PhasePoint& x,
               const ModelParams& p, const SeededDefects& defects = {});

// Central-difference tangent of the slice embedding along one coordinate.
// direction in [0, 2n): 0..n-1 vary lambda_a, n..2n-1 vary theta_a.
// The y-increment is projected so y^-1 dy is exactly anti-Hermitian; the
// dul-increment must be orbit-tangent with least-squares residual at most
// max(1e-8, 10 h^2), otherwise NumericalError. The recovered generator is
// stored in the tangent so later pairings need no second solve.
Tangent fd_tangent(const DualCoordinates& c, const ModelParams& p,
                   int direction, double h, const SeededDefects& defects = {});

// Pull-back of the symplectic form to the slice coordinates, assembled from
// finite-difference tangents in the order (lambda_1..lambda_n,
// theta_1..theta_n). Expected: [[0, I],[-I, 0]]. Antisymmetric by
// construction (upper triangle computed, lower mirrored).
MatR pullback_matrix(const DualCoordinates& c, const ModelParams& p,
                     double h = 1e-5, const SeededDefects& defects = {});

}  // namespace bcn
