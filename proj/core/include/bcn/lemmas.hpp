#pragma once
#include <bcn/types.hpp>

#include <vector>

namespace bcn {

// Outputs of the bracket-matrix extraction pipeline. P collects the
// lambda-lambda brackets, Q the lambda-theta brackets, R the theta-theta
// brackets, each recovered from overdetermined trace-observable bracket data
// by Vandermonde-type solves. Expected: P = 0, Q = I, R = 0.
struct BracketMatrices {
  MatR P, Q, R;
  double condU = 0.0;  // condition number of the power-matrix solves
  double condW = 0.0;  // condition number of the weighted solves (Q and R)
};

// Term-by-term comparison of the symplectic form on two mixed-trace
// Hamiltonian fields against the closed slice formulas. The two cotangent
// terms are compared as an antisymmetric pair: each one alone carries
// (k <-> l)-symmetric content that cancels in the combination entering the
// bracket, so only the difference admits the displayed closed form.
struct IdentityReport {
  int k = 0, l = 0;
  double t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0;  // numeric term values
  double first_pair_error = 0.0;  // |(t1 - t2) - closed difference|
  double orbit_term_error = 0.0;  // |t4 - closed orbit pairing|
  double third_term_abs = 0.0;    // |t3|, expected to vanish
  double total_error = 0.0;       // |(t1 - t2 + t3 + t4) - closed total|
  double largest_summand = 0.0;   // scale of the closed-form sums
};

// Odd-power Vandermonde-type matrix U_{a,b} = lambda_a^(2b-1), b = 1..n.
// Condition numbers above 1e12 are tolerated but should be reported upstream.
MatR vandermonde_U(const VecR& lambda);

// General power matrix M_{a,c} = lambda_a^(e_c) for a chosen exponent window.
MatR power_matrix(const VecR& lambda, const std::vector<int>& exponents);

// Lambda-lambda bracket matrix from the power-trace family over an even
// index window (default {2, 4, ..., 2n}). Solves U^T P U = scaled brackets.
MatR extract_P(const DualCoordinates& c, const ModelParams& p,
               std::vector<int> window = {}, double* condU = nullptr,
               const SeededDefects& defects = {});

// Lambda-theta bracket matrix from mixed-trace / power-trace brackets over
// even windows (defaults {2, 4, ..., 2n} for both). Requires
// |sin theta_b| >= 1e-3 for every b (weight-matrix invertibility), else
// DomainError. Solves W Q U = scaled brackets with known weights
// w_b(k) = lambda_b^k sqrt(1 - kappa^2/lambda_b^2) |X_b| sin(theta_b).
MatR extract_Q(const DualCoordinates& c, const ModelParams& p,
               std::vector<int> window_k = {}, std::vector<int> window_m = {},
               double* condW = nullptr, double* condU = nullptr,
               const SeededDefects& defects = {});

// Theta-theta bracket matrix over an odd index window (default
// {1, 3, ..., 2n-1}): the numeric mixed-trace brackets minus their closed
// form, sandwiched through the cosine-weighted power matrix. Requires
// |cos theta_a| >= 1e-3, else DomainError.
MatR extract_R(const DualCoordinates& c, const ModelParams& p,
               std::vector<int> window = {}, double* condW = nullptr,
               const SeededDefects& defects = {});

// All three extractions with default windows.
BracketMatrices extract_all(const DualCoordinates& c, const ModelParams& p,
                            const SeededDefects& defects = {});

// Closed form for the bracket of chi_k with phi_m (even k, m) at an
// arbitrary constraint-surface point:
//   chi_{k+m-1} + (1/2) Re tr((Y^k C Y^{m-1} - Y^{m-1} C Y^k) y^-1 Z y).
double closed_chi_phi(int k, int m, const PhasePoint& x, const ModelParams& p);

// Closed slice form for the bracket of chi_k with chi_l (odd k, l).
double closed_chi_chi(int k, int l, const DualCoordinates& c,
                      const ModelParams& p);

// Evaluate the four terms of the symplectic form on the chi_k / chi_l
// Hamiltonian fields at a slice point and compare with the closed formulas.
// k and l must be odd.
IdentityReport check_term_identities(const DualCoordinates& c,
                                     const ModelParams& p, int k, int l,
                                     const SeededDefects& defects = {});

}  // namespace bcn
