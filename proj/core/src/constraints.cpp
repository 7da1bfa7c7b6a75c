#include "bcn/constraints.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "bcn/algebra.hpp"

namespace bcn {

std::pair<MatC, MatC> momentum_map(const PhasePoint& x) {
  MatC M = x.y * x.Y * x.y.adjoint();
  return {split_pm(M).plus + x.ul, -split_pm(x.Y).plus + x.ur};
}

double constraint_violation(const PhasePoint& x) {
  auto [jl, jr] = momentum_map(x);
  return std::max(max_abs(jl), max_abs(jr));
}

OrbitDiagnostics orbit_membership(const MatC& upsilon, const ModelParams& p,
                                  double rank_tol) {
  if (p.mu == 0) throw DomainError("orbit_membership: mu = 0 unsupported");
  const int N = static_cast<int>(upsilon.rows());
  MatC C = c_matrix(N / 2);
  MatC W = (upsilon - I * (p.mu - p.nu) * C) / (I * p.mu) + MatC::Identity(N, N);

  OrbitDiagnostics d;
  d.hermiticity = max_abs(MatC(W - W.adjoint()));
  Eigen::SelfAdjointEigenSolver<MatC> es((W + W.adjoint()) / 2.0);
  VecR ev = es.eigenvalues();  // ascending
  double largest = ev(N - 1);
  double second = N >= 2 ? std::abs(ev(N - 2)) : 0.0;
  d.rank_ratio = largest > 0 ? second / largest : 1.0;
  d.trace_error = std::abs(ev.sum() - N);
  d.negativity = std::max(0.0, -ev(0));
  VecC V = es.eigenvectors().col(N - 1) * std::sqrt(std::max(largest, 0.0));
  d.range_constraint = max_abs(VecC(C * V + V));
  d.pass = d.hermiticity <= rank_tol && d.rank_ratio <= rank_tol &&
           d.trace_error <= rank_tol * N && d.negativity <= rank_tol &&
           d.range_constraint <= rank_tol;
  return d;
}

PhasePoint gauge_act(const MatC& gL, const MatC& gR, const PhasePoint& x) {
  auto check = [](const MatC& g, const char* name) {
    const int N = static_cast<int>(g.rows());
    double u = max_abs(MatC(g.adjoint() * g - MatC::Identity(N, N)));
    double f = max_abs(MatC(g - gamma(g)));
    if (u > 1e-10 || f > 1e-10)
      throw DomainError(std::string("gauge_act: ") + name +
                        " is not in the gauge subgroup (unitarity " + std::to_string(u) +
                        ", fixed-point residual " + std::to_string(f) + ")");
  };
  check(gL, "gL");
  check(gR, "gR");
  PhasePoint out;
  out.y = gL * x.y * gR.adjoint();
  out.Y = gR * x.Y * gR.adjoint();
  out.ul = gL * x.ul * gL.adjoint();
  out.ur = x.ur;
  return out;
}

VecR spectral_lambda(const MatC& Y, double symmetry_tol) {
  const int N = static_cast<int>(Y.rows());
  MatC H = -I * Y;
  Eigen::SelfAdjointEigenSolver<MatC> es((H + H.adjoint()) / 2.0);
  VecR ev = es.eigenvalues();
  std::vector<double> pos, neg;
  for (int i = 0; i < N; ++i) (ev(i) > 0 ? pos : neg).push_back(std::abs(ev(i)));
  if (pos.size() != neg.size())
    throw NumericalError("spectral_lambda: spectrum not symmetric about zero");
  std::sort(pos.rbegin(), pos.rend());
  std::sort(neg.rbegin(), neg.rend());
  for (size_t i = 0; i < pos.size(); ++i)
    if (std::abs(pos[i] - neg[i]) > symmetry_tol)
      throw NumericalError("spectral_lambda: asymmetric spectrum beyond tolerance");
  for (size_t i = 0; i + 1 < pos.size(); ++i)
    if (pos[i] - pos[i + 1] < symmetry_tol)
      throw NumericalError("spectral_lambda: eigenvalue collision");
  VecR lam(static_cast<Eigen::Index>(pos.size()));
  for (size_t i = 0; i < pos.size(); ++i) lam(static_cast<Eigen::Index>(i)) = pos[i];
  return lam;
}

}  // namespace bcn
