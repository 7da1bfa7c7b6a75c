#include "bcn/observables.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "bcn/algebra.hpp"
#include "bcn/cross_section.hpp"

namespace bcn {

MatC z_matrix(const MatC& ul, const ModelParams& p) {
  const int N = static_cast<int>(ul.rows());
  return ul / (I * p.mu) + MatC::Identity(N, N) -
         (1 - p.nu / p.mu) * c_matrix(N / 2);
}

MatC mat_pow(const MatC& M, int k) {
  MatC R = MatC::Identity(M.rows(), M.cols());
  for (int i = 0; i < k; ++i) R = R * M;
  return R;
}

MatC pm_bracket(const MatC& A, const MatC& B, int k) {
  return k % 2 == 0 ? MatC(A * B + B * A) : MatC(A * B - B * A);
}

double phi(int m, const PhasePoint& x) {
  return mat_pow(x.Y, m).trace().real() / m;
}

double chi(int k, const PhasePoint& x, const ModelParams& p) {
  MatC Z = z_matrix(x.ul, p);
  MatC C = c_matrix(static_cast<int>(x.Y.rows()) / 2);
  return (mat_pow(x.Y, k) * x.y.adjoint() * Z * x.y * C).trace().real();
}

double phi_red(int m, const VecR& lambda) {
  if (m % 2 == 1) return 0.0;
  double s = 0;
  for (Eigen::Index a = 0; a < lambda.size(); ++a) s += std::pow(lambda(a), m);
  return ((m / 2) % 2 == 0 ? 1.0 : -1.0) * 2.0 / m * s;
}

double chi_red(int k, const DualCoordinates& c, const ModelParams& p) {
  VecC X = build_X_closed(c, p);
  double s = 0;
  if (k % 2 == 1) {
    // sign (-1)^((k-1)/2): the alternative reading (-1)^((k+1)/2) fails the
    // reduction identity by a factor of -1 (see tests and the fd oracle).
    double sign = ((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    for (int a = 0; a < p.n; ++a) {
      double lam = c.lambda(a);
      double d = std::sqrt(1 - p.kappa * p.kappa / (lam * lam));
      s += std::pow(lam, k) * d * std::abs(X(a)) * std::sin(c.theta(a));
    }
    return sign * 2 * s;
  }
  // Even k: the kappa-correction sits inside the sum and is *not* doubled.
  double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  VecC F = build_F(c, p);
  for (int a = 0; a < p.n; ++a) {
    double lam = c.lambda(a);
    double d = std::sqrt(1 - p.kappa * p.kappa / (lam * lam));
    s += 2 * std::pow(lam, k) * d * std::abs(X(a)) * std::cos(c.theta(a)) -
         p.kappa * std::pow(lam, k - 1) *
             (std::norm(F(a)) - std::norm(F(p.n + a)));
  }
  return sign * s;
}

double d_phi(int m, const PhasePoint& x, const Tangent& t) {
  if (m % 2 == 1) return 0.0;  // the observable vanishes identically
  return trace_form(mat_pow(x.Y, m - 1), t.dY);
}

double d_chi(int k, const PhasePoint& x, const ModelParams& p, const Tangent& t) {
  const int N = static_cast<int>(x.Y.rows());
  MatC C = c_matrix(N / 2);
  MatC Zt = x.y.adjoint() * z_matrix(x.ul, p) * x.y;
  MatC Yk = mat_pow(x.Y, k);
  MatC xi = x.y.adjoint() * t.dy;

  // Group direction. The inner bracket takes C first; the transposed order
  // (matching a literal reading of the shorthand) has the wrong sign for odd
  // powers — caught by the finite-difference oracle.
  MatC inner = pm_bracket(C, Yk, k);
  double t1 = trace_form(MatC((inner * Zt - Zt * inner) / 2.0), xi);

  // Fiber direction.
  MatC mid = pm_bracket(Zt, C, k);
  MatC sum = MatC::Zero(N, N);
  for (int j = 0; j < k; ++j) sum += mat_pow(x.Y, k - j - 1) * mid * mat_pow(x.Y, j);
  double t2 = trace_form(MatC(sum / 2.0), t.dY);

  // Orbit direction.
  MatC W = x.y * pm_bracket(C, Yk, k) * x.y.adjoint();
  double t3 = trace_form(MatC((W + C * W * C) / (4.0 * I * p.mu)), t.dul);
  return t1 + t2 + t3;
}

Tangent hvf_phi(int m, const PhasePoint& x) {
  const int N = static_cast<int>(x.Y.rows());
  Tangent t;
  t.dy = x.y * mat_pow(x.Y, m - 1);
  t.dY = MatC::Zero(N, N);
  t.dul = MatC::Zero(N, N);
  t.has_D = true;
  t.D = MatC::Zero(N, N);
  return t;
}

Tangent hvf_chi(int k, const PhasePoint& x, const ModelParams& p,
                const SeededDefects& defects) {
  const int N = static_cast<int>(x.Y.rows());
  MatC C = c_matrix(N / 2);
  MatC Zt = x.y.adjoint() * z_matrix(x.ul, p) * x.y;
  MatC Yk = mat_pow(x.Y, k);

  Tangent t;
  MatC mid = pm_bracket(Zt, C, k);
  MatC sum = MatC::Zero(N, N);
  for (int j = 0; j < k; ++j) sum += mat_pow(x.Y, k - j - 1) * mid * mat_pow(x.Y, j);
  t.dy = x.y * sum / 2.0;

  MatC ykz = pm_bracket(Yk, Zt, k);
  t.dY = (ykz * C - C * ykz) / 2.0;

  const int k_orbit = defects.swap_orbit_bracket_parity ? k + 1 : k;
  MatC W = x.y * pm_bracket(C, Yk, k_orbit) * x.y.adjoint();
  t.D = (W + C * W * C) / (4.0 * I * p.mu);
  t.dul = t.D * x.ul - x.ul * t.D;
  t.has_D = true;
  return t;
}

PhasePoint flow_point(const PhasePoint& x, const MatC& xi, const MatC& dY,
                      const MatC& D, double t) {
  PhasePoint out;
  out.y = x.y * (t * xi).exp();
  out.Y = x.Y + t * dY;
  MatC g = (t * D).exp();
  out.ul = g * x.ul * g.adjoint();
  out.ur = x.ur;
  return out;
}

}  // namespace bcn
