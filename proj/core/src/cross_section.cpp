#include "bcn/cross_section.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "bcn/algebra.hpp"

namespace bcn {

void ModelParams::validate() const {
  if (n < 1) throw DomainError("params: n must be positive");
  if (!(mu > 0)) throw DomainError("params: mu must be positive");
  if (!(nu > std::abs(kappa)))
    throw DomainError("params: need nu > |kappa| (got nu=" + std::to_string(nu) +
                      ", kappa=" + std::to_string(kappa) + ")");
}

void DualCoordinates::validate(const ModelParams& p, double margin) const {
  p.validate();
  if (lambda.size() != p.n || theta.size() != p.n)
    throw DomainError("coordinates: size mismatch with n");
  for (int a = 0; a + 1 < p.n; ++a)
    if (!(lambda(a) - lambda(a + 1) > 2 * p.mu + margin))
      throw DomainError("coordinates: lambda_" + std::to_string(a + 1) + " - lambda_" +
                        std::to_string(a + 2) + " = " +
                        std::to_string(lambda(a) - lambda(a + 1)) +
                        " violates the gap bound 2*mu = " + std::to_string(2 * p.mu));
  const double lam_n = lambda(p.n - 1);
  if (!(lam_n > p.nu + margin))
    throw DomainError("coordinates: lambda_n = " + std::to_string(lam_n) +
                      " must exceed nu = " + std::to_string(p.nu));
  if (!(lam_n > std::abs(p.kappa) + margin))
    throw DomainError("coordinates: lambda_n must exceed |kappa|");
}

std::pair<double, double> alpha_beta(double x, double kappa) {
  if (kappa == 0.0) return {1.0, 0.0};
  if (!(x > 0) || x < std::abs(kappa))
    throw DomainError("alpha_beta: need x >= |kappa| > 0");
  double s = std::sqrt(x * x - kappa * kappa);
  double t = std::sqrt(x + s);
  return {t / std::sqrt(2 * x), kappa / (std::sqrt(2 * x) * t)};
}

SpectralData build_h(const VecR& lambda, double kappa) {
  const int n = static_cast<int>(lambda.size());
  SpectralData sd;
  sd.Lambda.resize(2 * n);
  sd.Lambda.head(n) = lambda;
  sd.Lambda.tail(n) = -lambda;
  sd.h = MatC::Identity(2 * n, 2 * n);
  if (kappa == 0.0) return sd;
  for (int a = 0; a < n; ++a) {
    auto [al, be] = alpha_beta(lambda(a), kappa);
    sd.h(a, a) = al;
    sd.h(a, n + a) = be;
    sd.h(n + a, a) = -be;
    sd.h(n + a, n + a) = al;
  }
  return sd;
}

MatC build_Y(const VecR& lambda, double kappa) {
  SpectralData sd = build_h(lambda, kappa);
  return I * (sd.h * sd.Lambda.asDiagonal().toDenseMatrix().cast<Complex>() *
              sd.h.transpose());
}

VecC build_F(const DualCoordinates& c, const ModelParams& p) {
  const int n = p.n;
  const VecR& lam = c.lambda;
  VecC F(2 * n);
  for (int a = 0; a < n; ++a) {
    double t = 1 - p.nu / lam(a);
    for (int b = 0; b < n; ++b)
      if (b != a)
        t *= (1 - 2 * p.mu / (lam(a) - lam(b))) * (1 - 2 * p.mu / (lam(a) + lam(b)));
    if (!(t >= 0)) throw DomainError("build_F: negative bracket factor; outside C_2");
    F(a) = std::sqrt(t);
    t = 1 + p.nu / lam(a);
    for (int b = 0; b < n; ++b)
      if (b != a)
        t *= (1 + 2 * p.mu / (lam(a) - lam(b))) * (1 + 2 * p.mu / (lam(a) + lam(b)));
    if (!(t >= 0)) throw DomainError("build_F: negative bracket factor; outside C_2");
    F(n + a) = std::exp(I * c.theta(a)) * std::sqrt(t);
  }
  return F;
}

VecC build_X(const DualCoordinates& c, const ModelParams& p) {
  VecC F = build_F(c, p);
  VecC X(p.n);
  for (int a = 0; a < p.n; ++a) X(a) = F(a) * std::conj(F(p.n + a));
  return X;
}

VecC build_X_closed(const DualCoordinates& c, const ModelParams& p) {
  const VecR& lam = c.lambda;
  VecC X(p.n);
  for (int a = 0; a < p.n; ++a) {
    double t = 1 - p.nu * p.nu / (lam(a) * lam(a));
    for (int b = 0; b < p.n; ++b)
      if (b != a) {
        double dm = lam(a) - lam(b), dp = lam(a) + lam(b);
        t *= (1 - 4 * p.mu * p.mu / (dm * dm)) * (1 - 4 * p.mu * p.mu / (dp * dp));
      }
    if (!(t >= 0)) throw DomainError("build_X_closed: negative product; outside C_2");
    X(a) = std::exp(-I * c.theta(a)) * std::sqrt(t);
  }
  return X;
}

MatC build_A(const DualCoordinates& c, const ModelParams& p,
             const SeededDefects& defects) {
  const int N = p.N();
  VecC F = build_F(c, p);
  MatC C = c_matrix(p.n);
  VecC CF = C * F;
  VecR L(N);
  L.head(p.n) = c.lambda;
  L.tail(p.n) = -c.lambda;
  const double shift = defects.drop_scattering_shift ? 0.0 : 2 * (p.mu - p.nu);
  MatC A(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      double den = 2 * p.mu - L(j) + L(k);
      if (std::abs(den) < 1e-12)
        throw DomainError("build_A: vanishing denominator (boundary of C_2)");
      A(j, k) = (2.0 * p.mu * F(j) * std::conj(CF(k)) - shift * C(j, k)) / den;
    }
  return A;
}

MatC build_B(const DualCoordinates& c, const ModelParams& p,
             const SeededDefects& defects) {
  MatC h = build_h(c.lambda, p.kappa).h;
  MatC A = build_A(c, p, defects);
  return -(h * A * h).adjoint();
}

VecR extract_q(const MatC& B, double* pairing_error) {
  const int N = static_cast<int>(B.rows());
  const int n = N / 2;
  Eigen::ComplexEigenSolver<MatC> es(B, /*computeEigenvectors=*/false);
  std::vector<double> pos, neg;
  for (int i = 0; i < N; ++i) {
    double ph = std::arg(es.eigenvalues()(i));
    if (std::abs(ph) < 1e-8 || std::abs(std::abs(ph) - M_PI) < 1e-8)
      throw NumericalError("extract_q: eigenphase at 0 or pi (degenerate configuration)");
    (ph > 0 ? pos : neg).push_back(std::abs(ph));
  }
  if (static_cast<int>(pos.size()) != n)
    throw NumericalError("extract_q: unpaired spectrum");
  std::sort(pos.rbegin(), pos.rend());
  std::sort(neg.rbegin(), neg.rend());
  double mismatch = 0;
  for (int i = 0; i < n; ++i) mismatch = std::max(mismatch, std::abs(pos[i] - neg[i]));
  if (pairing_error) *pairing_error = mismatch;
  if (mismatch > 1e-8)
    throw NumericalError("extract_q: conjugate eigenphases fail to pair (mismatch " +
                         std::to_string(mismatch) + ")");
  VecR q(n);
  for (int i = 0; i < n; ++i) q(i) = pos[i] / 2;
  return q;
}

MatC principal_sqrt_unitary(const MatC& B) {
  // B is unitary hence normal; its Schur form is diagonal to machine
  // precision, so the principal root follows from halving eigenphases.
  Eigen::ComplexSchur<MatC> schur(B);
  const MatC& U = schur.matrixU();
  VecC d = schur.matrixT().diagonal();
  VecC r(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) r(i) = std::sqrt(d(i));
  return U * r.asDiagonal() * U.adjoint();
}

MatC build_y(const DualCoordinates& c, const ModelParams& p) {
  return principal_sqrt_unitary(build_B(c, p));
}

VecC build_V(const DualCoordinates& c, const ModelParams& p) {
  SliceBundle s = build_slice(c, p);
  return s.V;
}

MatC upsilon_ell(const VecC& V, const ModelParams& p) {
  const int N = static_cast<int>(V.size());
  return I * p.mu * (V * V.adjoint() - MatC::Identity(N, N)) +
         I * (p.mu - p.nu) * c_matrix(N / 2);
}

SliceBundle build_slice(const DualCoordinates& c, const ModelParams& p,
                        const SeededDefects& defects) {
  c.validate(p);
  SliceBundle s;
  s.spectral = build_h(c.lambda, p.kappa);
  s.F = build_F(c, p);
  s.A = build_A(c, p, defects);
  s.B = -(s.spectral.h * s.A * s.spectral.h).adjoint();
  s.q = extract_q(s.B);
  s.x.y = principal_sqrt_unitary(s.B);
  s.x.Y = I * (s.spectral.h *
               s.spectral.Lambda.asDiagonal().toDenseMatrix().cast<Complex>() *
               s.spectral.h.transpose());
  s.V = s.x.y * s.spectral.h * s.F;
  s.x.ul = upsilon_ell(s.V, p);
  s.x.ur = -I * p.kappa * c_matrix(p.n);
  return s;
}

PhasePoint build_point(const DualCoordinates& c, const ModelParams& p,
                       const SeededDefects& defects) {
  return build_slice(c, p, defects).x;
}

}  // namespace bcn
