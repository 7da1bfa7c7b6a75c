#include "bcn/algebra.hpp"

#include <cmath>

namespace bcn {

MatC c_matrix(int n) {
  MatC C = MatC::Zero(2 * n, 2 * n);
  C.topRightCorner(n, n).setIdentity();
  C.bottomLeftCorner(n, n).setIdentity();
  return C;
}

double trace_form(const MatC& Y1, const MatC& Y2) {
  if (Y1.rows() != Y2.rows() || Y1.cols() != Y2.cols() || Y1.rows() != Y1.cols())
    throw DomainError("trace_form: dimension mismatch");
  Complex t = (Y1 * Y2).trace();
  double scale = std::max({1.0, max_abs(Y1), max_abs(Y2)});
  if (std::abs(t.imag()) > 1e-12 * scale * scale * Y1.rows())
    throw NumericalError("trace_form: imaginary residue " +
                         std::to_string(t.imag()) + " on supposedly anti-Hermitian inputs");
  return t.real();
}

MatC gamma(const MatC& M) {
  if (M.rows() != M.cols() || M.rows() % 2 != 0)
    throw DomainError("gamma: need even-sized square matrix");
  const int n = static_cast<int>(M.rows()) / 2;
  // C*M*C swaps the two block rows and the two block columns; do it directly
  // instead of two matrix products.
  MatC R(2 * n, 2 * n);
  R.topLeftCorner(n, n) = M.bottomRightCorner(n, n);
  R.topRightCorner(n, n) = M.bottomLeftCorner(n, n);
  R.bottomLeftCorner(n, n) = M.topRightCorner(n, n);
  R.bottomRightCorner(n, n) = M.topLeftCorner(n, n);
  return R;
}

SplitPM split_pm(const MatC& Y) {
  MatC G = gamma(Y);
  return {(Y + G) / 2.0, (Y - G) / 2.0};
}

std::vector<MatC> gplus_basis(int n) {
  // Anti-Hermitian n x n basis: i*E_jj; E_jk - E_kj; i*(E_jk + E_kj), j<k.
  std::vector<Eigen::MatrixXcd> small;
  for (int j = 0; j < n; ++j) {
    MatC m = MatC::Zero(n, n);
    m(j, j) = I;
    small.push_back(m);
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      MatC m = MatC::Zero(n, n);
      m(j, k) = 1.0;
      m(k, j) = -1.0;
      small.push_back(m);
      MatC mm = MatC::Zero(n, n);
      mm(j, k) = I;
      mm(k, j) = I;
      small.push_back(mm);
    }
  // Two embeddings: diagonal slot [[a,0],[0,a]] and off-diagonal [[0,b],[b,0]].
  std::vector<MatC> basis;
  basis.reserve(2 * n * n);
  for (const auto& a : small) {
    MatC M = MatC::Zero(2 * n, 2 * n);
    M.topLeftCorner(n, n) = a;
    M.bottomRightCorner(n, n) = a;
    basis.push_back(M);
  }
  for (const auto& b : small) {
    MatC M = MatC::Zero(2 * n, 2 * n);
    M.topRightCorner(n, n) = b;
    M.bottomLeftCorner(n, n) = b;
    basis.push_back(M);
  }
  return basis;
}

MatC project_gplus(const MatC& W) {
  MatC A = (W - W.adjoint()) / 2.0;
  return (A + gamma(A)) / 2.0;
}

bool is_gplus(const MatC& M, double tol) {
  double scale = std::max(1.0, max_abs(M));
  return max_abs(MatC(M + M.adjoint())) <= tol * scale &&
         max_abs(MatC(M - gamma(M))) <= tol * scale;
}

MatC random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  MatC Z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<MatC> qr(Z);
  MatC Q = qr.householderQ();
  MatC R = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is Haar.
  for (int j = 0; j < n; ++j) {
    Complex d = R(j, j);
    Q.col(j) *= d / std::abs(d);
  }
  return Q;
}

MatC random_gplus_group(int n, std::mt19937_64& rng) {
  MatC g1 = random_unitary(n, rng);
  MatC g2 = random_unitary(n, rng);
  MatC p = (g1 + g2) / 2.0, q = (g1 - g2) / 2.0;
  MatC G(2 * n, 2 * n);
  G.topLeftCorner(n, n) = p;
  G.topRightCorner(n, n) = q;
  G.bottomLeftCorner(n, n) = q;
  G.bottomRightCorner(n, n) = p;
  return G;
}

MatC random_gplus_algebra(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  MatC M = MatC::Zero(2 * n, 2 * n);
  for (const auto& B : gplus_basis(n)) M += g(rng) * B;
  return M;
}

namespace {

// Real vectorization of a complex matrix (re and im parts stacked).
VecR vectorize(const MatC& M) {
  const auto rows = M.rows(), cols = M.cols();
  VecR v(2 * rows * cols);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      v(k++) = M(i, j).real();
      v(k++) = M(i, j).imag();
    }
  return v;
}

}  // namespace

MatC solve_orbit_generator(const MatC& upsilon, const MatC& delta,
                           double* relative_residual) {
  const int n = static_cast<int>(upsilon.rows()) / 2;
  const auto basis = gplus_basis(n);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  MatR A(vectorize(upsilon).size(), dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    A.col(i) = vectorize(basis[i] * upsilon - upsilon * basis[i]);
  VecR b = vectorize(delta);
  // The rank threshold must be set before factorization: the decomposition
  // annihilates the trailing block for the rank it sees at compute() time, and
  // a later solve() with a different rank() silently mixes the two.
  Eigen::CompleteOrthogonalDecomposition<MatR> cod;
  cod.setThreshold(1e-10);
  cod.compute(A);
  VecR c = cod.solve(b);  // minimum-norm least squares
  if (relative_residual) {
    double r = (A * c - b).norm() / std::max(1.0, b.norm());
    *relative_residual = r;
  }
  MatC D = MatC::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < dim; ++i) D += c(i) * basis[i];
  return D;
}

double kks_pairing_known(const MatC& upsilon, const MatC& D, const MatC& D_p) {
  return trace_form(MatC(D * D_p - D_p * D), upsilon);
}

double kks_pairing(const MatC& upsilon, const MatC& delta, const MatC& delta_p,
                   double tangency_tol) {
  double r1 = 0, r2 = 0;
  MatC D = solve_orbit_generator(upsilon, delta, &r1);
  MatC Dp = solve_orbit_generator(upsilon, delta_p, &r2);
  if (r1 > tangency_tol || r2 > tangency_tol)
    throw NumericalError("kks_pairing: input not tangent to the orbit (residuals " +
                         std::to_string(r1) + ", " + std::to_string(r2) + ")");
  return kks_pairing_known(upsilon, D, Dp);
}

}  // namespace bcn
