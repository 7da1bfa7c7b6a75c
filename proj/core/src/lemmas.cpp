#include <bcn/lemmas.hpp>

#include <bcn/algebra.hpp>
#include <bcn/cross_section.hpp>
#include <bcn/observables.hpp>
#include <bcn/symplectic.hpp>

#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>

namespace bcn {

namespace {

// (-1)^(e/2) for an even integer e (possibly negative).
int half_sign(int e) { return ((e / 2) % 2 == 0) ? 1 : -1; }

struct SliceScalars {
  VecR lam, th, d, Xabs;
};

SliceScalars slice_scalars(const DualCoordinates& c, const ModelParams& p) {
  SliceScalars s;
  s.lam = c.lambda;
  s.th = c.theta;
  s.d = (1.0 - (p.kappa * p.kappa) * c.lambda.array().square().inverse())
            .sqrt()
            .matrix();
  s.Xabs = build_X(c, p).cwiseAbs();
  return s;
}

// Scale columns to unit max-abs; the power columns span many orders of
// magnitude and would otherwise dominate the pivoting.
MatR equilibrated(const MatR& A, VecR& scale) {
  scale = A.cwiseAbs().colwise().maxCoeff().transpose();
  for (Eigen::Index j = 0; j < scale.size(); ++j) {
    if (scale(j) == 0.0) scale(j) = 1.0;
  }
  return A * scale.cwiseInverse().asDiagonal();
}

double cond_of(const MatR& A) {
  Eigen::JacobiSVD<MatR> svd(A);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

// L^-1 M via column-equilibrated LU.
MatR left_inverse_apply(const MatR& L, const MatR& M, double* cond) {
  VecR s;
  const MatR Lhat = equilibrated(L, s);
  if (cond) *cond = cond_of(Lhat);
  Eigen::FullPivLU<MatR> lu(Lhat);
  if (!lu.isInvertible()) {
    throw NumericalError("singular solve matrix in bracket extraction");
  }
  return s.cwiseInverse().asDiagonal() * lu.solve(M).eval();
}

// M R^-1 via column-equilibrated LU of R^T.
MatR right_inverse_apply(const MatR& M, const MatR& R, double* cond) {
  VecR s;
  const MatR Rhat = equilibrated(R, s);
  if (cond) *cond = cond_of(Rhat);
  Eigen::FullPivLU<MatR> lu(Rhat.transpose());
  if (!lu.isInvertible()) {
    throw NumericalError("singular solve matrix in bracket extraction");
  }
  const MatR Zt = lu.solve(MatR(s.cwiseInverse().asDiagonal() * M.transpose()));
  return Zt.transpose();
}

std::vector<int> default_window(int n, bool even) {
  std::vector<int> w(n);
  for (int c = 1; c <= n; ++c) w[c - 1] = even ? 2 * c : 2 * c - 1;
  return w;
}

void require_window(const std::vector<int>& w, int n, bool even,
                    const char* who) {
  if (static_cast<int>(w.size()) != n) {
    throw DomainError(std::string(who) + ": index window must have n entries");
  }
  for (int v : w) {
    if (v < 1 || v % 2 != (even ? 0 : 1)) {
      throw DomainError(std::string(who) + ": index window has wrong parity");
    }
  }
}

}  // namespace

MatR vandermonde_U(const VecR& lambda) {
  const int n = static_cast<int>(lambda.size());
  std::vector<int> exps(n);
  for (int b = 1; b <= n; ++b) exps[b - 1] = 2 * b - 1;
  return power_matrix(lambda, exps);
}

MatR power_matrix(const VecR& lambda, const std::vector<int>& exponents) {
  const int n = static_cast<int>(lambda.size());
  MatR M(n, static_cast<int>(exponents.size()));
  for (int a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < exponents.size(); ++c) {
      M(a, static_cast<int>(c)) = std::pow(lambda(a), exponents[c]);
    }
  }
  return M;
}

MatR extract_P(const DualCoordinates& c, const ModelParams& p,
               std::vector<int> window, double* condU,
               const SeededDefects& defects) {
  const int n = p.n;
  if (window.empty()) window = default_window(n, true);
  require_window(window, n, true, "extract_P");

  const PhasePoint x = build_point(c, p, defects);
  MatR Bn(n, n);
  for (int ci = 0; ci < n; ++ci) {
    for (int di = 0; di < n; ++di) {
      const int m = window[ci], l = window[di];
      const double b = poisson(Observable::phi(m), Observable::phi(l), x, p,
                               defects);
      Bn(ci, di) = half_sign(m + l) * b / 4.0;
    }
  }
  std::vector<int> exps(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) exps[i] = window[i] - 1;
  const MatR U = power_matrix(c.lambda, exps);
  double cl = 0.0, cr = 0.0;
  const MatR X = left_inverse_apply(U.transpose(), Bn, &cl);
  const MatR P = right_inverse_apply(X, U, &cr);
  if (condU) *condU = std::max(cl, cr);
  return P;
}

MatR extract_Q(const DualCoordinates& c, const ModelParams& p,
               std::vector<int> window_k, std::vector<int> window_m,
               double* condW, double* condU, const SeededDefects& defects) {
  const int n = p.n;
  if (window_k.empty()) window_k = default_window(n, true);
  if (window_m.empty()) window_m = default_window(n, true);
  require_window(window_k, n, true, "extract_Q");
  require_window(window_m, n, true, "extract_Q");

  const SliceScalars s = slice_scalars(c, p);
  for (int b = 0; b < n; ++b) {
    if (std::abs(std::sin(s.th(b))) < 1e-3) {
      throw DomainError(
          "extract_Q requires |sin theta| >= 1e-3 for every angle "
          "(weight-matrix invertibility)");
    }
  }

  const PhasePoint x = build_point(c, p, defects);
  MatR Bn(n, n);
  for (int ci = 0; ci < n; ++ci) {
    for (int di = 0; di < n; ++di) {
      const int k = window_k[ci], m = window_m[di];
      const double b = poisson(Observable::chi(k), Observable::phi(m), x, p,
                               defects);
      Bn(ci, di) = -half_sign(k + m) * b / 4.0;
    }
  }

  MatR W(n, n);  // W_{c,b} = lambda_b^{k_c} d_b |X_b| sin(theta_b)
  for (int ci = 0; ci < n; ++ci) {
    for (int b = 0; b < n; ++b) {
      W(ci, b) = std::pow(s.lam(b), window_k[ci]) * s.d(b) * s.Xabs(b) *
                 std::sin(s.th(b));
    }
  }
  std::vector<int> exps(window_m.size());
  for (std::size_t i = 0; i < window_m.size(); ++i) exps[i] = window_m[i] - 1;
  const MatR U = power_matrix(c.lambda, exps);

  double cw = 0.0, cu = 0.0;
  const MatR X = left_inverse_apply(W, Bn, &cw);
  const MatR Q = right_inverse_apply(X, U, &cu);
  if (condW) *condW = cw;
  if (condU) *condU = cu;
  return Q;
}

MatR extract_R(const DualCoordinates& c, const ModelParams& p,
               std::vector<int> window, double* condW,
               const SeededDefects& defects) {
  const int n = p.n;
  if (window.empty()) window = default_window(n, false);
  require_window(window, n, false, "extract_R");

  const SliceScalars s = slice_scalars(c, p);
  for (int a = 0; a < n; ++a) {
    if (std::abs(std::cos(s.th(a))) < 1e-3) {
      throw DomainError(
          "extract_R requires |cos theta| >= 1e-3 for every angle "
          "(weight-matrix invertibility)");
    }
  }

  const PhasePoint x = build_point(c, p, defects);
  MatR scaled(n, n);
  for (int ci = 0; ci < n; ++ci) {
    for (int di = 0; di < n; ++di) {
      const int k = window[ci], l = window[di];
      const double b = poisson(Observable::chi(k), Observable::chi(l), x, p,
                               defects);
      scaled(ci, di) = half_sign(k - l) * (b - closed_chi_chi(k, l, c, p)) / 4.0;
    }
  }

  MatR W(n, n);  // W_{a,c} = lambda_a^{k_c} d_a |X_a| cos(theta_a)
  for (int a = 0; a < n; ++a) {
    for (int ci = 0; ci < n; ++ci) {
      W(a, ci) = std::pow(s.lam(a), window[ci]) * s.d(a) * s.Xabs(a) *
                 std::cos(s.th(a));
    }
  }
  double cw = 0.0, cw2 = 0.0;
  const MatR X = left_inverse_apply(W.transpose(), scaled, &cw);
  const MatR R = right_inverse_apply(X, W, &cw2);
  if (condW) *condW = std::max(cw, cw2);
  return R;
}

BracketMatrices extract_all(const DualCoordinates& c, const ModelParams& p,
                            const SeededDefects& defects) {
  BracketMatrices out;
  double cU = 0.0, cWq = 0.0, cUq = 0.0, cWr = 0.0;
  out.P = extract_P(c, p, {}, &cU, defects);
  out.Q = extract_Q(c, p, {}, {}, &cWq, &cUq, defects);
  out.R = extract_R(c, p, {}, &cWr, defects);
  out.condU = std::max(cU, cUq);
  out.condW = std::max(cWq, cWr);
  return out;
}

double closed_chi_phi(int k, int m, const PhasePoint& x, const ModelParams& p) {
  if (k < 0 || m < 1) throw DomainError("closed_chi_phi requires k >= 0, m >= 1");
  const MatC C = c_matrix(p.n);
  const MatC Zt = x.y.adjoint() * z_matrix(x.ul, p) * x.y;
  const MatC Yk = mat_pow(x.Y, k);
  const MatC Ym1 = mat_pow(x.Y, m - 1);
  const Complex tr = ((Yk * C * Ym1 - Ym1 * C * Yk) * Zt).trace();
  return chi(k + m - 1, x, p) + 0.5 * tr.real();
}

namespace {

// Shared assembly for the closed slice forms of the chi-chi bracket. Each
// contribution is also reported through `biggest` so callers can quote the
// scale of the sums next to a residual.
struct ChiChiSums {
  double S1 = 0.0;      // single sum, lambda^(k+l-1) d^2 |X|^2 sin(2 theta)
  double inv_p = 0.0;   // sum sin(th_a - th_b) / (lambda_a + lambda_b)
  double inv_m = 0.0;   // sum sin(th_a + th_b) / (lambda_a - lambda_b)
  double res_p = 0.0;   // sum sin(th_a - th_b) (la+lb) / (4mu^2 - (la+lb)^2)
  double res_m = 0.0;   // sum sin(th_a + th_b) (la-lb) / (4mu^2 - (la-lb)^2)
  double full_p = 0.0;  // sum sin(th_a - th_b) / ((4mu^2 - (la+lb)^2)(la+lb))
  double full_m = 0.0;  // sum sin(th_a + th_b) / ((4mu^2 - (la-lb)^2)(la-lb))
  double biggest = 0.0;
};

ChiChiSums chi_chi_sums(int k, int l, const SliceScalars& s, double mu) {
  const int n = static_cast<int>(s.lam.size());
  ChiChiSums out;
  auto note = [&out](double v) {
    out.biggest = std::max(out.biggest, std::abs(v));
    return v;
  };
  for (int a = 0; a < n; ++a) {
    out.S1 += note(std::pow(s.lam(a), k + l - 1) * s.d(a) * s.d(a) *
                   s.Xabs(a) * s.Xabs(a) * std::sin(2.0 * s.th(a)));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const double w = std::pow(s.lam(a), k) * std::pow(s.lam(b), l) *
                       s.d(a) * s.d(b) * s.Xabs(a) * s.Xabs(b);
      const double sp = s.lam(a) + s.lam(b);
      const double sm = s.lam(a) - s.lam(b);
      const double dp = 4.0 * mu * mu - sp * sp;
      const double dm = 4.0 * mu * mu - sm * sm;
      if (std::abs(sp) < 1e-12 || std::abs(sm) < 1e-12 ||
          std::abs(dp) < 1e-12 || std::abs(dm) < 1e-12) {
        throw NumericalError("resonant denominator in closed bracket form");
      }
      const double sd = std::sin(s.th(a) - s.th(b));
      const double ss = std::sin(s.th(a) + s.th(b));
      out.inv_p += note(w * sd / sp);
      out.inv_m += note(w * ss / sm);
      out.res_p += note(w * sd * sp / dp);
      out.res_m += note(w * ss * sm / dm);
      out.full_p += note(w * sd / (dp * sp));
      out.full_m += note(w * ss / (dm * sm));
    }
  }
  return out;
}

}  // namespace

double closed_chi_chi(int k, int l, const DualCoordinates& c,
                      const ModelParams& p) {
  if (k < 1 || l < 1 || k % 2 == 0 || l % 2 == 0) {
    throw DomainError("closed_chi_chi requires odd positive k, l");
  }
  const SliceScalars s = slice_scalars(c, p);
  const ChiChiSums sums = chi_chi_sums(k, l, s, p.mu);
  const int s_pp = half_sign(k + l + 2);
  const int s_pm = half_sign(k - l + 2);
  const double mu2 = p.mu * p.mu;
  return s_pm * 2.0 * (k - l) * sums.S1 + s_pp * 16.0 * mu2 * sums.full_p +
         s_pm * 16.0 * mu2 * sums.full_m;
}

IdentityReport check_term_identities(const DualCoordinates& c,
                                     const ModelParams& p, int k, int l,
                                     const SeededDefects& defects) {
  if (k < 1 || l < 1 || k % 2 == 0 || l % 2 == 0) {
    throw DomainError("check_term_identities requires odd positive k, l");
  }
  const PhasePoint x = build_point(c, p, defects);
  const Tangent tk = hvf_chi(k, x, p, defects);
  const Tangent tl = hvf_chi(l, x, p, defects);
  // Bracket {chi_k, chi_l} = Omega(X_chi_l, X_chi_k): the first slot of the
  // form carries the chi_l field.
  const OmegaTerms terms = omega_breakdown(x, tl, tk);

  const SliceScalars s = slice_scalars(c, p);
  const ChiChiSums sums = chi_chi_sums(k, l, s, p.mu);
  const int s_pp = half_sign(k + l + 2);
  const int s_pm = half_sign(k - l + 2);
  const double mu2 = p.mu * p.mu;

  const double pair_closed =
      s_pm * 2.0 * (k - l) * sums.S1 + 4.0 * s_pp * sums.inv_p +
      4.0 * s_pm * sums.inv_m;
  const double orbit_closed = 4.0 * s_pp * sums.res_p + 4.0 * s_pm * sums.res_m;
  const double total_closed =
      s_pm * 2.0 * (k - l) * sums.S1 + s_pp * 16.0 * mu2 * sums.full_p +
      s_pm * 16.0 * mu2 * sums.full_m;

  IdentityReport rep;
  rep.k = k;
  rep.l = l;
  rep.t1 = terms.t1;
  rep.t2 = terms.t2;
  rep.t3 = terms.t3;
  rep.t4 = terms.t4;
  rep.first_pair_error = std::abs((terms.t1 - terms.t2) - pair_closed);
  rep.orbit_term_error = std::abs(terms.t4 - orbit_closed);
  rep.third_term_abs = std::abs(terms.t3);
  rep.total_error = std::abs(terms.total() - total_closed);
  rep.largest_summand =
      std::max({std::abs(2.0 * (k - l)), 4.0, 16.0 * mu2}) * sums.biggest;
  return rep;
}

}  // namespace bcn
