#include <bcn/symplectic.hpp>

#include <bcn/algebra.hpp>
#include <bcn/cross_section.hpp>
#include <bcn/observables.hpp>

#include <cmath>
#include <string>

namespace bcn {

namespace {

// Real part of tr(A B). The pairings entering the form are real in exact
// arithmetic once the inputs satisfy their structural invariants (validated
// below); the imaginary residue is roundoff at the scale of the matrix
// products, which for high powers of Y dwarfs the trace itself, so it is
// discarded rather than thresholded.
double re_trace(const MatC& A, const MatC& B) {
  return (A * B).trace().real();
}

void require_antiherm(const MatC& M, const char* what, double tol) {
  const double dev = max_abs(MatC(M + M.adjoint()));
  if (dev > tol * std::max(1.0, max_abs(M))) {
    throw NumericalError(std::string(what) +
                         " deviates from anti-Hermitian by " +
                         std::to_string(dev));
  }
}

// y^-1 dy for a unitary y; checked anti-Hermitian within tol.
MatC left_logarithmic(const PhasePoint& x, const Tangent& t, double tol) {
  const MatC xi = x.y.adjoint() * t.dy;
  const double dev = max_abs(MatC(xi + xi.adjoint()));
  const double scale = std::max(1.0, max_abs(xi));
  if (dev > tol * scale) {
    throw NumericalError("y^-1 dy deviates from anti-Hermitian by " +
                         std::to_string(dev));
  }
  return xi;
}

// Orbit generator for the dul component: prefer the one carried by the
// tangent, otherwise recover it by least squares and enforce tangency.
MatC orbit_generator(const PhasePoint& x, const Tangent& t, double tangency_tol) {
  if (t.has_D) return t.D;
  if (max_abs(t.dul) < 1e-15) return MatC::Zero(t.dul.rows(), t.dul.cols());
  double residual = 0.0;
  MatC D = solve_orbit_generator(x.ul, t.dul, &residual);
  if (residual > tangency_tol) {
    throw NumericalError("orbit-tangency residual " + std::to_string(residual) +
                         " exceeds tolerance " + std::to_string(tangency_tol));
  }
  return D;
}

}  // namespace

double omega_tstar(const PhasePoint& x, const Tangent& t1, const Tangent& t2,
                   double antiherm_tol) {
  const MatC a1 = left_logarithmic(x, t1, antiherm_tol);
  const MatC a2 = left_logarithmic(x, t2, antiherm_tol);
  require_antiherm(t1.dY, "dY", antiherm_tol);
  require_antiherm(t2.dY, "dY", antiherm_tol);
  return re_trace(a1, t2.dY) - re_trace(a2, t1.dY) +
         re_trace(a1 * a2 - a2 * a1, x.Y);
}

OmegaTerms omega_breakdown(const PhasePoint& x, const Tangent& t1,
                           const Tangent& t2, double tangency_tol) {
  OmegaTerms out;
  const MatC a1 = left_logarithmic(x, t1, 1e-8);
  const MatC a2 = left_logarithmic(x, t2, 1e-8);
  require_antiherm(t1.dY, "dY", 1e-8);
  require_antiherm(t2.dY, "dY", 1e-8);
  out.t1 = re_trace(a1, t2.dY);
  out.t2 = re_trace(a2, t1.dY);
  out.t3 = re_trace(a1 * a2 - a2 * a1, x.Y);
  const MatC D1 = orbit_generator(x, t1, tangency_tol);
  const MatC D2 = orbit_generator(x, t2, tangency_tol);
  out.t4 = kks_pairing_known(x.ul, D1, D2);
  return out;
}

double omega_total(const PhasePoint& x, const Tangent& t1, const Tangent& t2,
                   double tangency_tol) {
  return omega_breakdown(x, t1, t2, tangency_tol).total();
}

Tangent hamiltonian_field(const Observable& f, const PhasePoint& x,
                          const ModelParams& p, const SeededDefects& defects) {
  if (f.kind == Observable::Kind::PowerTrace) return hvf_phi(f.index, x);
  return hvf_chi(f.index, x, p, defects);
}

double differential(const Observable& f, const PhasePoint& x,
                    const ModelParams& p, const Tangent& v) {
  if (f.kind == Observable::Kind::PowerTrace) return d_phi(f.index, x, v);
  return d_chi(f.index, x, p, v);
}

double poisson(const Observable& f, const Observable& g, const PhasePoint& x,
               const ModelParams& p, const SeededDefects& defects) {
  const Tangent Xf = hamiltonian_field(f, x, p, defects);
  const Tangent Xg = hamiltonian_field(g, x, p, defects);
  return omega_total(x, Xg, Xf);
}

Tangent fd_tangent(const DualCoordinates& c, const ModelParams& p,
                   int direction, double h, const SeededDefects& defects) {
  const int n = p.n;
  if (direction < 0 || direction >= 2 * n) {
    throw DomainError("fd_tangent direction out of range");
  }
  if (h <= 0.0) throw DomainError("fd_tangent requires a positive step");

  DualCoordinates cp = c, cm = c;
  if (direction < n) {
    cp.lambda(direction) += h;
    cm.lambda(direction) -= h;
  } else {
    cp.theta(direction - n) += h;
    cm.theta(direction - n) -= h;
  }
  cp.validate(p);
  cm.validate(p);

  const PhasePoint x0 = build_point(c, p, defects);
  const PhasePoint xp = build_point(cp, p, defects);
  const PhasePoint xm = build_point(cm, p, defects);

  Tangent t;
  // Project the y-increment through the Lie algebra so y^-1 dy is exactly
  // anti-Hermitian; central differences alone leave an O(h^2) Hermitian part.
  MatC xi = x0.y.adjoint() * ((xp.y - xm.y) / (2.0 * h));
  xi = 0.5 * (xi - xi.adjoint()).eval();
  t.dy = x0.y * xi;

  MatC dY = (xp.Y - xm.Y) / (2.0 * h);
  t.dY = 0.5 * (dY - dY.adjoint()).eval();

  MatC dul = project_gplus((xp.ul - xm.ul) / (2.0 * h));
  t.dul = dul;

  const double gate = std::max(1e-8, 10.0 * h * h);
  double residual = 0.0;
  t.D = solve_orbit_generator(x0.ul, t.dul, &residual);
  if (residual > gate) {
    throw NumericalError("finite-difference dul not orbit-tangent: residual " +
                         std::to_string(residual));
  }
  t.has_D = true;
  return t;
}

MatR pullback_matrix(const DualCoordinates& c, const ModelParams& p, double h,
                     const SeededDefects& defects) {
  const int n = p.n;
  const PhasePoint x0 = build_point(c, p, defects);
  std::vector<Tangent> tangents;
  tangents.reserve(2 * n);
  for (int d = 0; d < 2 * n; ++d) {
    tangents.push_back(fd_tangent(c, p, d, h, defects));
  }
  MatR M = MatR::Zero(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = i + 1; j < 2 * n; ++j) {
      const double v = omega_total(x0, tangents[i], tangents[j]);
      M(i, j) = v;
      M(j, i) = -v;
    }
  }
  return M;
}

}  // namespace bcn
