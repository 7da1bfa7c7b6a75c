// End-to-end acceptance gate. Each numbered criterion prints exactly one
// verdict line; the process exits nonzero if any criterion fails. Sample
// counts and tolerances are fixed here on purpose — this binary, not the
// unit suites, is the release gate.

#include <bcn/algebra.hpp>
#include <bcn/constraints.hpp>
#include <bcn/cross_section.hpp>
#include <bcn/lemmas.hpp>
#include <bcn/observables.hpp>
#include <bcn/sampling.hpp>
#include <bcn/symplectic.hpp>

#include <cmath>
#include <cstdio>
#include <string>

using namespace bcn;

namespace {

int failures = 0;

void verdict(int index, const std::string& name, bool passed, double worst,
             double tol) {
  std::printf("[%s] %02d %-38s worst=%.3e tol=%.1e\n",
              passed ? "PASS" : "FAIL", index, name.c_str(), worst, tol);
  if (!passed) ++failures;
}

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double structure_violation(const DualCoordinates& c, const ModelParams& p) {
  SliceBundle b = build_slice(c, p);
  const int N = 2 * p.n;
  MatC id = MatC::Identity(N, N);
  MatC y = b.x.y;
  double worst = 0.0;
  auto track = [&](double v) { worst = std::max(worst, v); };
  track(max_abs(MatC(b.spectral.h.adjoint() * b.spectral.h - id)));
  track(max_abs(MatC(b.A.adjoint() * b.A - id)));
  track(max_abs(MatC(gamma(b.A) * b.A - id)));
  track(max_abs(MatC(b.B.adjoint() * b.B - id)));
  track(max_abs(MatC(gamma(b.B) * b.B - id)));
  track(max_abs(MatC(y.adjoint() * y - id)));
  track(max_abs(MatC(y * y - b.B)));
  track(std::abs(b.V.squaredNorm() - 2.0 * p.n));
  track((c_matrix(p.n) * b.V + b.V).cwiseAbs().maxCoeff());
  return worst;
}

struct SampleSet {
  ModelParams p;
  DualCoordinates c;
};

SampleSet draw(int n, std::mt19937_64& rng, bool floor_sin = false,
               bool floor_cos = false) {
  SampleSet s;
  s.p = sample_params(n, rng);
  SampleOptions opt;
  opt.floor_sin = floor_sin;
  opt.floor_cos = floor_cos;
  s.c = sample_coordinates(s.p, rng, opt);
  return s;
}

// Criteria 1 and 2 share one sample stream of 1000 points.
void criteria_constraint_and_structure() {
  std::mt19937_64 rng(1001);
  double worst_J = 0.0, worst_struct = 0.0;
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 250; ++rep) {
      SampleSet s = draw(n, rng);
      PhasePoint x = build_point(s.c, s.p);
      worst_J = std::max(worst_J, constraint_violation(x));
      worst_struct = std::max(worst_struct, structure_violation(s.c, s.p));
    }
  }
  verdict(1, "constraint-certificate", worst_J <= 1e-9, worst_J, 1e-9);
  verdict(2, "structure-certificates", worst_struct <= 1e-10, worst_struct,
          1e-10);
}

void criterion_reductions() {
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      SampleSet s = draw(n, rng);
      PhasePoint x = build_point(s.c, s.p);
      for (int m = 1; m <= 2 * n + 2; ++m)
        worst = std::max(worst, rel_err(phi(m, x), phi_red(m, s.c.lambda)));
      for (int k = 0; k <= 2 * n + 2; ++k)
        worst = std::max(worst, rel_err(chi(k, x, s.p), chi_red(k, s.c, s.p)));
    }
  }
  verdict(3, "observable-reduction", worst <= 1e-10, worst, 1e-10);
}

void criterion_derivatives() {
  std::mt19937_64 rng(1005);
  const double h = 1e-6;
  double worst = 0.0;
  std::normal_distribution<double> g;
  for (int curve = 0; curve < 50; ++curve) {
    int n = 1 + static_cast<int>(rng() % 3);
    SampleSet s = draw(n, rng);
    PhasePoint x = build_point(s.c, s.p);
    const int N = 2 * n;
    MatC xi(N, N), dY(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        xi(i, j) = Complex(g(rng), g(rng));
        dY(i, j) = Complex(g(rng), g(rng));
      }
    xi = (xi - xi.adjoint().eval()) / 2.0;
    dY = (dY - dY.adjoint().eval()) / 2.0;
    MatC D = random_gplus_algebra(n, rng);
    Tangent t;
    t.dy = x.y * xi;
    t.dY = dY;
    t.dul = D * x.ul - x.ul * D;
    t.has_D = true;
    t.D = D;
    PhasePoint xp = flow_point(x, xi, dY, D, h);
    PhasePoint xm = flow_point(x, xi, dY, D, -h);
    for (int m : {2, 4}) {
      double fd = (phi(m, xp) - phi(m, xm)) / (2 * h);
      worst = std::max(worst, rel_err(d_phi(m, x, t), fd));
    }
    for (int k : {1, 2, 3}) {
      double fd = (chi(k, xp, s.p) - chi(k, xm, s.p)) / (2 * h);
      worst = std::max(worst, rel_err(d_chi(k, x, s.p, t), fd));
    }
  }
  verdict(4, "derivative-oracle", worst <= 1e-6, worst, 1e-6);
}

void criterion_mixed_bracket() {
  std::mt19937_64 rng(1007);
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      SampleSet s = draw(n, rng);
      PhasePoint x = build_point(s.c, s.p);
      for (int k = 2; k <= 2 * n; k += 2)
        for (int m = 2; m <= 2 * n; m += 2) {
          double numeric =
              poisson(Observable::chi(k), Observable::phi(m), x, s.p);
          worst = std::max(worst, rel_err(numeric, closed_chi_phi(k, m, x, s.p)));
          worst = std::max(worst,
                           rel_err(numeric, 2.0 * chi_red(k + m - 1, s.c, s.p)));
        }
    }
  }
  verdict(5, "mixed-bracket-closed-form", worst <= 1e-9, worst, 1e-9);
}

void criterion_lemma_pipeline() {
  std::mt19937_64 rng(1009);
  double worst = 0.0;
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 200; ++rep) {
      SampleSet s = draw(n, rng, true, true);
      BracketMatrices B = extract_all(s.c, s.p);
      double scaleU = std::max(1.0, B.condU);
      double scaleW = std::max(1.0, std::max(B.condW, B.condU));
      double devP = B.P.cwiseAbs().maxCoeff() / scaleU;
      double devQ =
          (B.Q - MatR::Identity(n, n)).cwiseAbs().maxCoeff() / scaleW;
      double devR = B.R.cwiseAbs().maxCoeff() / scaleW;
      ok = ok && devP <= 1e-8 && devQ <= 1e-8 && devR <= 1e-7;
      worst = std::max({worst, devP, devQ, devR});
    }
  }
  verdict(6, "lemma-pipeline", ok, worst, 1e-7);
}

void criterion_term_identities() {
  std::mt19937_64 rng(1011);
  double worst = 0.0, worst_third = 0.0;
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      SampleSet s = draw(n, rng);
      for (int k = 1; k <= 2 * n - 1; k += 2)
        for (int l = 1; l <= k; l += 2) {
          IdentityReport r = check_term_identities(s.c, s.p, k, l);
          double scale = std::max(1.0, r.largest_summand);
          worst = std::max({worst, r.first_pair_error / scale,
                            r.orbit_term_error / scale, r.total_error / scale});
          worst_third = std::max(worst_third, r.third_term_abs / scale);
        }
    }
  }
  bool ok = worst <= 1e-9 && worst_third <= 1e-10;
  verdict(7, "term-identities", ok, std::max(worst, worst_third), 1e-9);
}

void criterion_pullback() {
  std::mt19937_64 rng(1013);
  double worst = 0.0;
  int counts[3] = {34, 33, 33};
  for (int n = 1; n <= 3; ++n) {
    MatR expect = MatR::Zero(2 * n, 2 * n);
    expect.topRightCorner(n, n).setIdentity();
    expect.bottomLeftCorner(n, n) = -MatR::Identity(n, n);
    for (int rep = 0; rep < counts[n - 1]; ++rep) {
      SampleSet s = draw(n, rng);
      MatR M = pullback_matrix(s.c, s.p, 1e-5);
      worst = std::max(worst, (M - expect).cwiseAbs().maxCoeff());
    }
  }
  verdict(8, "canonical-pullback", worst <= 1e-6, worst, 1e-6);
}

void criterion_kappa_limit() {
  std::mt19937_64 rng(1015);
  double worst_J = 0.0;      // constraint certificate at kappa = 0
  double worst_struct = 0.0; // structure certificates at kappa = 0
  double worst_red = 0.0;    // reduction identities at kappa = 0
  double worst_gap = 0.0;    // kappa = 1e-6 versus kappa = 0
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      ModelParams p0 = sample_params(n, rng);
      p0.kappa = 0.0;
      ModelParams pe = p0;
      pe.kappa = 1e-6;
      SampleOptions opt;
      opt.floor_sin = opt.floor_cos = true;
      DualCoordinates c = sample_coordinates(p0, rng, opt);

      PhasePoint x0 = build_point(c, p0);
      worst_J = std::max(worst_J, constraint_violation(x0));
      worst_struct = std::max(worst_struct, structure_violation(c, p0));
      for (int k = 0; k <= 2 * n; ++k)
        worst_red =
            std::max(worst_red, rel_err(chi(k, x0, p0), chi_red(k, c, p0)));

      PhasePoint xe = build_point(c, pe);
      worst_gap = std::max(worst_gap, max_abs(MatC(x0.y - xe.y)));
      worst_gap = std::max(worst_gap, max_abs(MatC(x0.Y - xe.Y)));
      worst_gap = std::max(worst_gap, max_abs(MatC(x0.ul - xe.ul)));
      BracketMatrices B0 = extract_all(c, p0);
      BracketMatrices Be = extract_all(c, pe);
      worst_gap =
          std::max(worst_gap, (B0.Q - Be.Q).cwiseAbs().maxCoeff());
      MatR M0 = pullback_matrix(c, p0);
      MatR Me = pullback_matrix(c, pe);
      worst_gap = std::max(worst_gap, (M0 - Me).cwiseAbs().maxCoeff());
    }
  }
  bool ok = worst_J <= 1e-9 && worst_struct <= 1e-10 && worst_red <= 1e-9 &&
            worst_gap <= 1e-4;
  verdict(9, "kappa-limit-continuity", ok, worst_gap, 1e-4);
}

void criterion_mutation_sensitivity() {
  std::mt19937_64 rng(1017);
  ModelParams p = sample_params(2, rng);
  SampleOptions opt;
  opt.floor_sin = opt.floor_cos = true;
  DualCoordinates c = sample_coordinates(p, rng, opt);

  // Mutation A: wrong commutator parity in the orbit component of the
  // mixed-trace Hamiltonian field. The angle-angle extraction must blow up.
  double devA = 0.0;
  bool caughtA = false;
  try {
    SeededDefects d;
    d.swap_orbit_bracket_parity = true;
    devA = extract_R(c, p, {}, nullptr, d).cwiseAbs().maxCoeff();
    caughtA = devA > 1e-7;
  } catch (const std::exception&) {
    caughtA = true;
    devA = 1.0;
  }

  // Mutation B: dropped constant shift in the scattering-matrix numerator.
  // The built point must leave the constraint surface or break a structure
  // certificate, which the pullback/constraint checks detect.
  double devB = 0.0;
  bool caughtB = false;
  try {
    SeededDefects d;
    d.drop_scattering_shift = true;
    PhasePoint x = build_point(c, p, d);
    devB = constraint_violation(x);
    caughtB = devB > 1e-9;
  } catch (const std::exception&) {
    caughtB = true;
    devB = 1.0;
  }

  verdict(10, "mutation-sensitivity", caughtA && caughtB, std::min(devA, devB),
          1e-9);
}

}  // namespace

int main() {
  std::setbuf(stdout, nullptr);
  criteria_constraint_and_structure();
  criterion_reductions();
  criterion_derivatives();
  criterion_mixed_bracket();
  criterion_lemma_pipeline();
  criterion_term_identities();
  criterion_pullback();
  criterion_kappa_limit();
  criterion_mutation_sensitivity();
  if (failures == 0) {
    std::printf("acceptance: all criteria satisfied\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
