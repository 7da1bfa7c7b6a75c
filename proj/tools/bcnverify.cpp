// bcnverify: command-line driver for the slice-verification library.
// Subcommands: point | verify | brackets | pullback. Exit codes: 0 all checks
// pass, 1 at least one check failed, 2 configuration or domain error.

#include <bcn/algebra.hpp>
#include <bcn/constraints.hpp>
#include <bcn/cross_section.hpp>
#include <bcn/lemmas.hpp>
#include <bcn/observables.hpp>
#include <bcn/report.hpp>
#include <bcn/sampling.hpp>
#include <bcn/symplectic.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace bcn;
using nlohmann::json;

struct RunConfig {
  int n = 2;
  double mu = 0.1;
  double nu = 1.0;
  double kappa = 0.0;
  std::vector<double> lambda;  // explicit coordinates; empty means "sample"
  std::vector<double> theta;
  int samples = 50;
  std::uint64_t seed = 1;
  double fd_step = 1e-5;
  double tol_constraint = 1e-9;
  double tol_structure = 1e-10;
  double tol_reduction = 1e-10;
  double tol_derivative = 1e-6;
  double tol_bracket = 1e-9;
  double tol_lemma_p = 1e-8;
  double tol_lemma_q = 1e-8;
  double tol_lemma_r = 1e-7;
  double tol_identity = 1e-9;
  double tol_pullback = 1e-6;
  std::string out;
  std::string format = "text";
  std::string csv;
  std::string defect;  // "", "orbit-bracket-parity", "drop-scattering-shift"
};

// Relative deviation against the larger operand, floored at scale 1.
double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

ModelParams params_of(const RunConfig& cfg) {
  ModelParams p;
  p.n = cfg.n;
  p.mu = cfg.mu;
  p.nu = cfg.nu;
  p.kappa = cfg.kappa;
  p.validate();
  return p;
}

SeededDefects defects_of(const RunConfig& cfg) {
  SeededDefects d;
  if (cfg.defect == "orbit-bracket-parity") {
    d.swap_orbit_bracket_parity = true;
  } else if (cfg.defect == "drop-scattering-shift") {
    d.drop_scattering_shift = true;
  } else if (!cfg.defect.empty()) {
    throw DomainError("unknown defect fixture: " + cfg.defect);
  }
  return d;
}

std::optional<DualCoordinates> explicit_coords(const RunConfig& cfg) {
  if (cfg.lambda.empty() && cfg.theta.empty()) return std::nullopt;
  if (static_cast<int>(cfg.lambda.size()) != cfg.n ||
      static_cast<int>(cfg.theta.size()) != cfg.n) {
    throw DomainError("--lambda and --theta must each supply exactly n values");
  }
  DualCoordinates c;
  c.lambda = Eigen::Map<const VecR>(cfg.lambda.data(), cfg.n);
  c.theta = Eigen::Map<const VecR>(cfg.theta.data(), cfg.n);
  return c;
}

void echo_config(Report& rep, const RunConfig& cfg) {
  rep.config_integer("n", cfg.n);
  rep.config_number("mu", cfg.mu);
  rep.config_number("nu", cfg.nu);
  rep.config_number("kappa", cfg.kappa);
  if (!cfg.lambda.empty()) {
    rep.config_real_vector(
        "lambda", Eigen::Map<const VecR>(cfg.lambda.data(), cfg.lambda.size()));
    rep.config_real_vector(
        "theta", Eigen::Map<const VecR>(cfg.theta.data(), cfg.theta.size()));
  } else {
    rep.config_integer("samples", cfg.samples);
    rep.config_integer("seed", static_cast<long long>(cfg.seed));
  }
  rep.config_number("fd_step", cfg.fd_step);
  if (!cfg.defect.empty()) rep.config_text("defect", cfg.defect);
}

int emit(const Report& rep, const RunConfig& cfg) {
  const std::string body =
      cfg.format == "json" ? rep.to_json_string() : rep.to_text();
  if (cfg.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw DomainError("cannot open output path " + cfg.out);
    f << body;
  }
  return rep.all_passed() ? 0 : 1;
}

struct CsvLog {
  std::ofstream f;
  explicit CsvLog(const std::string& path) {
    if (!path.empty()) {
      f.open(path);
      if (!f) throw DomainError("cannot open csv path " + path);
      f << "sample,check,max_error\n";
    }
  }
  void row(int sample, const std::string& check, double err) {
    if (f.is_open()) f << sample << "," << check << "," << err << "\n";
  }
};

// Track the worst error of a named check across samples.
struct Worst {
  double value = 0.0;
  void feed(double e) { value = std::max(value, e); }
  CheckResult done(const std::string& name, double tol) const {
    CheckResult r;
    r.name = name;
    r.max_error = value;
    r.tolerance = tol;
    r.passed = value <= tol;
    return r;
  }
};

double structure_violation(const DualCoordinates& c, const ModelParams& p,
                           const SeededDefects& defects) {
  const SliceBundle s = build_slice(c, p, defects);
  const int N = 2 * p.n;
  const MatC Id = MatC::Identity(N, N);
  const MatC C = c_matrix(p.n);
  double worst = 0.0;
  auto feed = [&worst](double v) { worst = std::max(worst, v); };
  feed(max_abs(MatC(s.spectral.h * s.spectral.h.adjoint() - Id)));
  feed(max_abs(MatC(s.A * s.A.adjoint() - Id)));
  feed(max_abs(MatC(s.B * s.B.adjoint() - Id)));
  feed(max_abs(MatC(s.x.y * s.x.y.adjoint() - Id)));
  feed(max_abs(MatC(gamma(s.A) * s.A - Id)));
  feed(max_abs(MatC(gamma(s.B) * s.B - Id)));
  feed(max_abs(MatC(s.x.y * s.x.y - s.B)));
  feed(std::abs(s.V.squaredNorm() - 2.0 * p.n));
  feed(max_abs(VecC(C * s.V + s.V)));
  return worst;
}

double reduction_violation(const PhasePoint& x, const DualCoordinates& c,
                           const ModelParams& p) {
  double worst = 0.0;
  for (int m = 1; m <= 2 * p.n + 2; ++m) {
    worst = std::max(worst, rel_err(phi(m, x), phi_red(m, c.lambda)));
  }
  for (int k = 0; k <= 2 * p.n + 2; ++k) {
    worst = std::max(worst, rel_err(chi(k, x, p), chi_red(k, c, p)));
  }
  return worst;
}

double derivative_violation(const PhasePoint& x, const ModelParams& p,
                            std::mt19937_64& rng) {
  const int N = 2 * p.n;
  std::normal_distribution<double> g;
  auto randm = [&] {
    MatC Z(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) Z(i, j) = Complex(g(rng), g(rng));
    return MatC(((Z - Z.adjoint()) / 2.0).eval());
  };
  const MatC xi = randm();
  const MatC dY = randm();
  const MatC D = random_gplus_algebra(p.n, rng);
  Tangent v;
  v.dy = x.y * xi;
  v.dY = dY;
  v.dul = D * x.ul - x.ul * D;
  v.has_D = true;
  v.D = D;
  const double h = 1e-6;
  const PhasePoint xp = flow_point(x, xi, dY, D, h);
  const PhasePoint xm = flow_point(x, xi, dY, D, -h);
  double worst = 0.0;
  for (int m = 2; m <= 2 * p.n + 2; m += 2) {
    const double fd = (phi(m, xp) - phi(m, xm)) / (2.0 * h);
    worst = std::max(worst, rel_err(fd, d_phi(m, x, v)));
  }
  for (int k = 0; k <= 2 * p.n + 1; ++k) {
    const double fd = (chi(k, xp, p) - chi(k, xm, p)) / (2.0 * h);
    worst = std::max(worst, rel_err(fd, d_chi(k, x, p, v)));
  }
  return worst;
}

double bracket_violation(const PhasePoint& x, const DualCoordinates& c,
                         const ModelParams& p, const SeededDefects& defects) {
  double worst = 0.0;
  for (int k = 2; k <= 2 * p.n; k += 2) {
    for (int m = 2; m <= 2 * p.n; m += 2) {
      const double br =
          poisson(Observable::chi(k), Observable::phi(m), x, p, defects);
      worst = std::max(worst, rel_err(br, closed_chi_phi(k, m, x, p)));
      worst = std::max(worst, rel_err(br, 2.0 * chi_red(k + m - 1, c, p)));
    }
  }
  return worst;
}

double identity_violation(const DualCoordinates& c, const ModelParams& p,
                          const SeededDefects& defects, double* third_term) {
  double worst = 0.0;
  double t3w = 0.0;
  for (int k = 1; k <= 2 * p.n - 1; k += 2) {
    for (int l = 1; l <= k; l += 2) {
      const IdentityReport rep = check_term_identities(c, p, k, l, defects);
      const double scale = std::max(1.0, rep.largest_summand);
      worst = std::max({worst, rep.first_pair_error / scale,
                        rep.orbit_term_error / scale, rep.total_error / scale});
      t3w = std::max(t3w, rep.third_term_abs / scale);
    }
  }
  if (third_term) *third_term = t3w;
  return worst;
}

MatR canonical_form(int n) {
  MatR canon = MatR::Zero(2 * n, 2 * n);
  canon.topRightCorner(n, n).setIdentity();
  canon.bottomLeftCorner(n, n) = -MatR::Identity(n, n);
  return canon;
}

int cmd_point(const RunConfig& cfg) {
  const ModelParams p = params_of(cfg);
  const SeededDefects defects = defects_of(cfg);
  const auto coords = explicit_coords(cfg);
  if (!coords) {
    throw DomainError("point requires explicit --lambda and --theta");
  }
  const SliceBundle s = build_slice(*coords, p, defects);
  const auto [J1, J2] = momentum_map(s.x);

  Report rep("slice point");
  echo_config(rep, cfg);
  CheckResult cj;
  cj.name = "momentum-map-vanishing";
  cj.max_error = std::max(max_abs(J1), max_abs(J2));
  cj.tolerance = cfg.tol_constraint;
  cj.passed = cj.max_error <= cj.tolerance;
  rep.add_check(cj);
  CheckResult cs;
  cs.name = "structure-certificates";
  cs.max_error = structure_violation(*coords, p, defects);
  cs.tolerance = cfg.tol_structure;
  cs.passed = cs.max_error <= cs.tolerance;
  rep.add_check(cs);

  rep.add_real_vector("lambda", coords->lambda);
  rep.add_real_vector("theta", coords->theta);
  rep.add_real_vector("q", s.q);
  rep.add_matrix("h", s.spectral.h);
  rep.add_matrix("y", s.x.y);
  rep.add_matrix("Y", s.x.Y);
  rep.add_matrix("upsilon_left", s.x.ul);
  rep.add_matrix("V", MatC(s.V));
  return emit(rep, cfg);
}

int cmd_verify(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const ModelParams p = params_of(cfg);
  const SeededDefects defects = defects_of(cfg);
  std::mt19937_64 rng(cfg.seed);
  CsvLog csv(cfg.csv);

  SampleOptions opt;
  opt.floor_sin = true;  // extraction checks need invertible weights
  opt.floor_cos = true;

  Worst w_constraint, w_structure, w_reduction, w_derivative, w_bracket,
      w_lemma_p, w_lemma_q, w_lemma_r, w_identity, w_third, w_pullback;
  long long rejections = 0;

  const auto coords = explicit_coords(cfg);
  const int total = coords ? 1 : cfg.samples;
  for (int i = 0; i < total; ++i) {
    DualCoordinates c = coords ? *coords : sample_coordinates(p, rng, opt);
    if (coords) c.validate(p);
    const PhasePoint x = build_point(c, p, defects);

    const auto [J1, J2] = momentum_map(x);
    const double ej = std::max(max_abs(J1), max_abs(J2));
    w_constraint.feed(ej);
    csv.row(i, "constraint", ej);

    const double es = structure_violation(c, p, defects);
    w_structure.feed(es);
    csv.row(i, "structure", es);

    const double er = reduction_violation(x, c, p);
    w_reduction.feed(er);
    csv.row(i, "reduction", er);

    const double ed = derivative_violation(x, p, rng);
    w_derivative.feed(ed);
    csv.row(i, "derivative", ed);

    const double eb = bracket_violation(x, c, p, defects);
    w_bracket.feed(eb);
    csv.row(i, "bracket", eb);

    try {
      BracketMatrices bm = extract_all(c, p, defects);
      const int n = p.n;
      const double sp = std::max(1.0, bm.condU);
      const double sw = std::max(1.0, bm.condW);
      const double ep = bm.P.cwiseAbs().maxCoeff() / sp;
      const double eq =
          (bm.Q - MatR::Identity(n, n)).cwiseAbs().maxCoeff() / sw;
      const double errr = bm.R.cwiseAbs().maxCoeff() / sw;
      w_lemma_p.feed(ep);
      w_lemma_q.feed(eq);
      w_lemma_r.feed(errr);
      csv.row(i, "lemma_p", ep);
      csv.row(i, "lemma_q", eq);
      csv.row(i, "lemma_r", errr);
    } catch (const DomainError&) {
      ++rejections;  // angle floor missed on explicit coords; skip extraction
    }

    double t3 = 0.0;
    const double ei = identity_violation(c, p, defects, &t3);
    w_identity.feed(ei);
    w_third.feed(t3);
    csv.row(i, "identity", ei);

    const MatR M = pullback_matrix(c, p, cfg.fd_step, defects);
    const double epb = (M - canonical_form(p.n)).cwiseAbs().maxCoeff();
    w_pullback.feed(epb);
    csv.row(i, "pullback", epb);
  }

  Report rep("verification sweep");
  echo_config(rep, cfg);
  rep.add_check(w_constraint.done("momentum-map-vanishing", cfg.tol_constraint));
  rep.add_check(w_structure.done("structure-certificates", cfg.tol_structure));
  rep.add_check(w_reduction.done("observable-reduction", cfg.tol_reduction));
  rep.add_check(w_derivative.done("derivative-vs-fd", cfg.tol_derivative));
  rep.add_check(w_bracket.done("mixed-bracket-closed-form", cfg.tol_bracket));
  rep.add_check(w_lemma_p.done("lambda-lambda-brackets", cfg.tol_lemma_p));
  rep.add_check(w_lemma_q.done("lambda-theta-brackets", cfg.tol_lemma_q));
  rep.add_check(w_lemma_r.done("theta-theta-brackets", cfg.tol_lemma_r));
  rep.add_check(w_identity.done("term-identities", cfg.tol_identity));
  rep.add_check(w_third.done("third-term-vanishing", 1e-10));
  rep.add_check(w_pullback.done("canonical-pullback", cfg.tol_pullback));
  if (rejections > 0) {
    CheckResult note;
    note.name = "extraction-rejections";
    note.passed = true;
    note.max_error = static_cast<double>(rejections);
    note.tolerance = static_cast<double>(total);
    rep.add_check(note);
  }
  rep.set_wall_seconds(
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count());
  return emit(rep, cfg);
}

int cmd_brackets(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const ModelParams p = params_of(cfg);
  const SeededDefects defects = defects_of(cfg);
  std::mt19937_64 rng(cfg.seed);
  CsvLog csv(cfg.csv);

  SampleOptions opt;
  opt.floor_sin = true;
  opt.floor_cos = true;

  Worst wp, wq, wr;
  double worst_cond = 0.0;
  MatR lastP, lastQ, lastR;
  const auto coords = explicit_coords(cfg);
  const int total = coords ? 1 : cfg.samples;
  for (int i = 0; i < total; ++i) {
    const DualCoordinates c = coords ? *coords : sample_coordinates(p, rng, opt);
    if (coords) c.validate(p);
    const BracketMatrices bm = extract_all(c, p, defects);
    const int n = p.n;
    const double sp = std::max(1.0, bm.condU);
    const double sw = std::max(1.0, bm.condW);
    const double ep = bm.P.cwiseAbs().maxCoeff() / sp;
    const double eq = (bm.Q - MatR::Identity(n, n)).cwiseAbs().maxCoeff() / sw;
    const double er = bm.R.cwiseAbs().maxCoeff() / sw;
    wp.feed(ep);
    wq.feed(eq);
    wr.feed(er);
    csv.row(i, "lemma_p", ep);
    csv.row(i, "lemma_q", eq);
    csv.row(i, "lemma_r", er);
    worst_cond = std::max({worst_cond, bm.condU, bm.condW});
    lastP = bm.P;
    lastQ = bm.Q;
    lastR = bm.R;
  }

  Report rep("bracket matrices");
  echo_config(rep, cfg);
  CheckResult cp = wp.done("lambda-lambda-brackets", cfg.tol_lemma_p);
  cp.metrics.emplace_back("worst_condition_number", worst_cond);
  rep.add_check(cp);
  rep.add_check(wq.done("lambda-theta-brackets", cfg.tol_lemma_q));
  rep.add_check(wr.done("theta-theta-brackets", cfg.tol_lemma_r));
  rep.add_matrix("P", lastP);
  rep.add_matrix("Q", lastQ);
  rep.add_matrix("R", lastR);
  rep.set_wall_seconds(
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count());
  return emit(rep, cfg);
}

int cmd_pullback(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const ModelParams p = params_of(cfg);
  const SeededDefects defects = defects_of(cfg);
  std::mt19937_64 rng(cfg.seed);
  CsvLog csv(cfg.csv);

  Worst w;
  MatR worst_matrix;
  double worst_err = -1.0;
  const auto coords = explicit_coords(cfg);
  const int total = coords ? 1 : cfg.samples;
  for (int i = 0; i < total; ++i) {
    const DualCoordinates c = coords ? *coords : sample_coordinates(p, rng);
    if (coords) c.validate(p);
    const MatR M = pullback_matrix(c, p, cfg.fd_step, defects);
    const double e = (M - canonical_form(p.n)).cwiseAbs().maxCoeff();
    w.feed(e);
    csv.row(i, "pullback", e);
    if (e > worst_err) {
      worst_err = e;
      worst_matrix = M;
    }
  }

  Report rep("coordinate pullback");
  echo_config(rep, cfg);
  rep.add_check(w.done("canonical-pullback", cfg.tol_pullback));
  rep.add_matrix("pullback", worst_matrix);
  rep.set_wall_seconds(
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count());
  return emit(rep, cfg);
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot read config file " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw DomainError(std::string("config parse error: ") + e.what());
  }
  auto get = [&j](const char* key, auto& target) {
    if (j.contains(key)) target = j.at(key).get<std::decay_t<decltype(target)>>();
  };
  get("n", cfg.n);
  get("mu", cfg.mu);
  get("nu", cfg.nu);
  get("kappa", cfg.kappa);
  get("lambda", cfg.lambda);
  get("theta", cfg.theta);
  get("samples", cfg.samples);
  get("seed", cfg.seed);
  get("fd_step", cfg.fd_step);
  get("tol_constraint", cfg.tol_constraint);
  get("tol_structure", cfg.tol_structure);
  get("tol_reduction", cfg.tol_reduction);
  get("tol_derivative", cfg.tol_derivative);
  get("tol_bracket", cfg.tol_bracket);
  get("tol_lemma_p", cfg.tol_lemma_p);
  get("tol_lemma_q", cfg.tol_lemma_q);
  get("tol_lemma_r", cfg.tol_lemma_r);
  get("tol_identity", cfg.tol_identity);
  get("tol_pullback", cfg.tol_pullback);
  get("out", cfg.out);
  get("format", cfg.format);
  get("csv", cfg.csv);
  get("defect", cfg.defect);
}

void add_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "number of coordinate pairs");
  sub->add_option("--mu", cfg.mu, "coupling mu (> 0)");
  sub->add_option("--nu", cfg.nu, "coupling nu (> |kappa|)");
  sub->add_option("--kappa", cfg.kappa, "coupling kappa");
  sub->add_option("--lambda", cfg.lambda, "explicit lambda values (n of them)")
      ->delimiter(',');
  sub->add_option("--theta", cfg.theta, "explicit theta values (n of them)")
      ->delimiter(',');
  sub->add_option("--samples", cfg.samples, "number of random samples");
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--fd-step", cfg.fd_step, "finite-difference step");
  sub->add_option("--tol-constraint", cfg.tol_constraint,
                  "tolerance: momentum-map residual");
  sub->add_option("--tol-structure", cfg.tol_structure,
                  "tolerance: unitarity and relation certificates");
  sub->add_option("--tol-reduction", cfg.tol_reduction,
                  "tolerance: observable reduction identities");
  sub->add_option("--tol-derivative", cfg.tol_derivative,
                  "tolerance: closed differentials vs finite differences");
  sub->add_option("--tol-bracket", cfg.tol_bracket,
                  "tolerance: mixed bracket closed form");
  sub->add_option("--tol-lemma-p", cfg.tol_lemma_p,
                  "tolerance: lambda-lambda bracket matrix");
  sub->add_option("--tol-lemma-q", cfg.tol_lemma_q,
                  "tolerance: lambda-theta bracket matrix");
  sub->add_option("--tol-lemma-r", cfg.tol_lemma_r,
                  "tolerance: theta-theta bracket matrix");
  sub->add_option("--tol-identity", cfg.tol_identity,
                  "tolerance: term-by-term bracket identities");
  sub->add_option("--tol-pullback", cfg.tol_pullback,
                  "tolerance: canonical pullback deviation");
  sub->add_option("--out", cfg.out, "write report to this path");
  sub->add_option("--format", cfg.format, "report format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--csv", cfg.csv, "write per-sample max errors as CSV");
  sub->add_option("--defect", cfg.defect,
                  "inject a seeded defect fixture: orbit-bracket-parity | "
                  "drop-scattering-shift")
      ->check(CLI::IsMember({"", "orbit-bracket-parity",
                             "drop-scattering-shift"}));
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;

  // A config file provides defaults; explicit flags override them. Scan for
  // --config before the real parse so file values become the option defaults.
  try {
    for (int i = 1; i < argc - 1; ++i) {
      if (std::string(argv[i]) == "--config") {
        load_config_file(argv[i + 1], cfg);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"numerical verification of the dual slice construction"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags override)");

  CLI::App* point = app.add_subcommand(
      "point", "build one explicit slice point and dump its data");
  CLI::App* verify = app.add_subcommand(
      "verify", "run the full verification sweep over random samples");
  CLI::App* brackets = app.add_subcommand(
      "brackets", "extract the coordinate bracket matrices");
  CLI::App* pullback = app.add_subcommand(
      "pullback", "assemble the finite-difference pullback matrix");
  for (CLI::App* sub : {point, verify, brackets, pullback}) {
    add_options(sub, cfg);
    sub->add_option("--config", config_path,
                    "JSON config file (flags override)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (point->parsed()) return cmd_point(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (brackets->parsed()) return cmd_brackets(cfg);
    return cmd_pullback(cfg);
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
