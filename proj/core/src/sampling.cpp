#include <bcn/sampling.hpp>

#include <cmath>
#include <numbers>

namespace bcn {

DualCoordinates sample_coordinates(const ModelParams& p, std::mt19937_64& rng,
                                   const SampleOptions& opt) {
  p.validate();
  if (opt.margin <= 0.0 || opt.spread < 0.0) {
    throw DomainError("sample_coordinates requires margin > 0, spread >= 0");
  }
  const int n = p.n;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  DualCoordinates c;
  c.lambda.resize(n);
  c.theta.resize(n);

  // Build lambda from the bottom up: floor plus cumulative gaps.
  c.lambda(n - 1) =
      std::max(p.nu, std::abs(p.kappa)) + opt.margin + opt.spread * unit(rng);
  for (int a = n - 2; a >= 0; --a) {
    c.lambda(a) =
        c.lambda(a + 1) + 2.0 * p.mu + opt.margin + opt.spread * unit(rng);
  }

  for (int a = 0; a < n; ++a) {
    bool ok = false;
    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
      const double th = angle(rng);
      if (opt.floor_sin && std::abs(std::sin(th)) < opt.angle_floor) continue;
      if (opt.floor_cos && std::abs(std::cos(th)) < opt.angle_floor) continue;
      c.theta(a) = th;
      ok = true;
      break;
    }
    if (!ok) {
      throw DomainError("sample_coordinates: angle rejection did not "
                           "terminate; floors too aggressive");
    }
  }
  c.validate(p);
  return c;
}

ModelParams sample_params(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ModelParams p;
  p.n = n;
  p.mu = 0.05 + 0.40 * unit(rng);
  p.kappa = -0.6 + 1.2 * unit(rng);
  p.nu = std::abs(p.kappa) + 0.1 + unit(rng);
  p.validate();
  return p;
}

}  // namespace bcn
