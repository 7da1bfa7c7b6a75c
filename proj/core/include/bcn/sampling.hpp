#pragma once
#include <bcn/types.hpp>

#include <random>

namespace bcn {

// Controls for drawing valid slice coordinates. Lambdas are built from
// cumulative positive gaps so the ordering and separation constraints hold by
// construction; angles are uniform on [0, 2pi) with optional floors on
// |sin| / |cos| for the extraction commands that need invertible weight
// matrices.
struct SampleOptions {
  double margin = 0.3;      // slack added beyond every hard inequality
  double spread = 1.0;      // scale of the random part of gaps and offsets
  bool floor_sin = false;   // require |sin theta_a| >= angle_floor
  bool floor_cos = false;   // require |cos theta_a| >= angle_floor
  double angle_floor = 1e-3;
  int max_attempts = 256;
};

// Draw coordinates satisfying the domain inequalities for p: consecutive
// gaps exceed 2 mu + margin and the smallest lambda exceeds
// max(nu, |kappa|) + margin.
DualCoordinates sample_coordinates(const ModelParams& p, std::mt19937_64& rng,
                                   const SampleOptions& opt = {});

// Draw a valid parameter set with the given n: mu in [0.05, 0.45],
// nu in (|kappa|, ~1.5), kappa in [-0.6, 0.6].
ModelParams sample_params(int n, std::mt19937_64& rng);

}  // namespace bcn
