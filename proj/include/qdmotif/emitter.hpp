#pragma once

#include <vector>

#include "qdmotif/archive.hpp"

namespace qdmotif {

struct EmitterConfig {
  double sigma_iso = 0.12;
  double sigma_line = 0.25;
  int batch = 32;
};

// Iso+Line Gaussian emitter over flattened PWM entries. Each candidate picks
// two elites x_i, x_j uniformly from the occupied cells and proposes
//   x' = x_i + sigma_iso * zeta + sigma_line * eta * (x_j - x_i)
// with zeta a standard normal matrix and eta a standard normal scalar, then
// repairs x' back onto the floored simplex. While the archive is empty the
// batch is plain Dirichlet draws instead. Draw order per candidate is fixed
// (i, j, eta, zeta row-major), so a seeded generator reproduces batches.
std::vector<Pwm> emit_batch(const Archive& archive, const EmitterConfig& cfg,
                            Eigen::Index motif_length, double dirichlet_alpha,
                            Rng& rng);

}  // namespace qdmotif
