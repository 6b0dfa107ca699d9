#pragma once

#include <cstdint>
#include <string>

#include "qdmotif/emitter.hpp"

namespace qdmotif {

struct BoundsParams {
  int n_samples = 400;
  double q_lo = 0.01;
  double q_hi = 0.99;
  double padding = 0.10;
};

// Pads [lo, hi] outward by padding * (hi - lo) per side. Degenerate ranges
// (width under 1e-9 after padding) are widened symmetrically to 1e-3.
std::pair<double, double> pad_bounds(double lo, double hi, double padding);

// Descriptor ranges from random Dirichlet motifs: per dimension the
// [q_lo, q_hi] quantiles over n_samples draws, padded outward. Needs at
// least 10 samples. Same seed, same bounds.
DescriptorBounds estimate_bounds(Characterization c,
                                 const DescriptorContext& ctx,
                                 Eigen::Index motif_length,
                                 double dirichlet_alpha,
                                 const BoundsParams& params,
                                 std::uint64_t seed);

struct RunMetricsRow {
  long generation = 0;
  double coverage = 0.0;
  std::optional<double> best_fitness;  // empty while the archive is empty
  double qd_score = 0.0;
  long failed_evaluations = 0;
};

struct RunMetrics {
  std::vector<RunMetricsRow> rows;
  double qd_offset = 0.0;
};

// CSV with a leading "# qd_score_offset=..." comment so the offset the trace
// was computed with travels with the data.
std::string metrics_csv(const RunMetrics& metrics);

struct RunConfig {
  Characterization characterization = Characterization::Co;
  long generations = 1000;
  Eigen::Index motif_length = 19;
  double dirichlet_alpha = 1.0;
  int archive_rows = 20;
  int archive_cols = 20;
  EmitterConfig emitter;
  FitnessConfig fitness;
  double qd_offset = 0.0;
  std::uint64_t seed = 0;
};

struct RunResult {
  Archive archive;
  RunMetrics metrics;
};

// MAP-Elites over PWMs: per generation emit a batch, evaluate fitness and
// descriptor for each candidate, offer it to the archive, append one metrics
// row. Candidates whose evaluation throws or yields non-finite values are
// counted as failed and skipped. Fully deterministic given the seed.
// generations == 0 returns an empty archive and no metrics rows.
RunResult run(const DescriptorContext& ctx, const DescriptorBounds& bounds,
              const RunConfig& cfg);

}  // namespace qdmotif
