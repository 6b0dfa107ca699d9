#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qdmotif/pwm.hpp"
#include "qdmotif/sequence.hpp"

namespace qdmotif {

struct FitnessConfig {
  double top_fraction = 0.2;   // fraction of scorable sequences kept, (0, 1]
  double trim_fraction = 0.1;  // fraction of the kept block trimmed, [0, 1)
};

// Best-hit scores of one motif against one sequence set. best_hits holds one
// entry per scorable sequence in set order; sequences with no N-free window
// of motif length are counted in skipped instead.
struct ScoreProfile {
  std::vector<double> best_hits;
  std::size_t skipped = 0;
};

// Per-candidate log-odds lookup tables, one per strand. Building the tables
// takes the logs once; scanning is then pure additions, which matters because
// every emitted candidate rescans the whole sequence set.
class ScanTables {
 public:
  ScanTables(const Pwm& pwm, const BackgroundDistribution& bg);

  Eigen::Index length() const { return fwd_.rows(); }
  const ProbMatrix& forward() const { return fwd_; }
  const ProbMatrix& reverse() const { return rc_; }

 private:
  ProbMatrix fwd_;  // log(p / bg), motif as given
  ProbMatrix rc_;   // log(p / bg), reverse complement motif
};

// Sum over positions of log(p[j][w_j] / bg[w_j]), natural log. The window
// must have motif length (WindowLengthMismatch otherwise) and contain no N.
double log_odds(const Pwm& pwm, std::span<const std::uint8_t> window,
                const BackgroundDistribution& bg);

// Best window score over both strands, divided by motif length. Windows
// containing N are skipped; nullopt when no window qualifies.
std::optional<double> best_hit(const Pwm& pwm, const Sequence& seq,
                               const BackgroundDistribution& bg);
std::optional<double> best_hit(const ScanTables& tables, const Sequence& seq);

// Scans every sequence in the set with one shared pair of tables.
// Throws NoScorableSequences when nothing is scorable.
ScoreProfile score_profile(const Pwm& pwm, const SequenceSet& set,
                           const BackgroundDistribution& bg);

// Upper-trimmed mean of the top fraction of best-hit scores: keep the
// k = ceil(top_fraction * n) largest, drop the ceil(trim_fraction * k)
// largest of those, average the rest. If trimming would empty the block the
// untrimmed top-k mean is returned. Ties are broken by set order.
double fitness(const ScoreProfile& profile, const FitnessConfig& cfg);

}  // namespace qdmotif
