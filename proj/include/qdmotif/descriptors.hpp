#pragma once

#include <optional>
#include <string>

#include "qdmotif/scoring.hpp"

namespace qdmotif {

// Behavioral characterization: which pair of descriptors spans the archive.
//   Sp: information content x support
//   Co: GC content x entropy
//   Rb: support x score tail spread
enum class Characterization { Sp, Co, Rb };

const char* to_string(Characterization c);
std::optional<Characterization> characterization_from_string(
    const std::string& name);

// Mean per-position relative entropy against the background, in bits.
double information_content(const Pwm& pwm, const BackgroundDistribution& bg);

// Mean per-position Shannon entropy, in bits. 2.0 for the uniform PWM.
double entropy(const Pwm& pwm);

// Mean probability mass on C and G.
double gc_content(const Pwm& pwm);

// Quantile with linear interpolation between order statistics, the
// convention where the q-th quantile of {1..100} at q=0.95 is 95.05.
// Values are copied and sorted; q must lie in [0, 1].
double quantile(std::vector<double> values, double q);

struct SupportRule {
  double threshold = 0.0;
  double percentile = 95.0;
};

// Threshold below which a best hit does not count as an occurrence: the given
// percentile of the motif's best-hit scores on the background set. Warns on
// stderr when fewer than 20 background sequences are scorable, but still
// computes.
SupportRule calibrate_support_threshold(const Pwm& pwm,
                                        const SequenceSet& background,
                                        const BackgroundDistribution& bg,
                                        double percentile = 95.0);

// Fraction of scorable foreground sequences whose best hit is strictly above
// the threshold.
double support(const ScoreProfile& foreground_profile, const SupportRule& rule);
double support(const Pwm& pwm, const SequenceSet& foreground,
               const BackgroundDistribution& bg, const SupportRule& rule);

// Spread of the upper tail of the best-hit distribution: the upper quantile
// (default 0.95) minus the median. Needs at least two scores.
double tail_behavior(const ScoreProfile& profile, double upper_q = 0.95);

struct BehaviorDescriptor {
  Characterization characterization;
  Vector2 values;
};

// Everything descriptor evaluation needs besides the motif itself. When
// fixed_support_rule is empty the support threshold is calibrated per motif
// against the background set.
struct DescriptorContext {
  const SequenceSet* foreground = nullptr;
  const SequenceSet* background = nullptr;
  BackgroundDistribution bg;
  double support_percentile = 95.0;
  double tail_upper_q = 0.95;
  std::optional<SupportRule> fixed_support_rule;
};

// Pure: same motif and context, same descriptor.
BehaviorDescriptor describe(const Pwm& pwm, Characterization c,
                            const DescriptorContext& ctx);

// Same, but reuses a foreground profile the caller already computed (the
// engine scores each candidate once for fitness and support alike).
BehaviorDescriptor describe(const Pwm& pwm, Characterization c,
                            const DescriptorContext& ctx,
                            const ScoreProfile& foreground_profile);

}  // namespace qdmotif
