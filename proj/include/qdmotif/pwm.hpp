#pragma once

#include <cstdint>

#include "qdmotif/rng.hpp"
#include "qdmotif/types.hpp"

namespace qdmotif {

// Smallest probability any PWM entry may take. Keeps log-odds finite.
inline constexpr double kPwmFloor = 1e-4;

// Position weight matrix: L x 4, row-stochastic, every entry >= kPwmFloor.
// Construct through make_pwm / random_pwm so the invariants hold.
struct Pwm {
  ProbMatrix probs;

  Eigen::Index length() const { return probs.rows(); }
};

// Projects each row onto the floored simplex. Entries below kPwmFloor
// (including negatives from Gaussian perturbation) are pinned to the floor
// and the remaining mass is rescaled to keep the row sum at one. Rows that
// already satisfy the invariants pass through bit-identically, so the
// projection is idempotent.
void repair_rows(ProbMatrix& probs);

bool satisfies_pwm_invariants(const Pwm& pwm, double tol = 1e-9);

// Repairs and wraps an arbitrary nonempty L x 4 matrix.
Pwm make_pwm(ProbMatrix probs);

// Each row drawn from a symmetric Dirichlet(alpha), then repaired.
// Same seed, same matrix.
Pwm random_pwm(Eigen::Index length, double alpha, std::uint64_t seed);
Pwm random_pwm(Eigen::Index length, double alpha, Rng& rng);

// Reverses the position order and swaps A<->T, C<->G. An exact involution:
// entries are permuted, never recomputed.
Pwm reverse_complement(const Pwm& pwm);

}  // namespace qdmotif
