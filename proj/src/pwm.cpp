#include "qdmotif/pwm.hpp"

#include <cmath>

#include "qdmotif/errors.hpp"

namespace qdmotif {

namespace {

// Pin-and-rescale projection of one row. Entries below the floor are fixed
// at the floor, the rest are scaled to carry the remaining mass; rescaling
// can push further entries under the floor, hence the loop (at most three
// passes with a four-letter alphabet).
void repair_row(ProbMatrix& m, Eigen::Index row) {
  double vals[4];
  bool pinned[4] = {false, false, false, false};
  bool all_bad = true;
  for (int b = 0; b < 4; ++b) {
    vals[b] = m(row, b);
    if (std::isfinite(vals[b]) && vals[b] > 0.0) all_bad = false;
  }
  if (all_bad) {
    for (int b = 0; b < 4; ++b) m(row, b) = 0.25;
    return;
  }

  for (int b = 0; b < 4; ++b)
    if (!std::isfinite(vals[b]) || vals[b] < kPwmFloor) pinned[b] = true;

  while (true) {
    double free_sum = 0.0;
    int n_pinned = 0;
    for (int b = 0; b < 4; ++b) {
      if (pinned[b]) ++n_pinned;
      else free_sum += vals[b];
    }
    if (n_pinned == 4 || free_sum <= 0.0) {
      for (int b = 0; b < 4; ++b) m(row, b) = 0.25;
      return;
    }
    const double scale = (1.0 - n_pinned * kPwmFloor) / free_sum;
    bool repinned = false;
    for (int b = 0; b < 4; ++b) {
      if (pinned[b]) continue;
      if (vals[b] * scale < kPwmFloor) {
        pinned[b] = true;
        repinned = true;
      }
    }
    if (!repinned) {
      for (int b = 0; b < 4; ++b)
        m(row, b) = pinned[b] ? kPwmFloor : vals[b] * scale;
      return;
    }
  }
}

}  // namespace

void repair_rows(ProbMatrix& probs) {
  for (Eigen::Index j = 0; j < probs.rows(); ++j) {
    // Rows already on the floored simplex pass through untouched, which makes
    // the projection bitwise idempotent and a zero perturbation a no-op.
    double sum = 0.0;
    bool ok = true;
    for (int b = 0; b < 4; ++b) {
      const double v = probs(j, b);
      if (!std::isfinite(v) || v < kPwmFloor) {
        ok = false;
        break;
      }
      sum += v;
    }
    if (ok && std::abs(sum - 1.0) <= 1e-9) continue;
    repair_row(probs, j);
  }
}

bool satisfies_pwm_invariants(const Pwm& pwm, double tol) {
  if (pwm.probs.rows() < 1) return false;
  for (Eigen::Index j = 0; j < pwm.probs.rows(); ++j) {
    double sum = 0.0;
    for (int b = 0; b < 4; ++b) {
      const double v = pwm.probs(j, b);
      if (!std::isfinite(v) || v < kPwmFloor) return false;
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

Pwm make_pwm(ProbMatrix probs) {
  if (probs.rows() < 1) throw InvalidParams("motif length must be at least 1");
  repair_rows(probs);
  return Pwm{std::move(probs)};
}

Pwm random_pwm(Eigen::Index length, double alpha, Rng& rng) {
  if (length < 1) throw InvalidParams("motif length must be at least 1");
  if (!(alpha > 0.0)) throw InvalidParams("dirichlet alpha must be positive");
  std::gamma_distribution<double> gamma(alpha, 1.0);
  ProbMatrix probs(length, 4);
  for (Eigen::Index j = 0; j < length; ++j)
    for (int b = 0; b < 4; ++b) probs(j, b) = gamma(rng);
  repair_rows(probs);
  return Pwm{std::move(probs)};
}

Pwm random_pwm(Eigen::Index length, double alpha, std::uint64_t seed) {
  Rng rng(seed);
  return random_pwm(length, alpha, rng);
}

Pwm reverse_complement(const Pwm& pwm) {
  const Eigen::Index L = pwm.probs.rows();
  ProbMatrix out(L, 4);
  for (Eigen::Index j = 0; j < L; ++j)
    for (int b = 0; b < 4; ++b) out(j, b) = pwm.probs(L - 1 - j, 3 - b);
  return Pwm{std::move(out)};
}

}  // namespace qdmotif
