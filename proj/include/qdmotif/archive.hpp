#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qdmotif/descriptors.hpp"

namespace qdmotif {

// Per-dimension descriptor range spanned by the archive grid. lo < hi.
struct DescriptorBounds {
  Vector2 lo;
  Vector2 hi;
};

struct Elite {
  Pwm pwm;
  double fitness = 0.0;
  BehaviorDescriptor descriptor{};
  long generation_added = 0;
};

enum class InsertOutcome { NewCell, Improved, Rejected };

// Fixed grid over descriptor space with local competition: one elite per
// cell, replaced only by a strictly fitter candidate.
class Archive {
 public:
  Archive(int rows, int cols, DescriptorBounds bounds);

  // Bins each descriptor value uniformly over its bounds; values outside the
  // bounds clip to the edge cells. Throws NonFiniteDescriptor on NaN or inf.
  std::pair<int, int> cell_index(const Vector2& descriptor) const;

  InsertOutcome try_insert(Elite candidate);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const DescriptorBounds& bounds() const { return bounds_; }

  std::size_t occupied() const { return occupied_; }
  double coverage() const;
  std::optional<double> best_fitness() const;

  // Sum over occupied cells of (fitness - offset).
  double qd_score(double offset = 0.0) const;

  const std::optional<Elite>& cell(int i, int j) const;

  // Occupied cells in row-major order.
  std::vector<std::pair<std::pair<int, int>, const Elite*>> elites() const;

 private:
  int rows_;
  int cols_;
  DescriptorBounds bounds_;
  std::vector<std::optional<Elite>> cells_;
  std::size_t occupied_ = 0;
};

}  // namespace qdmotif
