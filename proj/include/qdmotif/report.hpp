#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdmotif/archive.hpp"

namespace qdmotif {

// Immutable copy of an archive for serialization and reporting. Entries are
// kept in row-major cell order.
struct ArchiveSnapshot {
  std::string characterization;
  int rows = 0;
  int cols = 0;
  DescriptorBounds bounds{};

  struct Entry {
    int cell_row = 0;
    int cell_col = 0;
    double fitness = 0.0;
    Vector2 descriptor{};
    long generation_added = 0;
    ProbMatrix probs;
  };
  std::vector<Entry> entries;
};

ArchiveSnapshot snapshot(const Archive& archive, Characterization c);

// JSON round trip is bit-exact: doubles are written shortest-exact and read
// back to the same values.
std::string to_json(const ArchiveSnapshot& snap);
ArchiveSnapshot snapshot_from_json(const std::string& text);

// One CSV row per elite with the flattened probability matrix.
std::string archive_csv(const ArchiveSnapshot& snap);

// rows x cols fitness grid; empty cells are empty optionals / blank CSV cells.
std::vector<std::vector<std::optional<double>>> heatmap_grid(
    const ArchiveSnapshot& snap);
std::string heatmap_csv(const ArchiveSnapshot& snap);

// Per position the argmax base, uppercase when its probability is at least
// 0.5. Ties resolve to the alphabetically first base.
std::string consensus(const Pwm& pwm);

// L rows x 4 probability columns with an A,C,G,T header.
std::string logo_csv(const Pwm& pwm);

struct ComparisonEntry {
  std::string method;
  std::vector<double> values;
};

struct MethodSummary {
  std::string method;
  std::size_t n = 0;
  double max = 0.0;
  double mean = 0.0;
  double stddev = 0.0;  // sample std (n-1); 0 when n == 1
};

std::vector<MethodSummary> summarize_methods(
    const std::vector<ComparisonEntry>& entries);

// Aligned text table and CSV of max / mean / std per method.
std::string comparison_text(const std::vector<ComparisonEntry>& entries);
std::string comparison_csv(const std::vector<ComparisonEntry>& entries);

}  // namespace qdmotif
