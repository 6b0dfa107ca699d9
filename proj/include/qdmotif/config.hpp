#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdmotif/engine.hpp"

namespace qdmotif {

// Full experiment description. Defaults are the reference settings the tool
// ships with; a config file and command-line flags override them.
struct ExperimentConfig {
  std::filesystem::path foreground;
  std::optional<std::filesystem::path> background;
  std::filesystem::path out = "qdmotif-out";

  int subsets = 5;
  Eigen::Index motif_length = 19;
  std::vector<Characterization> characterizations = {
      Characterization::Sp, Characterization::Co, Characterization::Rb};
  long generations = 1000;
  int archive_rows = 20;
  int archive_cols = 20;

  EmitterConfig emitter;    // sigma_iso 0.12, sigma_line 0.25, batch 32
  FitnessConfig fitness;    // top_fraction 0.2, trim_fraction 0.1
  double support_percentile = 95.0;
  double tail_upper_quantile = 0.95;
  BoundsParams bounds;      // 400 samples, [1%, 99%], 10% padding
  double dirichlet_alpha = 1.0;
  double qd_offset = 0.0;
  std::uint64_t seed = 42;
};

// Plain "key = value" lines, '#' comments. Unknown keys and unparseable
// values raise ConfigError naming the field.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::filesystem::path& path);

// Serializes every field in the same key = value format, so a written
// manifest can be fed back through --config to reproduce the run.
std::string config_to_string(const ExperimentConfig& cfg);

// Throws ConfigError when a field is out of range.
void validate(const ExperimentConfig& cfg);

std::string characterizations_to_string(
    const std::vector<Characterization>& cs);
std::vector<Characterization> parse_characterizations(const std::string& s);

}  // namespace qdmotif
