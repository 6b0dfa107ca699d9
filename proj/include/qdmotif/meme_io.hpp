#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdmotif/pwm.hpp"

namespace qdmotif {

// One MOTIF block from a MEME minimal-format file, probabilities exactly as
// written (row sums are checked to lie in [0.99, 1.01] but not rescaled).
struct MemeMotifRecord {
  std::string name;
  Eigen::Index width = 0;
  std::optional<long> nsites;
  ProbMatrix probs;
};

// Accepts the minimal format: a "MEME version" header, optional
// "ALPHABET= ACGT", optional strands and background lines (ignored), then
// MOTIF blocks each with a letter-probability matrix. Throws NotMemeFormat
// when the version header or the ACGT alphabet is missing and
// MalformedMatrix for rows that are not 4 numbers or sum outside
// [0.99, 1.01].
std::vector<MemeMotifRecord> parse_meme(std::istream& in);
std::vector<MemeMotifRecord> parse_meme(const std::string& text);

// Floors and renormalizes the record's probabilities onto the PWM simplex.
// Rows that are already valid pass through unchanged.
Pwm to_pwm(const MemeMotifRecord& record);

// Minimal-format writer. Probabilities are written in full precision, so
// parse_meme(write_meme(x)) returns them exactly. Names must be nonempty and
// contain no whitespace (InvalidName), and must be unique (DuplicateId).
// An empty motif list yields a header-only file.
std::string write_meme(const std::vector<Pwm>& pwms,
                       const std::vector<std::string>& names);

}  // namespace qdmotif
