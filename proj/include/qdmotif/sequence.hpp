#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdmotif/errors.hpp"
#include "qdmotif/rng.hpp"
#include "qdmotif/types.hpp"

namespace qdmotif {

enum Base : std::uint8_t { kA = 0, kC = 1, kG = 2, kT = 3, kN = 4 };

char base_to_char(std::uint8_t code);

// Case-insensitive; anything outside ACGT becomes N.
std::uint8_t char_to_base(char c);

struct Sequence {
  std::string id;
  std::vector<std::uint8_t> bases;

  std::size_t length() const { return bases.size(); }
};

enum class Role { Foreground, Background };

struct SequenceSet {
  Role role = Role::Foreground;
  std::vector<Sequence> sequences;
  std::optional<std::string> subset_label;

  std::size_t size() const { return sequences.size(); }
};

// Throws MalformedRecord for empty ids or zero-length sequences and
// DuplicateId when two records share an id.
void validate(const SequenceSet& set);

inline constexpr double kBackgroundFloor = 1e-6;

// Genome-wide nucleotide frequencies used as the null model in log-odds
// scores. Entries are strictly positive and sum to one.
struct BackgroundDistribution {
  Vector4 probs;

  static BackgroundDistribution uniform();
};

// Pools counts over every sequence, skips N, and applies a +1 pseudocount per
// nucleotide so no entry can be zero. Throws NoInformativeBases when the set
// holds nothing but N.
BackgroundDistribution empirical_background(const SequenceSet& set);

// Shuffles the set order with the given seed and deals it into n disjoint
// subsets whose sizes differ by at most one; the first (size mod n) subsets
// get the extra sequence. Labels are "subset-1" .. "subset-n".
std::vector<SequenceSet> partition_subsets(const SequenceSet& set,
                                           std::size_t n, std::uint64_t seed);

// Per-sequence dinucleotide-preserving shuffle of the whole set. Lengths,
// mononucleotide counts and the dinucleotide multiset of each sequence are
// preserved exactly; the result has Role::Background.
SequenceSet shuffle_background(const SequenceSet& foreground,
                               std::uint64_t seed);

// Single-sequence shuffle behind shuffle_background. Draws a random Eulerian
// walk through the dinucleotide transition multigraph, keeping the original
// first and last symbol. N is treated as a fifth symbol so ambiguous bases
// stay where the transition structure allows.
std::vector<std::uint8_t> dinucleotide_shuffle(
    const std::vector<std::uint8_t>& bases, Rng& rng);

}  // namespace qdmotif
