#include "qdmotif/sequence.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace qdmotif {

char base_to_char(std::uint8_t code) {
  static constexpr char letters[] = {'A', 'C', 'G', 'T', 'N'};
  return code <= kN ? letters[code] : 'N';
}

std::uint8_t char_to_base(char c) {
  switch (c) {
    case 'A': case 'a': return kA;
    case 'C': case 'c': return kC;
    case 'G': case 'g': return kG;
    case 'T': case 't': return kT;
    default: return kN;
  }
}

void validate(const SequenceSet& set) {
  std::unordered_set<std::string> seen;
  seen.reserve(set.sequences.size());
  for (const auto& seq : set.sequences) {
    if (seq.id.empty() || seq.bases.empty()) throw MalformedRecord(seq.id);
    if (!seen.insert(seq.id).second) throw DuplicateId(seq.id);
  }
}

BackgroundDistribution BackgroundDistribution::uniform() {
  BackgroundDistribution bg;
  bg.probs.setConstant(0.25);
  return bg;
}

BackgroundDistribution empirical_background(const SequenceSet& set) {
  std::array<long long, 4> counts{0, 0, 0, 0};
  long long total = 0;
  for (const auto& seq : set.sequences) {
    for (std::uint8_t b : seq.bases) {
      if (b < kN) {
        ++counts[b];
        ++total;
      }
    }
  }
  if (total == 0) throw NoInformativeBases();
  BackgroundDistribution bg;
  // +1 pseudocount per nucleotide keeps every frequency strictly positive.
  for (int b = 0; b < 4; ++b)
    bg.probs(b) = static_cast<double>(counts[b] + 1) /
                  static_cast<double>(total + 4);
  return bg;
}

std::vector<SequenceSet> partition_subsets(const SequenceSet& set,
                                           std::size_t n,
                                           std::uint64_t seed) {
  if (n == 0) throw InvalidParams("subset count must be at least 1");
  const std::size_t m = set.size();
  if (m < n) throw TooFewSequences(m, n);

  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  const std::size_t base = m / n;
  const std::size_t extra = m % n;
  std::vector<SequenceSet> out;
  out.reserve(n);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    SequenceSet sub;
    sub.role = set.role;
    sub.subset_label = "subset-" + std::to_string(i + 1);
    const std::size_t size = base + (i < extra ? 1 : 0);
    sub.sequences.reserve(size);
    for (std::size_t k = 0; k < size; ++k)
      sub.sequences.push_back(set.sequences[order[pos++]]);
    out.push_back(std::move(sub));
  }
  return out;
}

namespace {

constexpr int kSymbols = 5;  // A C G T N

// Do the chosen last edges, read as v -> last_target[v], all lead to `sink`?
// Cycles that avoid the sink would strand edges, so such draws are rejected.
bool last_edges_reach(const std::array<int, kSymbols>& last_target, int sink) {
  for (int v = 0; v < kSymbols; ++v) {
    if (v == sink || last_target[v] < 0) continue;
    int cur = v;
    int steps = 0;
    while (cur != sink) {
      cur = last_target[cur];
      if (cur < 0 || ++steps > kSymbols) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::uint8_t> dinucleotide_shuffle(
    const std::vector<std::uint8_t>& bases, Rng& rng) {
  const std::size_t n = bases.size();
  if (n < 3) return bases;  // nothing can move without breaking a dinucleotide

  std::array<std::vector<std::uint8_t>, kSymbols> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges[bases[i]].push_back(bases[i + 1]);

  const int first = bases.front();
  const int sink = bases.back();

  // Pick one outgoing edge per vertex to traverse last. A draw is valid when
  // those edges form chains into the sink; retry otherwise (a handful of
  // attempts at most with a 5-symbol alphabet).
  std::array<int, kSymbols> last_index{};
  std::array<int, kSymbols> last_target{};
  while (true) {
    last_index.fill(-1);
    last_target.fill(-1);
    for (int v = 0; v < kSymbols; ++v) {
      if (v == sink || edges[v].empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, edges[v].size() - 1);
      last_index[v] = static_cast<int>(pick(rng));
      last_target[v] = edges[v][static_cast<std::size_t>(last_index[v])];
    }
    if (last_edges_reach(last_target, sink)) break;
  }

  // Move each chosen edge to the back of its list and shuffle the rest; the
  // walk then consumes lists front to back.
  for (int v = 0; v < kSymbols; ++v) {
    auto& list = edges[v];
    if (list.empty()) continue;
    if (v != sink && last_index[v] >= 0)
      std::swap(list[static_cast<std::size_t>(last_index[v])], list.back());
    const std::size_t stop = (v != sink && last_index[v] >= 0)
                                 ? list.size() - 1
                                 : list.size();
    if (stop > 1) std::shuffle(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(stop), rng);
  }

  std::vector<std::uint8_t> out;
  out.reserve(n);
  out.push_back(static_cast<std::uint8_t>(first));
  std::array<std::size_t, kSymbols> next{};
  next.fill(0);
  int cur = first;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::uint8_t to = edges[cur][next[cur]++];
    out.push_back(to);
    cur = to;
  }
  return out;
}

SequenceSet shuffle_background(const SequenceSet& foreground,
                               std::uint64_t seed) {
  SequenceSet out;
  out.role = Role::Background;
  out.subset_label = foreground.subset_label;
  out.sequences.reserve(foreground.size());
  Rng rng(seed);
  for (const auto& seq : foreground.sequences)
    out.sequences.push_back({seq.id, dinucleotide_shuffle(seq.bases, rng)});
  return out;
}

}  // namespace qdmotif
