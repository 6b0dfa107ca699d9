#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qdmotif/config.hpp"
#include "qdmotif/report.hpp"

namespace qdmotif {

// One subset's evaluation data: matched foreground and background plus the
// background nucleotide distribution derived from the background set.
struct SubsetContext {
  SequenceSet foreground;
  SequenceSet background;
  BackgroundDistribution dist;
};

// Loads the foreground FASTA, partitions it into cfg.subsets disjoint
// subsets, and pairs each with a background: a matching partition of the
// background FASTA when one is configured, otherwise a dinucleotide shuffle
// of the subset itself (with a warning on stderr). All seeds derive from
// cfg.seed, so run and eval-meme see identical subsets.
std::vector<SubsetContext> build_subset_contexts(const ExperimentConfig& cfg);

DescriptorContext descriptor_context(const SubsetContext& subset,
                                     const ExperimentConfig& cfg);

// Full experiment: per subset and characterization estimate bounds, run the
// search, and write archive.json, archive.csv, heatmap.csv and metrics.csv
// under out/<subset>/<characterization>/. Also writes manifest.cfg and the
// subset manifests under out/.
void cmd_run(const ExperimentConfig& cfg);

// Scores every motif of a MEME file on every subset (same contexts and same
// fitness path as cmd_run) into out/meme_eval.csv. When the output directory
// already holds archives, also writes comparison.csv / comparison.txt with
// per-subset mean archive fitness per characterization against the per-motif
// mean fitness of the evaluated file.
void cmd_eval_meme(const std::filesystem::path& meme_path,
                   const ExperimentConfig& cfg);

struct SynthParams {
  int n = 200;
  int length = 100;
  std::string consensus = "CCACCAGGTGGCAGCATCT";
  double plant_rate = 0.8;
  std::uint64_t seed = 1;
  std::filesystem::path out = "synth-out";
};

struct SynthData {
  SequenceSet foreground;
  SequenceSet background;
  Pwm truth;
};

// Random uniform sequences with the consensus written in at a random
// position in round(plant_rate * n) of them; background is the dinucleotide
// shuffle of the foreground; truth is the sharpened one-hot PWM of the
// consensus. Throws InvalidParams when the consensus does not fit or
// contains characters outside ACGT.
SynthData make_synth_data(const SynthParams& params);

// Writes foreground.fasta, background.fasta and ground_truth.meme.
void cmd_synth(const SynthParams& params);

struct ExportParams {
  std::filesystem::path archive_json;
  std::filesystem::path out = ".";
  bool logos = false;
};

// Re-derives report files from a stored archive: archive.csv, heatmap.csv,
// consensus.txt and elites.meme, plus per-elite logo CSVs when requested.
void cmd_export(const ExportParams& params);

}  // namespace qdmotif
