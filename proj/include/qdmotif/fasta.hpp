#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdmotif/sequence.hpp"

namespace qdmotif {

// Reads FASTA records: ids are the first token after '>', bases are upper
// cased and anything outside ACGT maps to N. Throws EmptyInput when no record
// is present, MalformedRecord for empty ids or empty sequences, DuplicateId
// for repeated ids.
SequenceSet parse_fasta(std::istream& in, Role role = Role::Foreground);
SequenceSet parse_fasta(const std::string& text, Role role = Role::Foreground);
SequenceSet load_fasta(const std::filesystem::path& path,
                       Role role = Role::Foreground);

// Writes records with sequence lines wrapped at 60 columns.
// parse_fasta(write_fasta(set)) preserves ids and base codes exactly.
void write_fasta(std::ostream& out, const SequenceSet& set);
void save_fasta(const std::filesystem::path& path, const SequenceSet& set);

// JSON array of {subset_label, sequence_ids} describing a partition.
std::string subsets_manifest_json(const std::vector<SequenceSet>& subsets);

}  // namespace qdmotif
