#include "qdmotif/fasta.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qdmotif/text.hpp"

namespace qdmotif {

SequenceSet parse_fasta(std::istream& in, Role role) {
  SequenceSet set;
  set.role = role;

  Sequence current;
  bool in_record = false;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '>') {
      if (in_record) {
        if (current.bases.empty()) throw MalformedRecord(current.id);
        set.sequences.push_back(std::move(current));
      }
      auto tokens = split_ws(body.substr(1));
      current = Sequence{};
      if (tokens.empty()) throw MalformedRecord("");
      current.id = tokens.front();  // description after the id is dropped
      in_record = true;
    } else {
      if (!in_record) throw MalformedRecord(std::string(body.substr(0, 20)));
      for (char c : body) current.bases.push_back(char_to_base(c));
    }
  }
  if (in_record) {
    if (current.bases.empty()) throw MalformedRecord(current.id);
    set.sequences.push_back(std::move(current));
  }
  if (set.sequences.empty()) throw EmptyInput();
  validate(set);
  return set;
}

SequenceSet parse_fasta(const std::string& text, Role role) {
  std::istringstream in(text);
  return parse_fasta(in, role);
}

SequenceSet load_fasta(const std::filesystem::path& path, Role role) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open FASTA file: " + path.string());
  return parse_fasta(in, role);
}

void write_fasta(std::ostream& out, const SequenceSet& set) {
  constexpr std::size_t kWrap = 60;
  for (const auto& seq : set.sequences) {
    out << '>' << seq.id << '\n';
    for (std::size_t i = 0; i < seq.bases.size(); i += kWrap) {
      const std::size_t end = std::min(i + kWrap, seq.bases.size());
      for (std::size_t k = i; k < end; ++k) out << base_to_char(seq.bases[k]);
      out << '\n';
    }
  }
}

void save_fasta(const std::filesystem::path& path, const SequenceSet& set) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write FASTA file: " + path.string());
  write_fasta(out, set);
}

std::string subsets_manifest_json(const std::vector<SequenceSet>& subsets) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& sub : subsets) {
    nlohmann::json entry;
    entry["subset_label"] = sub.subset_label.value_or("");
    auto& ids = entry["sequence_ids"] = nlohmann::json::array();
    for (const auto& seq : sub.sequences) ids.push_back(seq.id);
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

}  // namespace qdmotif
