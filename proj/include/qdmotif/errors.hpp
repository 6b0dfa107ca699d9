#pragma once

#include <stdexcept>
#include <string>

namespace qdmotif {

// Base of every recoverable error thrown by the library. The CLI maps these
// to exit code 2 (data errors); ConfigError is mapped to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
  EmptyInput() : Error("empty input: no records found") {}
};

struct MalformedRecord : Error {
  explicit MalformedRecord(const std::string& id)
      : Error("malformed record: '" + id + "'") {}
};

struct DuplicateId : Error {
  explicit DuplicateId(const std::string& id)
      : Error("duplicate id: '" + id + "'") {}
};

struct NoInformativeBases : Error {
  NoInformativeBases() : Error("no informative bases (only N)") {}
};

struct TooFewSequences : Error {
  TooFewSequences(std::size_t have, std::size_t want)
      : Error("cannot split " + std::to_string(have) + " sequences into " +
              std::to_string(want) + " subsets") {}
};

struct WindowLengthMismatch : Error {
  WindowLengthMismatch(std::size_t window, std::size_t motif)
      : Error("window length " + std::to_string(window) +
              " does not match motif length " + std::to_string(motif)) {}
};

struct NoScorableSequences : Error {
  NoScorableSequences() : Error("no scorable sequences in set") {}
};

struct InsufficientScores : Error {
  explicit InsufficientScores(const std::string& what) : Error(what) {}
};

struct NonFiniteDescriptor : Error {
  NonFiniteDescriptor() : Error("descriptor value is not finite") {}
};

struct NotMemeFormat : Error {
  explicit NotMemeFormat(const std::string& why)
      : Error("not a MEME file: " + why) {}
};

struct MalformedMatrix : Error {
  MalformedMatrix(const std::string& motif, const std::string& why)
      : Error("malformed matrix in motif '" + motif + "': " + why) {}
};

struct InvalidName : Error {
  explicit InvalidName(const std::string& name)
      : Error("invalid motif name: '" + name + "'") {}
};

struct InvalidParams : Error {
  explicit InvalidParams(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace qdmotif
