#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace condor {

// Every failure the engine can surface, usable as a manifest tally key.
enum class ErrorKind {
  Config,
  Io,
  SchemaViolation,
  FileParse,

  DuplicateLabel,
  EmptyInput,
  NodeNotFound,
  UnknownRootHint,
  EmptyTree,

  EmptyExemplars,
  MalformedBlock,
  MissingDifficulty,
  DuplicateDifficulty,
  EmptyQuestion,
  MissingSection,

  BackendExhausted,
  BackendRejected,
  BackendTimeout,
  UnknownScenario,

  OutOfDomain,
  MissingBenchmark,
  DuplicateBenchmark,
  MissingContributor,

  OutOfRange,
  EmptyDataset,
  StagePrecondition,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace condor
