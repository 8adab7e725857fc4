#include "condor/errors.hpp"

namespace condor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config: return "Config";
    case ErrorKind::Io: return "Io";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::FileParse: return "FileParse";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NodeNotFound: return "NodeNotFound";
    case ErrorKind::UnknownRootHint: return "UnknownRootHint";
    case ErrorKind::EmptyTree: return "EmptyTree";
    case ErrorKind::EmptyExemplars: return "EmptyExemplars";
    case ErrorKind::MalformedBlock: return "MalformedBlock";
    case ErrorKind::MissingDifficulty: return "MissingDifficulty";
    case ErrorKind::DuplicateDifficulty: return "DuplicateDifficulty";
    case ErrorKind::EmptyQuestion: return "EmptyQuestion";
    case ErrorKind::MissingSection: return "MissingSection";
    case ErrorKind::BackendExhausted: return "BackendExhausted";
    case ErrorKind::BackendRejected: return "BackendRejected";
    case ErrorKind::BackendTimeout: return "BackendTimeout";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::MissingBenchmark: return "MissingBenchmark";
    case ErrorKind::DuplicateBenchmark: return "DuplicateBenchmark";
    case ErrorKind::MissingContributor: return "MissingContributor";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::StagePrecondition: return "StagePrecondition";
  }
  return "Unknown";
}

}  // namespace condor
