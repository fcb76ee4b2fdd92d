#include "shiftlab/error.hpp"

namespace shiftlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorCode::RootOutOfRange: return "RootOutOfRange";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IncompleteLabeling: return "IncompleteLabeling";
    case ErrorCode::LabelsNotOneToM: return "LabelsNotOneToM";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::UnlabeledIncidentEdge: return "UnlabeledIncidentEdge";
    case ErrorCode::NotForest: return "NotForest";
    case ErrorCode::HasK2Component: return "HasK2Component";
    case ErrorCode::MultipleIsolatedVertices: return "MultipleIsolatedVertices";
    case ErrorCode::EvenDegreeVertex: return "EvenDegreeVertex";
    case ErrorCode::NoValidSigma: return "NoValidSigma";
    case ErrorCode::RangeSizeMismatch: return "RangeSizeMismatch";
    case ErrorCode::OddWMTrail: return "OddWMTrail";
    case ErrorCode::PathTooShort: return "PathTooShort";
    case ErrorCode::TooFewLeaves: return "TooFewLeaves";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::KBelowThreshold: return "KBelowThreshold";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoSddsFound: return "NoSddsFound";
    case ErrorCode::BadCertificate: return "BadCertificate";
  }
  return "Unknown";
}

}  // namespace shiftlab
