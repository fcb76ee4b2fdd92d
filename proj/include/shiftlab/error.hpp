// error.hpp - error codes shared by every shiftlab module

#ifndef SHIFTLAB_ERROR_HPP
#define SHIFTLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace shiftlab {

enum class ErrorCode {
  // graph construction and parsing
  LoopEdge,
  DuplicateEdge,
  EndpointOutOfRange,
  RootOutOfRange,
  LevelOutOfRange,
  ParseError,
  // labelings
  IncompleteLabeling,
  LabelsNotOneToM,
  EmptyGraph,
  UnlabeledIncidentEdge,
  // constructors
  NotForest,
  HasK2Component,
  MultipleIsolatedVertices,
  EvenDegreeVertex,
  NoValidSigma,
  RangeSizeMismatch,
  OddWMTrail,
  PathTooShort,
  TooFewLeaves,
  BadParameters,
  KBelowThreshold,
  // search and spectra
  BudgetExceeded,
  NoSddsFound,
  // certificates
  BadCertificate,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shiftlab

#endif  // SHIFTLAB_ERROR_HPP
