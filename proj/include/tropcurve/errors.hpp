#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trop {

enum class ErrorCode {
  ParseError,
  PointNotOnCurve,
  InvalidModel,
  InvalidSubset,
  InvalidMorphism,
  NotOnInfiniteEdge,
  CannotSubdivideAtInfinity,
  CurveMismatch,
  NonInvertibleZero,
  BottomFunction,
  IndeterminateSum,
  DegenerateResult,
  OracleLawViolation,
  EmptyFiber,
  FiberInconsistency,
  TrilaterationAmbiguity,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A non-throwing list of violations; empty means valid.
struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> items;

  bool ok() const { return items.empty(); }
  void add(std::string code, std::string message) {
    items.push_back({std::move(code), std::move(message)});
  }
  void merge(const ValidationReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
};

}  // namespace trop
