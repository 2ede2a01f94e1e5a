#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mechsynth {

enum class ErrorKind {
  ZeroDenominator,
  DivisionByZero,
  ParseError,
  ShapeMismatch,
  NonpositiveValue,
  DisconnectedGraph,
  NotWellDefined,
  PortCountMismatch,
  PortCircuit,
  InvalidNetwork,
  InvalidCertificate,
  OracleMismatch,
  WrongForm,
  Inadmissible,
  NonnegativityViolation,
  BranchMismatch,
  TopologyUnavailable,
  CensusExceeded,
  NotParamount,
  IrrationalElement,
  UsageError,
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mechsynth
