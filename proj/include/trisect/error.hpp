#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trisect {

enum class ErrorKind {
  InvalidParams,
  DimensionMismatch,
  NotUnimodular,
  NotSublattice,
  NotSymmetric,
  SymmetryViolated,
  ParseError,
  MissingArcs,
  ChainConditionViolated,
  NotStandardPosition,
  NotDirectSummand,
  DecompositionFailed,
  InvalidDiagram,
  NotNormalizable,
  H1NotZero,
};

std::string_view to_string(ErrorKind kind);

/// Every domain failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trisect
