#pragma once

#include <stdexcept>
#include <string>

namespace planesing {

enum class ErrorCode {
  DivisionByZero,
  IncompatibleFields,
  ReducibleMinPoly,
  UnsupportedExtension,
  InvalidArgument,
  ParseError,
  ZeroPolynomial,
  NotHomogeneous,
  NotSuitable,
  NonRationalPoint,
  NotSquarefree,
  CommonComponent,
  DepthCapExceeded,
  UnresolvedTree,
  Reducible,
  NegativeGenus,
  FiberNotIsolated,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace planesing
