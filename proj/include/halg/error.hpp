#pragma once

#include <stdexcept>
#include <string>

namespace halg {

enum class ErrorCode {
  DimensionMismatch,
  UnsupportedField,
  NotAssociative,
  NotUnital,
  CyclicQuiver,
  NotInvertible,
  NotMultiplicative,
  UnitNotFixed,
  NotAGroup,
  NotAHomomorphism,
  OrderNotInvertible,
  NonSplit,
  LiftingFailed,
  AlgebraMismatch,
  NotASkewAlgebra,
  DimCapExceeded,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace halg
