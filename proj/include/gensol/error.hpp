#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gensol {

enum class ErrorCode {
  NonPrime,
  OrderTooLarge,
  NotSquare,
  DimensionMismatch,
  FieldMismatch,
  ParseError,
  PreconditionViolated,
  RankHypothesisFailed,
  HypothesisFailed,
  ConditionFailed,
  CeilingExceeded,
  IsolatedVertex,
  NoTupleGeneratesModN,
  BaseDoesNotGenerateModN,
  NotNormal,
  NotAbelian,
  TooLarge,
  GroupMismatch,
  KPartDoesNotGenerateK,
  WrongGroupShape,
  KPartFails,
  NotAbsolutelyIrreducible,
  CertificationFailed,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gensol
