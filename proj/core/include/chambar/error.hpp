#pragma once

#include <stdexcept>
#include <string>

namespace chambar {

enum class ErrorCode {
  DivisionByZero,
  ModeMismatch,
  BasepointMismatch,
  AmbientMismatch,
  SingularBasepoint,
  NotRepresentable,
  NonExactInput,
  RankDeficient,
  NotColinear,
  SumNotZero,
  WrongArity,
  DegreeMismatch,
  NotLocallyInvertible,
  ConstraintViolated,
  DenominatorZero,
  IdentityViolated,
  NonHomogeneous,
  WrongDegree,
  DiscriminantApproach,
  StepUnderflow,
  BadInput,
};

const char* error_code_name(ErrorCode code);

/// Exception type for every failure the library reports deliberately.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::BasepointMismatch: return "BasepointMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::SingularBasepoint: return "SingularBasepoint";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::NonExactInput: return "NonExactInput";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotColinear: return "NotColinear";
    case ErrorCode::SumNotZero: return "SumNotZero";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotLocallyInvertible: return "NotLocallyInvertible";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::DenominatorZero: return "DenominatorZero";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::DiscriminantApproach: return "DiscriminantApproach";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace chambar
