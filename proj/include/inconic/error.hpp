#pragma once

#include <stdexcept>
#include <string>

namespace inconic {

enum class ErrorCode {
  InvalidArgument,
  NotConvex,
  DegenerateQuad,
  ParallelogramUnsupported,
  SingularMap,
  NotAnEllipse,
  NotTangent,
  DegeneratePoint,
  DegenerateTriangle,
  DegenerateFoci,
  NotEllipse,
  AsymptoteContact,
  TrapezoidForm,
  CenterOffLocus,
  CenterOffChord,
  DegenerateAtMidpoint,
  CenterOffCentersLine,
  DegenerateMember,
  DegenerateConfiguration,
  NoRealEllipse,
  NumericalFailure,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace inconic
