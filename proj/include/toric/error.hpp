#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  ParseError,
  MalformedFan,
  DimensionMismatch,
  RaysDontSpan,
  NotCartier,
  NotComplete,
  NotSmooth,
  TorsionClassGroup,
  UnboundedPolytope,
  NotPointed,
  OracleMismatch,
  InhomogeneousInput,
  NotSurjective,
  DegenerateRay,
  NotAmpleLift,
};

std::string_view to_string(ErrorCode code);

// Every structured rejection in the library is one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toric
