#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nuframe {

enum class ErrorCode {
  RejectedParameters,
  MixedLattice,
  RefinementMismatch,
  FrequencyOutOfRange,
  ShapeMismatch,
  VanishingEnvelopeSpectrum,
  DomainError,
  InvalidInput,
};

/// Machine-readable code, e.g. "E_LATTICE" for RejectedParameters.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nuframe
