#include "nuframe/errors.hpp"

namespace nuframe {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RejectedParameters: return "E_LATTICE";
    case ErrorCode::MixedLattice: return "E_MIXED_LATTICE";
    case ErrorCode::RefinementMismatch: return "E_REFINEMENT";
    case ErrorCode::FrequencyOutOfRange: return "E_FREQUENCY_RANGE";
    case ErrorCode::ShapeMismatch: return "E_SHAPE";
    case ErrorCode::VanishingEnvelopeSpectrum: return "E_VANISHING_SPECTRUM";
    case ErrorCode::DomainError: return "E_DOMAIN";
    case ErrorCode::InvalidInput: return "E_INPUT";
  }
  return "E_UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

}  // namespace nuframe
