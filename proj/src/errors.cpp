#include "cstar/errors.hpp"

#include <sstream>

namespace cstar {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::InvalidPointMap: return "InvalidPointMap";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::EmptySpectrum: return "EmptySpectrum";
    case ErrorCode::NormTooLarge: return "NormTooLarge";
    case ErrorCode::Unconverged: return "Unconverged";
    case ErrorCode::PerturbationTooLarge: return "PerturbationTooLarge";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::SpectrumHit: return "SpectrumHit";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotACharacter: return "NotACharacter";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::DualityViolation: return "DualityViolation";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::ImproperIdeal: return "ImproperIdeal";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

namespace {

std::string not_normal_message(double commutator_norm, double threshold) {
  std::ostringstream os;
  os << "||NN* - N*N||_F = " << commutator_norm << " exceeds " << threshold;
  return os.str();
}

std::string not_contained_message(std::size_t witness, double image_norm) {
  std::ostringstream os;
  os << "ideal basis element " << witness << " maps to norm " << image_norm;
  return os.str();
}

}  // namespace

NotNormalError::NotNormalError(double commutator_norm, double threshold)
    : Error(ErrorCode::NotNormal, not_normal_message(commutator_norm, threshold)),
      commutator_norm_(commutator_norm) {}

NotContainedError::NotContainedError(std::size_t witness, double image_norm)
    : Error(ErrorCode::NotContained, not_contained_message(witness, image_norm)),
      witness_(witness) {}

}  // namespace cstar
