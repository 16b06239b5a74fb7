#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cstar {

enum class ErrorCode {
  EmptySpace,
  DuplicateLabel,
  InvalidPointMap,
  NotNormal,
  DecompositionFailure,
  AlgebraMismatch,
  SpaceMismatch,
  EmptySpectrum,
  NormTooLarge,
  Unconverged,
  PerturbationTooLarge,
  NotInvertible,
  SpectrumHit,
  Overflow,
  DomainError,
  NotACharacter,
  NotAHomomorphism,
  DualityViolation,
  InvalidSubset,
  ImproperIdeal,
  NotContained,
  InvalidDocument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every failure raised by the library. The code is stable and is what
/// the CLI maps onto exit statuses.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Raised for a matrix that fails the normality test; carries the Frobenius
/// norm of the commutator N N* - N* N.
class NotNormalError : public Error {
public:
  NotNormalError(double commutator_norm, double threshold);
  double commutator_norm() const noexcept { return commutator_norm_; }

private:
  double commutator_norm_;
};

/// Raised when I is not inside ker(phi); `witness` is the basis index of an
/// element of I that phi does not annihilate.
class NotContainedError : public Error {
public:
  NotContainedError(std::size_t witness, double image_norm);
  std::size_t witness() const noexcept { return witness_; }

private:
  std::size_t witness_;
};

}  // namespace cstar
