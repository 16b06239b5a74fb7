#pragma once

// Inversion, resolvents, spectra, spectral radius and functional calculus.

#include "cstar/core.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace cstar {

struct NeumannReport {
  /// Number of powers summed: S = e + a + ... + a^(terms_used - 1).
  int terms_used = 0;
  /// ||(e - a) S - e||
  double residual = 0.0;
  /// ||a||^terms_used / (1 - ||a||), the geometric tail after terms_used terms.
  double a_priori_bound = 0.0;
};

struct NeumannResult {
  Element inverse;
  NeumannReport report;
};

/// Raised when a series hits max_terms before reaching tol. Carries the best
/// partial sum and its report.
class UnconvergedError : public Error {
public:
  UnconvergedError(Element partial_sum, NeumannReport report);
  const Element& partial_sum() const noexcept { return partial_sum_; }
  const NeumannReport& report() const noexcept { return report_; }

private:
  Element partial_sum_;
  NeumannReport report_;
};

/// Sums the geometric series of a until ||(e - a) S - e|| <= tol.
/// Throws NormTooLarge when ||a|| >= 1 and UnconvergedError past max_terms.
NeumannResult neumann_inverse(const Element& a, double tol = 1e-12, int max_terms = 10'000);

/// The partial sums S_0, ..., S_{count-1} of the geometric series (S_N sums
/// a^0..a^N); no norm precondition.
std::vector<Element> neumann_partial_sums(const Element& a, int count);

/// Default scale-relative invertibility threshold 1e-10 (1 + ||a||).
double default_invertibility_tol(const Element& a);

/// True iff every character value of a has modulus > tol.
bool is_invertible(const Element& a, std::optional<double> tol = std::nullopt);

/// Exact inverse through character values. Throws NotInvertible.
Element inverse(const Element& a, std::optional<double> tol = std::nullopt);

/// b^-1 from the series sum_n (a^-1 (a - b))^n a^-1, stopped once
/// ||b S - e|| <= tol. Requires ||a - b|| < 1 / ||a^-1||.
Element perturbation_inverse(const Element& a_invertible, const Element& b, double tol = 1e-12,
                             int max_terms = 10'000);

/// (lambda e - a)^-1. Throws SpectrumHit when lambda is within merge_tol of sigma(a).
Element resolvent(const Element& a, const Complex& lambda, double merge_tol = kDefaultMergeTol);

/// (1/lambda) sum_n a^n / lambda^n, valid for |lambda| > ||a||; throws NormTooLarge otherwise.
NeumannResult resolvent_series(const Element& a, const Complex& lambda, double tol = 1e-14,
                               int max_terms = 10'000);

/// Deduplicated character values of a.
SpectrumSet spectrum(const Element& a, double merge_tol = kDefaultMergeTol);

/// max |lambda| over sigma(a).
double spectral_radius_exact(const Element& a);

struct RadiusLimit {
  double estimate = 0.0;
  /// trace[k] = ||a^(2^k)||^(1/2^k), k = 0..n_max.
  std::vector<double> trace;
};

/// Successive-squaring estimate of lim ||a^n||^(1/n). Powers are renormalized
/// after each squaring and their norms tracked in log space, so the trace is
/// exact in value without forming a^(2^k) at full scale. Throws Overflow when
/// a norm is not finite.
RadiusLimit spectral_radius_limit(const Element& a, int n_max = 20);

/// Same sequence for a raw square matrix, with operator norms of dense powers.
RadiusLimit spectral_radius_limit(const Matrix& m, int n_max = 20);

/// Largest singular value, computed as sqrt(r(M* M)).
double operator_norm(const Matrix& m);

/// p(a) for p(z) = coeffs[0] + coeffs[1] z + ..., evaluated by Horner's rule
/// in the algebra.
Element apply_polynomial(std::span<const Complex> coeffs, const Element& a);

/// g(a), the element with character values g(phi(a)). Throws DomainError when g
/// throws or returns a non-finite value at a spectrum point.
Element apply_function(const std::function<Complex(Complex)>& g, const Element& a);

/// Distances from a point to the four spectral regions of the classification.
double distance_to_real_line(const Complex& z);
double distance_to_unit_circle(const Complex& z);
double distance_to_zero_one(const Complex& z);
double distance_to_nonnegative_reals(const Complex& z);

struct ClassFlag {
  bool holds = false;
  /// Norm of the defining identity's residual.
  double defect = 0.0;
  /// Largest distance from sigma(a) to the class's region.
  double spectrum_distance = 0.0;
  /// Meaningful when holds: spectrum_distance <= tol.
  bool spectrum_contained = false;
};

struct ClassificationReport {
  ClassFlag self_adjoint;  // a = a*
  ClassFlag unitary;       // a* a = a a* = e
  ClassFlag projection;    // a = a* and a^2 = a
  ClassFlag positive;      // a = b b*
  std::optional<Element> positivity_witness;
  /// First character value that rules out positivity.
  std::optional<Complex> positivity_offender;
};

/// Tests the four defining identities at tolerance tol (scaled by 1 + ||a||)
/// and, for each class that holds, the matching spectrum containment.
ClassificationReport classify_element(const Element& a, double tol = 1e-9);

}  // namespace cstar
