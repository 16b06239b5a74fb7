#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cstar {

using Complex = std::complex<double>;

/// Eigenvalues and character values closer than this are treated as one point.
inline constexpr double kDefaultMergeTol = 1e-8;

/// Default tolerance of the Hausdorff set-equality predicate.
inline constexpr double kDefaultSetTol = 1e-9;

/// (Re, Im)-lexicographic order used for every canonical ordering of points.
bool lex_less(const Complex& a, const Complex& b) noexcept;

/// A finite, non-empty, deduplicated set of complex numbers.
///
/// Points are kept in (Re, Im)-lexicographic order and are pairwise further
/// apart than merge_tol. Deduplication is greedy over the sorted input: a
/// value joins the first existing point within merge_tol, otherwise it opens a
/// new point, so each retained point is an actual input value.
class SpectrumSet {
public:
  /// Throws Error(EmptySpectrum) when `values` is empty.
  SpectrumSet(std::span<const Complex> values, double merge_tol = kDefaultMergeTol);

  const std::vector<Complex>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double merge_tol() const noexcept { return merge_tol_; }
  const Complex& operator[](std::size_t i) const { return points_[i]; }

  /// Index of the point within merge_tol of z, or size() when none is.
  std::size_t find(const Complex& z) const noexcept;
  bool contains(const Complex& z) const noexcept { return find(z) != size(); }

  /// Index of the point nearest to z.
  std::size_t nearest(const Complex& z) const noexcept;

  /// sup |z| over the set.
  double max_modulus() const noexcept;

  /// Smallest distance from z to a point of the set.
  double distance_to(const Complex& z) const noexcept;

private:
  std::vector<Complex> points_;
  double merge_tol_;
};

/// Hausdorff distance between two finite point sets.
double hausdorff_distance(const SpectrumSet& a, const SpectrumSet& b) noexcept;

/// Canonical set-equality predicate.
inline bool same_set(const SpectrumSet& a, const SpectrumSet& b, double tol = kDefaultSetTol) noexcept {
  return hausdorff_distance(a, b) <= tol;
}

}  // namespace cstar
