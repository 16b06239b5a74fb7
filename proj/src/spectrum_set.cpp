#include "cstar/spectrum_set.hpp"

#include "cstar/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cstar {

bool lex_less(const Complex& a, const Complex& b) noexcept {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

SpectrumSet::SpectrumSet(std::span<const Complex> values, double merge_tol) : merge_tol_(merge_tol) {
  if (values.empty()) throw Error(ErrorCode::EmptySpectrum, "a spectrum has at least one point");
  std::vector<Complex> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), lex_less);
  for (const Complex& z : sorted) {
    if (!contains(z)) points_.push_back(z);
  }
}

std::size_t SpectrumSet::find(const Complex& z) const noexcept {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (std::abs(points_[i] - z) <= merge_tol_) return i;
  }
  return points_.size();
}

std::size_t SpectrumSet::nearest(const Complex& z) const noexcept {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double d = std::abs(points_[i] - z);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

double SpectrumSet::max_modulus() const noexcept {
  double r = 0.0;
  for (const Complex& z : points_) r = std::max(r, std::abs(z));
  return r;
}

double SpectrumSet::distance_to(const Complex& z) const noexcept {
  return std::abs(points_[nearest(z)] - z);
}

double hausdorff_distance(const SpectrumSet& a, const SpectrumSet& b) noexcept {
  double d = 0.0;
  for (const Complex& z : a.points()) d = std::max(d, b.distance_to(z));
  for (const Complex& z : b.points()) d = std::max(d, a.distance_to(z));
  return d;
}

}  // namespace cstar
