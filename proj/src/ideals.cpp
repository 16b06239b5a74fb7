#include "cstar/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cstar {

Ideal::Ideal(Algebra algebra, std::vector<std::size_t> zero_set)
    : algebra_(std::move(algebra)), zero_set_(std::move(zero_set)) {
  std::sort(zero_set_.begin(), zero_set_.end());
  if (std::adjacent_find(zero_set_.begin(), zero_set_.end()) != zero_set_.end()) {
    throw Error(ErrorCode::InvalidSubset, "zero set repeats a character");
  }
  if (!zero_set_.empty() && zero_set_.back() >= algebra_.dimension()) {
    throw Error(ErrorCode::InvalidSubset, "zero set names character " + std::to_string(zero_set_.back()) +
                                              " of an algebra with " + std::to_string(algebra_.dimension()));
  }
}

Ideal Ideal::zero(const Algebra& algebra) {
  std::vector<std::size_t> all(algebra.dimension());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return Ideal(algebra, std::move(all));
}

bool Ideal::contains(const Element& a, double tol) const {
  if (!(a.algebra() == algebra_)) throw Error(ErrorCode::AlgebraMismatch, "element of another algebra");
  return std::all_of(zero_set_.begin(), zero_set_.end(), [&](std::size_t k) { return std::abs(a[k]) <= tol; });
}

std::vector<Element> Ideal::basis() const {
  std::vector<Element> out;
  for (std::size_t k = 0; k < algebra_.dimension(); ++k) {
    if (!std::binary_search(zero_set_.begin(), zero_set_.end(), k)) out.push_back(algebra_.indicator(k));
  }
  return out;
}

bool Ideal::is_subset_of(const Ideal& other) const {
  if (!(algebra_ == other.algebra_)) throw Error(ErrorCode::AlgebraMismatch, "ideals of different algebras");
  const auto b = basis();
  return std::all_of(b.begin(), b.end(), [&](const Element& e) { return other.contains(e); });
}

Ideal intersect(const Ideal& i, const Ideal& j) {
  if (!(i.algebra() == j.algebra())) throw Error(ErrorCode::AlgebraMismatch, "ideals of different algebras");
  std::vector<std::size_t> z;
  std::set_union(i.zero_set().begin(), i.zero_set().end(), j.zero_set().begin(), j.zero_set().end(),
                 std::back_inserter(z));
  return Ideal(i.algebra(), std::move(z));
}

Ideal sum(const Ideal& i, const Ideal& j) {
  if (!(i.algebra() == j.algebra())) throw Error(ErrorCode::AlgebraMismatch, "ideals of different algebras");
  std::vector<std::size_t> z;
  std::set_intersection(i.zero_set().begin(), i.zero_set().end(), j.zero_set().begin(), j.zero_set().end(),
                        std::back_inserter(z));
  return Ideal(i.algebra(), std::move(z));
}

MaximalIdeal::MaximalIdeal(Ideal ideal) : ideal_(std::move(ideal)) {
  if (!ideal_.is_maximal()) throw Error(ErrorCode::InvalidSubset, "a maximal ideal vanishes at exactly one character");
}

Ideal ideal_from_closed_set(const Algebra& function_algebra, std::span<const std::string> labels) {
  const FiniteSpace& space = function_algebra.function_model().space;
  std::vector<std::size_t> indices;
  indices.reserve(labels.size());
  for (const auto& label : labels) {
    const auto idx = space.index_of(label);
    if (!idx) throw Error(ErrorCode::InvalidSubset, "unknown point '" + label + "'");
    indices.push_back(*idx);
  }
  return Ideal(function_algebra, std::move(indices));
}

Ideal ideal_from_closed_set(const Algebra& algebra, std::span<const std::size_t> indices) {
  return Ideal(algebra, std::vector<std::size_t>(indices.begin(), indices.end()));
}

std::vector<std::size_t> closed_set_from_ideal(const Ideal& ideal) {
  const auto b = ideal.basis();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ideal.algebra().dimension(); ++k) {
    if (std::all_of(b.begin(), b.end(), [k](const Element& f) { return f[k] == Complex(0.0, 0.0); })) {
      out.push_back(k);
    }
  }
  return out;
}

namespace {

std::string quotient_label(const Algebra& algebra, std::size_t k) {
  if (algebra.is_function_algebra()) return algebra.character_label(k);
  // Formatted eigenvalues can coincide at display precision, so prefix the index.
  return std::to_string(k) + ":" + algebra.character_label(k);
}

}  // namespace

std::vector<std::string> closed_set_labels(const Ideal& ideal) {
  std::vector<std::string> out;
  for (std::size_t k : closed_set_from_ideal(ideal)) out.push_back(quotient_label(ideal.algebra(), k));
  return out;
}

QuotientAlgebra::QuotientAlgebra(Ideal ideal, FiniteSpace representative_space)
    : ideal_(std::move(ideal)),
      space_(std::move(representative_space)),
      algebra_(make_function_algebra(space_)) {
  if (space_.size() != ideal_.zero_set().size()) {
    throw Error(ErrorCode::SpaceMismatch, "representative space must carry one point per zero of the ideal");
  }
}

double QuotientAlgebra::quotient_norm(const Element& a) const {
  if (!(a.algebra() == base())) throw Error(ErrorCode::AlgebraMismatch, "element of another algebra");
  double r = 0.0;
  for (std::size_t k : ideal_.zero_set()) r = std::max(r, std::abs(a[k]));
  return r;
}

QuotientResult quotient(const Ideal& ideal) {
  if (!ideal.is_proper()) throw Error(ErrorCode::ImproperIdeal, "the quotient by the whole algebra has no unit");
  std::vector<std::string> labels;
  for (std::size_t k : ideal.zero_set()) labels.push_back(quotient_label(ideal.algebra(), k));
  QuotientAlgebra q(ideal, FiniteSpace(std::move(labels)));
  StarHomomorphism pi(ideal.algebra(), q.algebra(), ideal.zero_set());
  return QuotientResult{std::move(q), std::move(pi)};
}

StarHomomorphism factor_through_quotient(const StarHomomorphism& phi, const QuotientResult& q, double tol) {
  const Ideal& ideal = q.quotient.ideal();
  if (!(phi.source() == ideal.algebra())) {
    throw Error(ErrorCode::AlgebraMismatch, "phi starts at " + phi.source().describe() + ", the ideal lives in " +
                                                ideal.algebra().describe());
  }
  for (std::size_t k = 0; k < ideal.algebra().dimension(); ++k) {
    const Element b = ideal.algebra().indicator(k);
    if (!ideal.contains(b)) continue;
    const double image = phi(b).norm();
    if (image > tol) throw NotContainedError(k, image);
  }
  const auto& zeros = ideal.zero_set();
  std::vector<std::size_t> images(phi.character_images().size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    auto it = std::lower_bound(zeros.begin(), zeros.end(), phi.character_images()[j]);
    // Containment above puts every image inside the zero set.
    images[j] = static_cast<std::size_t>(it - zeros.begin());
  }
  return StarHomomorphism(q.quotient.algebra(), phi.target(), std::move(images));
}

std::vector<MaximalIdeal> max_ideals(const Algebra& algebra) {
  std::vector<MaximalIdeal> out;
  out.reserve(algebra.dimension());
  for (std::size_t k = 0; k < algebra.dimension(); ++k) out.emplace_back(Ideal(algebra, {k}));
  return out;
}

std::vector<MaximalIdeal> zariski_V(const Ideal& ideal) {
  std::vector<MaximalIdeal> out;
  for (auto& m : max_ideals(ideal.algebra())) {
    if (ideal.is_subset_of(m.ideal())) out.push_back(std::move(m));
  }
  return out;
}

ContinuousMap zeta(const FiniteSpace& space) {
  const Algebra c_of_x = make_function_algebra(space);
  const auto maxes = max_ideals(c_of_x);
  std::vector<std::size_t> assignment(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    // ker e_x misses the indicator of x and holds every other indicator.
    auto it = std::find_if(maxes.begin(), maxes.end(), [&](const MaximalIdeal& m) {
      for (std::size_t y = 0; y < space.size(); ++y) {
        if (m.ideal().contains(c_of_x.indicator(y)) == (y == x)) return false;
      }
      return true;
    });
    if (it == maxes.end()) throw Error(ErrorCode::DualityViolation, "no maximal ideal is ker e_" + space.label(x));
    assignment[x] = static_cast<std::size_t>(it - maxes.begin());
  }
  return ContinuousMap(space, FiniteSpace::indexed(maxes.size()), std::move(assignment));
}

}  // namespace cstar
