#pragma once

// Closed ideals, quotients and the maximal-ideal space with its Zariski
// topology.
//
// In these finite-dimensional algebras every closed ideal is I_Y, the set of
// elements vanishing on a subset Y of the character space, so an Ideal is
// stored as its zero set. The zero set is kept sorted.

#include "cstar/core.hpp"

#include <span>
#include <string>
#include <vector>

namespace cstar {

class Ideal {
public:
  /// Throws InvalidSubset on an out-of-range or repeated index.
  Ideal(Algebra algebra, std::vector<std::size_t> zero_set);

  static Ideal zero(const Algebra& algebra);
  static Ideal whole(const Algebra& algebra) { return Ideal(algebra, {}); }

  const Algebra& algebra() const noexcept { return algebra_; }
  const std::vector<std::size_t>& zero_set() const noexcept { return zero_set_; }

  bool contains(const Element& a, double tol = 0.0) const;
  bool is_proper() const noexcept { return !zero_set_.empty(); }
  bool is_maximal() const noexcept { return zero_set_.size() == 1; }
  std::size_t dimension() const noexcept { return algebra_.dimension() - zero_set_.size(); }

  /// Indicators of the characters outside the zero set; they span the ideal.
  std::vector<Element> basis() const;

  /// this is a subset of other
  bool is_subset_of(const Ideal& other) const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

private:
  Algebra algebra_;
  std::vector<std::size_t> zero_set_;
};

/// I cap J: vanishes on the union of the zero sets.
Ideal intersect(const Ideal& i, const Ideal& j);
/// I + J: vanishes on the intersection of the zero sets.
Ideal sum(const Ideal& i, const Ideal& j);

/// An ideal with exactly one vanishing character.
class MaximalIdeal {
public:
  explicit MaximalIdeal(Ideal ideal);

  const Ideal& ideal() const noexcept { return ideal_; }
  std::size_t point() const noexcept { return ideal_.zero_set().front(); }

  friend bool operator==(const MaximalIdeal&, const MaximalIdeal&) = default;

private:
  Ideal ideal_;
};

/// I_Y for Y given by point labels of X. Throws InvalidSubset on unknown or
/// repeated labels, and AlgebraMismatch for C*(N).
Ideal ideal_from_closed_set(const Algebra& function_algebra, std::span<const std::string> labels);

/// I_Y for Y given by character indices; works for both models.
Ideal ideal_from_closed_set(const Algebra& algebra, std::span<const std::size_t> indices);

/// Common zero set of the ideal, computed from its spanning basis.
std::vector<std::size_t> closed_set_from_ideal(const Ideal& ideal);

/// Labels of closed_set_from_ideal (point labels or eigenvalue labels).
std::vector<std::string> closed_set_labels(const Ideal& ideal);

/// A / I realized as C(Y) on the zero set Y.
class QuotientAlgebra {
public:
  QuotientAlgebra(Ideal ideal, FiniteSpace representative_space);

  const Algebra& base() const noexcept { return ideal_.algebra(); }
  const Ideal& ideal() const noexcept { return ideal_; }
  const FiniteSpace& representative_space() const noexcept { return space_; }
  const Algebra& algebra() const noexcept { return algebra_; }
  std::size_t dimension() const noexcept { return space_.size(); }

  /// ||a + I||, in closed form: sup over the zero set of |a|.
  double quotient_norm(const Element& a) const;

private:
  Ideal ideal_;
  FiniteSpace space_;
  Algebra algebra_;
};

struct QuotientResult {
  QuotientAlgebra quotient;
  StarHomomorphism projection;
};

/// A / I with pi: A -> A / I. Throws ImproperIdeal when I = A.
QuotientResult quotient(const Ideal& ideal);

/// psi: A / I -> B with psi o pi = phi. Throws NotContainedError when some
/// basis element of I survives phi.
StarHomomorphism factor_through_quotient(const StarHomomorphism& phi, const QuotientResult& q, double tol = 0.0);

/// One maximal ideal ker(phi) per character phi, in character order.
std::vector<MaximalIdeal> max_ideals(const Algebra& algebra);

/// V(I): the maximal ideals containing I, found by testing I's basis against
/// each maximal ideal.
std::vector<MaximalIdeal> zariski_V(const Ideal& ideal);

/// zeta: x -> ker e_x as a map X -> Max(C(X)), with Max labelled by index.
ContinuousMap zeta(const FiniteSpace& space);

}  // namespace cstar
