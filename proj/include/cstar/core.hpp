#pragma once

// Concrete commutative unital C*-algebras at desk scale.
//
// Two models are provided, and both are presented the same way: an element is
// a vector of character values ("coordinates"), one per point of the
// algebra's character space.
//
//   C(X)       X a finite discrete space; coordinate k is f(x_k).
//   C*(N)      the algebra generated by a normal n x n matrix N and the
//              identity; coordinate k is the value taken on the k-th distinct
//              eigenvalue of N. Dense matrices are materialized on demand as
//              U diag(.) U*.
//
// Every value here is immutable once built; algebras share their model data
// through a shared_ptr to const and can be copied freely across threads.

#include "cstar/errors.hpp"
#include "cstar/spectrum_set.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cstar {

using Coords = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kDefaultNormalTol = 1e-10;

/// Short decimal rendering used by labels and text reports ("1", "-0.5+2i").
std::string format_complex(const Complex& z);

/// A finite discrete (hence compact Hausdorff) space: distinct labels, at least one.
class FiniteSpace {
public:
  explicit FiniteSpace(std::vector<std::string> points);

  /// Space with labels "0", "1", ..., "n-1" (prefixed when `prefix` is non-empty).
  static FiniteSpace indexed(std::size_t n, std::string_view prefix = {});

  std::size_t size() const noexcept { return points_.size(); }
  const std::string& label(std::size_t i) const { return points_.at(i); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  std::optional<std::size_t> index_of(std::string_view label) const noexcept;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

private:
  std::vector<std::string> points_;
};

/// A map between finite spaces, stored as target indices. Every such map is
/// continuous for the discrete topology.
class ContinuousMap {
public:
  ContinuousMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> assignment);

  static ContinuousMap identity(const FiniteSpace& space);

  const FiniteSpace& source() const noexcept { return source_; }
  const FiniteSpace& target() const noexcept { return target_; }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }
  std::size_t operator()(std::size_t source_index) const { return assignment_.at(source_index); }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  friend bool operator==(const ContinuousMap&, const ContinuousMap&) = default;

private:
  FiniteSpace source_;
  FiniteSpace target_;
  std::vector<std::size_t> assignment_;
};

/// outer o inner. Throws InvalidPointMap when inner's target is not outer's source.
ContinuousMap compose(const ContinuousMap& outer, const ContinuousMap& inner);

struct FunctionModel {
  FiniteSpace space;
};

struct NormalGeneratorModel {
  Matrix generator;
  /// One per eigen slot, in (Re, Im) order; column i of `eigenvectors` belongs to slot i.
  std::vector<Complex> eigenvalues;
  Matrix eigenvectors;
  SpectrumSet distinct_spectrum;
  /// Slot i -> index into distinct_spectrum.
  std::vector<std::size_t> multiplicity_map;
  double normality_defect = 0.0;
  double reconstruction_defect = 0.0;

  std::size_t dimension_n() const noexcept { return static_cast<std::size_t>(generator.rows()); }
};

class Element;

/// Handle to one of the two algebra models.
class Algebra {
public:
  bool is_function_algebra() const noexcept;
  bool is_normal_generator_algebra() const noexcept { return !is_function_algebra(); }

  /// Throws AlgebraMismatch when called on the other model.
  const FunctionModel& function_model() const;
  const NormalGeneratorModel& normal_model() const;

  /// Number of characters, which is also the vector-space dimension.
  std::size_t dimension() const noexcept;

  /// Point label for C(X); formatted eigenvalue for C*(N).
  std::string character_label(std::size_t index) const;

  /// "C(X) |X|=3" or "C*(N) n=4 |sigma|=3".
  std::string describe() const;

  Element element(Coords coords) const;
  Element element(const std::vector<Complex>& coords) const;
  Element unit() const;
  Element zero() const;
  Element constant(const Complex& c) const;
  /// The minimal projection supported on character k.
  Element indicator(std::size_t k) const;
  /// The generator N as an element of C*(N); AlgebraMismatch for C(X).
  Element generator() const;

  friend bool operator==(const Algebra& a, const Algebra& b);

private:
  struct Model;
  explicit Algebra(std::shared_ptr<const Model> model) : model_(std::move(model)) {}

  std::shared_ptr<const Model> model_;

  friend Algebra make_function_algebra(FiniteSpace space);
  friend Algebra make_normal_generator_algebra(const Matrix& matrix, double tol, double merge_tol);
};

Algebra make_function_algebra(FiniteSpace space);

/// Builds C*(N). Throws NotNormalError when ||NN* - N*N||_F > tol ||N||_F^2, and
/// Error(DecompositionFailure) when the joint diagonalization does not
/// reproduce N.
Algebra make_normal_generator_algebra(const Matrix& matrix, double tol = kDefaultNormalTol,
                                      double merge_tol = kDefaultMergeTol);

class Element {
public:
  Element(Algebra algebra, Coords coords);

  const Algebra& algebra() const noexcept { return algebra_; }
  const Coords& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(coords_.size()); }
  const Complex& operator[](std::size_t k) const { return coords_(static_cast<Eigen::Index>(k)); }

  Element star() const;

  /// Sup norm of the coordinates. For C*(N) this is the operator norm of the
  /// materialized matrix, because the matrix is normal.
  double norm() const;

  /// Dense form: U diag(.) U* for C*(N), the diagonal multiplication operator for C(X).
  Matrix materialize() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Element& other);
  Element& operator*=(const Complex& s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator*(Element a, const Complex& s) { return a *= s; }
  friend Element operator*(const Complex& s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= Complex(-1.0, 0.0); }

private:
  void require_same_algebra(const Element& other) const;

  Algebra algebra_;
  Coords coords_;
};

/// n-th power by repeated squaring inside the algebra.
Element power(const Element& a, unsigned n);

/// A unital *-homomorphism to the scalars, identified by its character index.
class Character {
public:
  Character(Algebra algebra, std::size_t index);

  const Algebra& algebra() const noexcept { return algebra_; }
  std::size_t index() const noexcept { return index_; }
  std::string label() const { return algebra_.character_label(index_); }

  /// phi(a); AlgebraMismatch when a lives elsewhere.
  Complex operator()(const Element& a) const;

  friend bool operator==(const Character&, const Character&) = default;

private:
  Algebra algebra_;
  std::size_t index_;
};

/// A unital *-homomorphism source -> target.
///
/// Every such map between these models is the pullback of a map between
/// character spaces: character j of the target, composed with phi, is
/// character character_images[j] of the source. Applying phi reindexes
/// coordinates.
class StarHomomorphism {
public:
  /// Throws InvalidPointMap if the image list has the wrong length or a
  /// dangling index.
  StarHomomorphism(Algebra source, Algebra target, std::vector<std::size_t> character_images);

  static StarHomomorphism identity(const Algebra& algebra);

  /// Recovers the homomorphism from its matrix in indicator coordinates
  /// (target_dim x source_dim). A linear map is a unital *-homomorphism exactly
  /// when each row is a standard basis row; anything else throws
  /// NotAHomomorphism.
  static StarHomomorphism from_coordinate_matrix(Algebra source, Algebra target, const Matrix& m,
                                                 double tol = 1e-12);

  const Algebra& source() const noexcept { return source_; }
  const Algebra& target() const noexcept { return target_; }
  const std::vector<std::size_t>& character_images() const noexcept { return images_; }

  Element operator()(const Element& a) const;
  Matrix coordinate_matrix() const;

  bool is_injective() const;   // images cover every source character
  bool is_surjective() const;  // no two target characters share an image
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  friend bool operator==(const StarHomomorphism&, const StarHomomorphism&) = default;

private:
  Algebra source_;
  Algebra target_;
  std::vector<std::size_t> images_;
};

StarHomomorphism make_star_homomorphism(std::vector<std::size_t> point_map, Algebra source,
                                        Algebra target);

/// outer o inner; AlgebraMismatch when inner's target is not outer's source.
StarHomomorphism compose(const StarHomomorphism& outer, const StarHomomorphism& inner);

}  // namespace cstar
