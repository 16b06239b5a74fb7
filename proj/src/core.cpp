#include "cstar/core.hpp"

#include "algebra_model.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace cstar {

std::string format_complex(const Complex& z) {
  auto num = [](double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
  };
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0) return num(re);
  std::string imag_part = (std::abs(im) == 1.0 ? std::string() : num(std::abs(im))) + "i";
  if (re == 0.0) return (im < 0 ? "-" : "") + imag_part;
  return num(re) + (im < 0 ? "-" : "+") + imag_part;
}

// --- FiniteSpace ---

FiniteSpace::FiniteSpace(std::vector<std::string> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::EmptySpace, "C of the empty space has no unit");
  std::set<std::string_view> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw Error(ErrorCode::DuplicateLabel, "point label '" + p + "' repeats");
  }
}

FiniteSpace FiniteSpace::indexed(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return FiniteSpace(std::move(labels));
}

std::optional<std::size_t> FiniteSpace::index_of(std::string_view label) const noexcept {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

// --- ContinuousMap ---

ContinuousMap::ContinuousMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size()) {
    throw Error(ErrorCode::InvalidPointMap, "assignment must cover every source point");
  }
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] >= target_.size()) {
      throw Error(ErrorCode::InvalidPointMap,
                  "point '" + source_.label(i) + "' maps outside the target space");
    }
  }
}

ContinuousMap ContinuousMap::identity(const FiniteSpace& space) {
  std::vector<std::size_t> id(space.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return ContinuousMap(space, space, std::move(id));
}

bool ContinuousMap::is_injective() const {
  std::vector<bool> hit(target_.size(), false);
  for (std::size_t t : assignment_) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

bool ContinuousMap::is_surjective() const {
  std::vector<bool> hit(target_.size(), false);
  for (std::size_t t : assignment_) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

ContinuousMap compose(const ContinuousMap& outer, const ContinuousMap& inner) {
  if (!(inner.target() == outer.source())) {
    throw Error(ErrorCode::InvalidPointMap, "cannot compose: codomain and domain differ");
  }
  std::vector<std::size_t> out(inner.source().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = outer(inner(i));
  return ContinuousMap(inner.source(), outer.target(), std::move(out));
}

// --- Algebra ---

bool Algebra::is_function_algebra() const noexcept {
  return std::holds_alternative<FunctionModel>(model_->data);
}

const FunctionModel& Algebra::function_model() const {
  if (const auto* m = std::get_if<FunctionModel>(&model_->data)) return *m;
  throw Error(ErrorCode::AlgebraMismatch, "expected a function algebra C(X)");
}

const NormalGeneratorModel& Algebra::normal_model() const {
  if (const auto* m = std::get_if<NormalGeneratorModel>(&model_->data)) return *m;
  throw Error(ErrorCode::AlgebraMismatch, "expected a normal generator algebra C*(N)");
}

std::size_t Algebra::dimension() const noexcept {
  if (const auto* m = std::get_if<FunctionModel>(&model_->data)) return m->space.size();
  return std::get<NormalGeneratorModel>(model_->data).distinct_spectrum.size();
}

std::string Algebra::character_label(std::size_t index) const {
  if (index >= dimension()) throw Error(ErrorCode::InvalidPointMap, "character index out of range");
  if (const auto* m = std::get_if<FunctionModel>(&model_->data)) return m->space.label(index);
  return format_complex(std::get<NormalGeneratorModel>(model_->data).distinct_spectrum[index]);
}

std::string Algebra::describe() const {
  std::ostringstream os;
  if (is_function_algebra()) {
    os << "C(X) |X|=" << dimension();
  } else {
    os << "C*(N) n=" << normal_model().dimension_n() << " |sigma|=" << dimension();
  }
  return os.str();
}

Element Algebra::element(Coords coords) const { return Element(*this, std::move(coords)); }

Element Algebra::element(const std::vector<Complex>& coords) const {
  Coords c(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) c(static_cast<Eigen::Index>(i)) = coords[i];
  return Element(*this, std::move(c));
}

Element Algebra::unit() const { return constant(Complex(1.0, 0.0)); }

Element Algebra::zero() const { return constant(Complex(0.0, 0.0)); }

Element Algebra::constant(const Complex& c) const {
  return Element(*this, Coords::Constant(static_cast<Eigen::Index>(dimension()), c));
}

Element Algebra::indicator(std::size_t k) const {
  if (k >= dimension()) throw Error(ErrorCode::InvalidPointMap, "indicator index out of range");
  Coords c = Coords::Zero(static_cast<Eigen::Index>(dimension()));
  c(static_cast<Eigen::Index>(k)) = 1.0;
  return Element(*this, std::move(c));
}

Element Algebra::generator() const {
  const auto& spec = normal_model().distinct_spectrum.points();
  return element(spec);
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.model_ == b.model_) return true;
  const auto* fa = std::get_if<FunctionModel>(&a.model_->data);
  const auto* fb = std::get_if<FunctionModel>(&b.model_->data);
  if (fa && fb) return fa->space == fb->space;
  if (fa || fb) return false;
  const auto& na = std::get<NormalGeneratorModel>(a.model_->data);
  const auto& nb = std::get<NormalGeneratorModel>(b.model_->data);
  return na.generator.rows() == nb.generator.rows() && na.generator == nb.generator &&
         na.distinct_spectrum.merge_tol() == nb.distinct_spectrum.merge_tol();
}

Algebra make_function_algebra(FiniteSpace space) {
  return Algebra(std::make_shared<const Algebra::Model>(Algebra::Model{FunctionModel{std::move(space)}}));
}

Algebra make_normal_generator_algebra(const Matrix& matrix, double tol, double merge_tol) {
  return Algebra(std::make_shared<const Algebra::Model>(
      Algebra::Model{detail::diagonalize_normal(matrix, tol, merge_tol)}));
}

// --- Element ---

Element::Element(Algebra algebra, Coords coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (static_cast<std::size_t>(coords_.size()) != algebra_.dimension()) {
    throw Error(ErrorCode::AlgebraMismatch, "coordinate count " + std::to_string(coords_.size()) +
                                                " does not match the " + std::to_string(algebra_.dimension()) +
                                                " characters of " + algebra_.describe());
  }
}

void Element::require_same_algebra(const Element& other) const {
  if (!(algebra_ == other.algebra_)) {
    throw Error(ErrorCode::AlgebraMismatch,
                "operands live in " + algebra_.describe() + " and " + other.algebra_.describe());
  }
}

Element Element::star() const { return Element(algebra_, coords_.conjugate()); }

double Element::norm() const {
  double r = 0.0;
  for (Eigen::Index k = 0; k < coords_.size(); ++k) r = std::max(r, std::abs(coords_(k)));
  return r;
}

Matrix Element::materialize() const {
  if (algebra_.is_function_algebra()) return coords_.asDiagonal();
  const auto& m = algebra_.normal_model();
  const auto n = static_cast<Eigen::Index>(m.dimension_n());
  Coords slots(n);
  for (Eigen::Index i = 0; i < n; ++i) slots(i) = coords_(static_cast<Eigen::Index>(m.multiplicity_map[i]));
  return m.eigenvectors * slots.asDiagonal() * m.eigenvectors.adjoint();
}

Element& Element::operator+=(const Element& other) {
  require_same_algebra(other);
  coords_ += other.coords_;
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_algebra(other);
  coords_ -= other.coords_;
  return *this;
}

Element& Element::operator*=(const Element& other) {
  require_same_algebra(other);
  coords_ = coords_.cwiseProduct(other.coords_);
  return *this;
}

Element& Element::operator*=(const Complex& s) {
  coords_ *= s;
  return *this;
}

Element power(const Element& a, unsigned n) {
  Element result = a.algebra().unit();
  Element base = a;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

// --- Character ---

Character::Character(Algebra algebra, std::size_t index) : algebra_(std::move(algebra)), index_(index) {
  if (index_ >= algebra_.dimension()) {
    throw Error(ErrorCode::InvalidPointMap, "character index out of range for " + algebra_.describe());
  }
}

Complex Character::operator()(const Element& a) const {
  if (!(a.algebra() == algebra_)) {
    throw Error(ErrorCode::AlgebraMismatch,
                "character of " + algebra_.describe() + " applied to an element of " + a.algebra().describe());
  }
  return a[index_];
}

// --- StarHomomorphism ---

StarHomomorphism::StarHomomorphism(Algebra source, Algebra target, std::vector<std::size_t> character_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(character_images)) {
  if (images_.size() != target_.dimension()) {
    throw Error(ErrorCode::InvalidPointMap, "need one source character per target character");
  }
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] >= source_.dimension()) {
      throw Error(ErrorCode::InvalidPointMap,
                  "target character " + std::to_string(j) + " points at missing source character " +
                      std::to_string(images_[j]));
    }
  }
}

StarHomomorphism StarHomomorphism::identity(const Algebra& algebra) {
  std::vector<std::size_t> id(algebra.dimension());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return StarHomomorphism(algebra, algebra, std::move(id));
}

StarHomomorphism StarHomomorphism::from_coordinate_matrix(Algebra source, Algebra target, const Matrix& m,
                                                          double tol) {
  const auto rows = static_cast<Eigen::Index>(target.dimension());
  const auto cols = static_cast<Eigen::Index>(source.dimension());
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorCode::NotAHomomorphism, "coordinate matrix has the wrong shape");
  }
  std::vector<std::size_t> images(static_cast<std::size_t>(rows));
  for (Eigen::Index j = 0; j < rows; ++j) {
    // Multiplicativity on indicators forces every entry into {0, 1}; unitality
    // then forces exactly one 1 per row.
    Eigen::Index hit = -1;
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Complex v = m(j, k);
      if (std::abs(v - 1.0) <= tol) {
        if (hit >= 0) throw Error(ErrorCode::NotAHomomorphism, "row " + std::to_string(j) + " is not unital");
        hit = k;
      } else if (std::abs(v) > tol) {
        throw Error(ErrorCode::NotAHomomorphism,
                    "entry (" + std::to_string(j) + "," + std::to_string(k) + ") = " + format_complex(v) +
                        " breaks multiplicativity");
      }
    }
    if (hit < 0) throw Error(ErrorCode::NotAHomomorphism, "row " + std::to_string(j) + " annihilates the unit");
    images[static_cast<std::size_t>(j)] = static_cast<std::size_t>(hit);
  }
  return StarHomomorphism(std::move(source), std::move(target), std::move(images));
}

Element StarHomomorphism::operator()(const Element& a) const {
  if (!(a.algebra() == source_)) {
    throw Error(ErrorCode::AlgebraMismatch,
                "homomorphism from " + source_.describe() + " applied to an element of " + a.algebra().describe());
  }
  Coords out(static_cast<Eigen::Index>(images_.size()));
  for (std::size_t j = 0; j < images_.size(); ++j) out(static_cast<Eigen::Index>(j)) = a[images_[j]];
  return Element(target_, std::move(out));
}

Matrix StarHomomorphism::coordinate_matrix() const {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(target_.dimension()),
                          static_cast<Eigen::Index>(source_.dimension()));
  for (std::size_t j = 0; j < images_.size(); ++j) {
    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(images_[j])) = 1.0;
  }
  return m;
}

bool StarHomomorphism::is_injective() const {
  std::vector<bool> hit(source_.dimension(), false);
  for (std::size_t k : images_) hit[k] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool StarHomomorphism::is_surjective() const {
  std::vector<bool> hit(source_.dimension(), false);
  for (std::size_t k : images_) {
    if (hit[k]) return false;
    hit[k] = true;
  }
  return true;
}

StarHomomorphism make_star_homomorphism(std::vector<std::size_t> point_map, Algebra source, Algebra target) {
  return StarHomomorphism(std::move(source), std::move(target), std::move(point_map));
}

StarHomomorphism compose(const StarHomomorphism& outer, const StarHomomorphism& inner) {
  if (!(inner.target() == outer.source())) {
    throw Error(ErrorCode::AlgebraMismatch, "cannot compose: " + inner.target().describe() + " vs " +
                                                outer.source().describe());
  }
  // (outer o inner)(a)[j] = inner(a)[outer_j] = a[inner_{outer_j}]
  std::vector<std::size_t> images(outer.character_images().size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    images[j] = inner.character_images()[outer.character_images()[j]];
  }
  return StarHomomorphism(inner.source(), outer.target(), std::move(images));
}

}  // namespace cstar
