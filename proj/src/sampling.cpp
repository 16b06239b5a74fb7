#include "cstar/sampling.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>

namespace cstar {

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

std::size_t Sampler::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

Complex Sampler::gaussian() {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng_);
  const double im = normal(rng_);
  return {re, im};
}

Complex Sampler::in_disk(double radius) {
  const double r = radius * std::sqrt(uniform(0.0, 1.0));
  return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
}

FiniteSpace Sampler::space(std::size_t n) { return FiniteSpace::indexed(n, "x"); }

ContinuousMap Sampler::map(const FiniteSpace& source, const FiniteSpace& target) {
  std::vector<std::size_t> assignment(source.size());
  for (auto& a : assignment) a = index(target.size());
  return ContinuousMap(source, target, std::move(assignment));
}

Element Sampler::element(const Algebra& algebra, double radius) {
  Coords c(static_cast<Eigen::Index>(algebra.dimension()));
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = in_disk(radius);
  return algebra.element(std::move(c));
}

Element Sampler::self_adjoint(const Algebra& algebra, double radius) {
  Coords c(static_cast<Eigen::Index>(algebra.dimension()));
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = uniform(-radius, radius);
  return algebra.element(std::move(c));
}

Element Sampler::unitary(const Algebra& algebra) {
  Coords c(static_cast<Eigen::Index>(algebra.dimension()));
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
  return algebra.element(std::move(c));
}

Element Sampler::projection(const Algebra& algebra) {
  Coords c(static_cast<Eigen::Index>(algebra.dimension()));
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = static_cast<double>(index(2));
  return algebra.element(std::move(c));
}

Element Sampler::positive(const Algebra& algebra, double radius) {
  const Element b = element(algebra, radius);
  return b * b.star();
}

Matrix Sampler::unitary_matrix(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  Matrix g(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) g(r, c) = gaussian();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(m, m);
}

Matrix Sampler::normal_matrix(std::size_t n, double radius) {
  const auto m = static_cast<Eigen::Index>(n);
  Coords lambda(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    lambda(i) = (i > 0 && index(3) == 0) ? lambda(static_cast<Eigen::Index>(index(static_cast<std::size_t>(i))))
                                         : in_disk(radius);
  }
  const Matrix u = unitary_matrix(n);
  return u * lambda.asDiagonal() * u.adjoint();
}

Algebra Sampler::normal_algebra(std::size_t n, double radius) {
  return make_normal_generator_algebra(normal_matrix(n, radius));
}

std::vector<Complex> Sampler::polynomial(std::size_t degree, double radius) {
  std::vector<Complex> coeffs(degree + 1);
  for (auto& c : coeffs) c = in_disk(radius);
  return coeffs;
}

}  // namespace cstar
