#pragma once

// Seeded generators for random instances used by the verification suite and
// the property tests. Same seed, same stream.

#include "cstar/core.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace cstar {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  std::size_t index(std::size_t n);  // uniform in [0, n)
  Complex gaussian();
  /// Uniform in the closed disk of the given radius.
  Complex in_disk(double radius);

  FiniteSpace space(std::size_t n);
  ContinuousMap map(const FiniteSpace& source, const FiniteSpace& target);

  /// Coordinates uniform in the disk of the given radius.
  Element element(const Algebra& algebra, double radius = 2.0);
  Element self_adjoint(const Algebra& algebra, double radius = 2.0);
  Element unitary(const Algebra& algebra);
  Element projection(const Algebra& algebra);
  /// b b* for a random b.
  Element positive(const Algebra& algebra, double radius = 2.0);

  /// Haar-like unitary from the QR factorization of a complex Gaussian matrix.
  Matrix unitary_matrix(std::size_t n);
  /// U diag(lambda) U* with eigenvalues in the disk of the given radius; about a
  /// third of the draws repeat an earlier eigenvalue.
  Matrix normal_matrix(std::size_t n, double radius = 2.0);
  Algebra normal_algebra(std::size_t n, double radius = 2.0);

  std::vector<Complex> polynomial(std::size_t degree, double radius = 1.0);

  std::mt19937_64& engine() noexcept { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace cstar
