#pragma once

// The contravariant functors between finite spaces and finite-dimensional
// commutative unital C*-algebras, their natural isomorphisms with the
// identities, and extensional checks of the equivalence.
//
//   F(A) = A^ (character space)       F(phi) = (psi -> psi o phi)
//   G(X) = C(X)                       G(h)   = (g -> g o h)
//   tau(A): A -> G(F(A)),  a -> a^
//   mu(X):  X -> F(G(X)),  x -> e_x

#include "cstar/core.hpp"
#include "cstar/report.hpp"

#include <string>

namespace cstar {

inline constexpr double kDefaultNaturalityTol = 1e-10;

FiniteSpace functor_F_object(const Algebra& algebra);

/// F(phi): F(B) -> F(A). Each psi o phi is identified from its values on the
/// indicator basis of A; a composite that is not an evaluation throws
/// NotACharacter.
ContinuousMap functor_F_morphism(const StarHomomorphism& phi, double tol = 1e-12);

Algebra functor_G_object(const FiniteSpace& space);

/// G(h): C(Y) -> C(X) for h: X -> Y.
StarHomomorphism functor_G_morphism(const ContinuousMap& h);

/// tau(A) = Gelfand transform, packaged as a *-homomorphism A -> C(A^).
StarHomomorphism tau(const Algebra& algebra);

/// x -> index of e_x in F(G(X)), found by probing indicators. Throws
/// DualityViolation if the result is not a bijection.
ContinuousMap mu(const FiniteSpace& space);

struct NaturalitySquareReport {
  enum class Kind { Tau, Mu };
  Kind kind = Kind::Tau;
  std::string morphism;
  double max_defect = 0.0;
  bool commutes = false;
};

/// G(F(phi)) o tau(A) against tau(B) o phi on every indicator of A, read at
/// every character of B.
NaturalitySquareReport verify_naturality_tau(const StarHomomorphism& phi, double tol = kDefaultNaturalityTol);

/// F(G(f)) o mu(X) against mu(Y) o f, both sides read as characters of C(Y)
/// on every indicator g of C(Y).
NaturalitySquareReport verify_naturality_mu(const ContinuousMap& f, double tol = kDefaultNaturalityTol);

/// Space instance: F(G(X)) has |X| points and mu(X) is a bijection.
LawReport verify_equivalence(const FiniteSpace& space, double tol = kDefaultNaturalityTol);

/// Algebra instance: tau(A) is an injective, surjective, isometric,
/// multiplicative, *-preserving map onto C(A^).
LawReport verify_equivalence(const Algebra& algebra, double tol = kDefaultNaturalityTol);

std::string describe(const ContinuousMap& f);
std::string describe(const StarHomomorphism& phi);

}  // namespace cstar
