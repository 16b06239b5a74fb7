#pragma once

// Character spaces and the Gelfand transform a -> a^, a^(phi) = phi(a).

#include "cstar/core.hpp"

#include <vector>

namespace cstar {

/// The characters of an algebra in canonical order: point order for C(X),
/// spectrum order for C*(N).
class CharacterSpace {
public:
  explicit CharacterSpace(Algebra algebra);

  const Algebra& algebra() const noexcept { return algebra_; }
  const std::vector<Character>& characters() const noexcept { return characters_; }
  std::size_t size() const noexcept { return characters_.size(); }
  const Character& operator[](std::size_t i) const { return characters_.at(i); }

  /// The space itself as a finite space, labelled by canonical index.
  FiniteSpace as_space() const { return FiniteSpace::indexed(size()); }

private:
  Algebra algebra_;
  std::vector<Character> characters_;
};

CharacterSpace characters(const Algebra& algebra);

/// phi(a); AlgebraMismatch when phi belongs to another algebra.
Complex evaluate_character(const Character& phi, const Element& a);

/// The algebra C(A^) of continuous functions on the character space.
Algebra gelfand_codomain(const Algebra& algebra);

/// a^ as an element of C(A^).
Element gelfand_transform(const Element& a);

/// The unique a in `algebra` with a^ = f_hat. Throws SpaceMismatch when f_hat
/// does not live on algebra's character space.
Element gelfand_inverse(const Element& f_hat, const Algebra& algebra);

}  // namespace cstar
