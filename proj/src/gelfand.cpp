#include "cstar/gelfand.hpp"

namespace cstar {

CharacterSpace::CharacterSpace(Algebra algebra) : algebra_(std::move(algebra)) {
  characters_.reserve(algebra_.dimension());
  for (std::size_t k = 0; k < algebra_.dimension(); ++k) characters_.emplace_back(algebra_, k);
}

CharacterSpace characters(const Algebra& algebra) { return CharacterSpace(algebra); }

Complex evaluate_character(const Character& phi, const Element& a) { return phi(a); }

Algebra gelfand_codomain(const Algebra& algebra) { return make_function_algebra(characters(algebra).as_space()); }

Element gelfand_transform(const Element& a) {
  const CharacterSpace hat = characters(a.algebra());
  Coords values(static_cast<Eigen::Index>(hat.size()));
  for (std::size_t i = 0; i < hat.size(); ++i) values(static_cast<Eigen::Index>(i)) = evaluate_character(hat[i], a);
  return make_function_algebra(hat.as_space()).element(std::move(values));
}

Element gelfand_inverse(const Element& f_hat, const Algebra& algebra) {
  const FiniteSpace expected = characters(algebra).as_space();
  if (!f_hat.algebra().is_function_algebra() || !(f_hat.algebra().function_model().space == expected)) {
    throw Error(ErrorCode::SpaceMismatch,
                "function lives in " + f_hat.algebra().describe() + ", not on the character space of " +
                    algebra.describe());
  }
  // Characters are indexed by coordinate, so the preimage has coordinates f_hat(phi_k).
  return algebra.element(f_hat.coords());
}

}  // namespace cstar
