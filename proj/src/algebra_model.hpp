#pragma once

#include "cstar/core.hpp"

#include <variant>

namespace cstar {

struct Algebra::Model {
  std::variant<FunctionModel, NormalGeneratorModel> data;
};

namespace detail {

/// Joint unitary diagonalization of a normal matrix through its commuting
/// Hermitian and anti-Hermitian parts.
NormalGeneratorModel diagonalize_normal(const Matrix& matrix, double tol, double merge_tol);

}  // namespace detail
}  // namespace cstar
