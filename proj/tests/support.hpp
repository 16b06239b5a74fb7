#pragma once

#include "cstar/core.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace testing_support {

using cstar::Complex;

inline constexpr Complex I{0.0, 1.0};

/// Code of the cstar::Error thrown by f, or nullopt when nothing is thrown.
inline std::optional<cstar::ErrorCode> error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const cstar::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Element of C({x0, ..., x(n-1)}) with the given values.
inline cstar::Element fn(const std::vector<Complex>& values) {
  auto alg = cstar::make_function_algebra(cstar::FiniteSpace::indexed(values.size(), "x"));
  return alg.element(values);
}

inline cstar::Matrix diag(const std::vector<Complex>& d) {
  cstar::Matrix m = cstar::Matrix::Zero(static_cast<Eigen::Index>(d.size()),
                                        static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return m;
}

inline std::vector<Complex> values(const cstar::Element& a) {
  return {a.coords().begin(), a.coords().end()};
}

inline double max_abs_diff(const cstar::Coords& a, const cstar::Coords& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testing_support
