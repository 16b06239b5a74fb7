#pragma once

// Text interchange documents:
//
//   {"kind":"function_algebra","points":["a","b"],"values":[[re,im],[re,im]]}
//   {"kind":"normal_matrix","n":2,"entries":[[re,im],[re,im],[re,im],[re,im]]}
//
// Matrix entries are row-major. A function_algebra document names an element
// of C(X); a normal_matrix document names the generator of C*(N).

#include "cstar/core.hpp"

#include <string>
#include <string_view>

namespace cstar {

/// Throws Error(InvalidDocument) on malformed input. Normality and
/// decomposition failures propagate from make_normal_generator_algebra.
Element parse_document(std::string_view text, double normal_tol = kDefaultNormalTol,
                       double merge_tol = kDefaultMergeTol);

/// Inverse of parse_document. Elements of C*(N) are written as their
/// materialized matrix, which is itself a normal_matrix document.
std::string write_document(const Element& element);

}  // namespace cstar
