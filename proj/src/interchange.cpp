#include "cstar/interchange.hpp"

#include <json.hpp>

namespace cstar {
namespace {

using nlohmann::json;

Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::InvalidDocument, "complex numbers are [re, im] pairs, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw Error(ErrorCode::InvalidDocument, std::string("missing field '") + name + "'");
  return *it;
}

Element parse_function_algebra(const json& doc) {
  const json& points = field(doc, "points");
  const json& values = field(doc, "values");
  if (!points.is_array() || !values.is_array()) {
    throw Error(ErrorCode::InvalidDocument, "'points' and 'values' must be arrays");
  }
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (!p.is_string()) throw Error(ErrorCode::InvalidDocument, "point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  if (values.size() != labels.size()) {
    throw Error(ErrorCode::InvalidDocument, "need one value per point");
  }
  std::vector<Complex> coords;
  for (const auto& v : values) coords.push_back(parse_complex(v));
  return make_function_algebra(FiniteSpace(std::move(labels))).element(coords);
}

Element parse_normal_matrix(const json& doc, double normal_tol, double merge_tol) {
  const json& n_field = field(doc, "n");
  const json& entries = field(doc, "entries");
  if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
    throw Error(ErrorCode::InvalidDocument, "'n' must be a positive integer");
  }
  const auto n = static_cast<Eigen::Index>(n_field.get<long long>());
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n * n) {
    throw Error(ErrorCode::InvalidDocument, "'entries' must hold n*n row-major [re, im] pairs");
  }
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = parse_complex(entries[static_cast<std::size_t>(r * n + c)]);
  }
  return make_normal_generator_algebra(m, normal_tol, merge_tol).generator();
}

}  // namespace

Element parse_document(std::string_view text, double normal_tol, double merge_tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw Error(ErrorCode::InvalidDocument, ex.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::InvalidDocument, "document must be an object");
  const json& kind = field(doc, "kind");
  if (kind == "function_algebra") return parse_function_algebra(doc);
  if (kind == "normal_matrix") return parse_normal_matrix(doc, normal_tol, merge_tol);
  throw Error(ErrorCode::InvalidDocument, "unknown kind " + kind.dump());
}

std::string write_document(const Element& element) {
  json doc;
  if (element.algebra().is_function_algebra()) {
    doc["kind"] = "function_algebra";
    doc["points"] = element.algebra().function_model().space.points();
    json values = json::array();
    for (std::size_t k = 0; k < element.size(); ++k) values.push_back(complex_json(element[k]));
    doc["values"] = std::move(values);
  } else {
    const Matrix m = element.materialize();
    doc["kind"] = "normal_matrix";
    doc["n"] = m.rows();
    json entries = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(complex_json(m(r, c)));
    }
    doc["entries"] = std::move(entries);
  }
  return doc.dump();
}

}  // namespace cstar
