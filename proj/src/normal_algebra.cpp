#include "algebra_model.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cstar::detail {
namespace {

using Real = Eigen::VectorXd;

// Runs of consecutive sorted values whose gaps are at most tol.
std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters(const Real& sorted, double tol) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted(i) - sorted(i - 1) > tol) {
      out.emplace_back(begin, i - begin);
      begin = i;
    }
  }
  return out;
}

// Rotates the columns of `basis` (an orthonormal basis of a subspace invariant
// under both a and b) so that they diagonalize a, then b inside each
// near-degenerate block of a.
void refine(Matrix& basis, const Matrix& a, const Matrix& b, double tol, int depth) {
  if (basis.cols() <= 1) return;
  const Matrix restricted = basis.adjoint() * a * basis;
  Eigen::SelfAdjointEigenSolver<Matrix> es(restricted);
  basis = basis * es.eigenvectors();
  if (depth == 0) return;
  for (auto [start, len] : clusters(es.eigenvalues(), tol)) {
    if (len < 2) continue;
    Matrix block = basis.middleCols(start, len);
    refine(block, b, a, tol, depth - 1);
    basis.middleCols(start, len) = block;
  }
}

}  // namespace

NormalGeneratorModel diagonalize_normal(const Matrix& matrix, double tol, double merge_tol) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
    throw Error(ErrorCode::DecompositionFailure, "generator must be a non-empty square matrix");
  }
  if (!matrix.allFinite()) throw Error(ErrorCode::DecompositionFailure, "generator has non-finite entries");

  const Eigen::Index n = matrix.rows();
  const double fro = matrix.norm();
  const double commutator = (matrix * matrix.adjoint() - matrix.adjoint() * matrix).norm();
  const double threshold = tol * fro * fro;
  if (commutator > threshold) throw NotNormalError(commutator, threshold);

  // N = H + iK with H, K Hermitian; normality is exactly [H, K] = 0.
  const Matrix hermitian = (matrix + matrix.adjoint()) / 2.0;
  const Matrix skew = (matrix - matrix.adjoint()) / Complex(0.0, 2.0);

  Matrix u = Matrix::Identity(n, n);
  refine(u, hermitian, skew, merge_tol, 2);

  std::vector<Complex> lambda(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    lambda[static_cast<std::size_t>(i)] = u.col(i).dot(matrix * u.col(i));
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return lex_less(lambda[x], lambda[y]); });

  NormalGeneratorModel model{
      .generator = matrix,
      .eigenvalues = {},
      .eigenvectors = Matrix(n, n),
      .distinct_spectrum = SpectrumSet(lambda, merge_tol),
      .multiplicity_map = {},
      .normality_defect = commutator,
      .reconstruction_defect = 0.0,
  };
  model.eigenvalues.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::size_t src = order[static_cast<std::size_t>(i)];
    model.eigenvalues.push_back(lambda[src]);
    model.eigenvectors.col(i) = u.col(static_cast<Eigen::Index>(src));
  }
  for (const Complex& z : model.eigenvalues) model.multiplicity_map.push_back(model.distinct_spectrum.find(z));

  const Matrix id = Matrix::Identity(n, n);
  const double unitarity = (model.eigenvectors.adjoint() * model.eigenvectors - id).norm();
  Coords diag(n);
  for (Eigen::Index i = 0; i < n; ++i) diag(i) = model.eigenvalues[static_cast<std::size_t>(i)];
  model.reconstruction_defect =
      (model.eigenvectors * diag.asDiagonal() * model.eigenvectors.adjoint() - matrix).norm();

  if (unitarity > 1e-9 * std::sqrt(static_cast<double>(n)) ||
      model.reconstruction_defect > 1e-9 * std::max(1.0, fro)) {
    std::ostringstream os;
    os << "unitarity defect " << unitarity << ", reconstruction defect " << model.reconstruction_defect;
    throw Error(ErrorCode::DecompositionFailure, os.str());
  }
  return model;
}

}  // namespace cstar::detail
