#include "cstar/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cstar {
namespace {

std::string describe_norm(const char* what, double value, const char* relation, double bound) {
  std::ostringstream os;
  os << what << " " << value << " " << relation << " " << bound;
  return os.str();
}

double residual_against_unit(const Element& product) { return (product - product.algebra().unit()).norm(); }

}  // namespace

UnconvergedError::UnconvergedError(Element partial_sum, NeumannReport report)
    : Error(ErrorCode::Unconverged, describe_norm("residual", report.residual, "after", report.terms_used) + " terms"),
      partial_sum_(std::move(partial_sum)),
      report_(report) {}

NeumannResult neumann_inverse(const Element& a, double tol, int max_terms) {
  const double r = a.norm();
  if (!(r < 1.0)) throw Error(ErrorCode::NormTooLarge, describe_norm("||a|| =", r, ">=", 1.0));

  const Element unit = a.algebra().unit();
  const Element e_minus_a = unit - a;
  Element sum = unit;
  Element term = unit;
  NeumannReport report{.terms_used = 1, .residual = residual_against_unit(e_minus_a * sum), .a_priori_bound = 0.0};
  while (report.residual > tol) {
    if (report.terms_used >= max_terms) {
      report.a_priori_bound = std::pow(r, report.terms_used) / (1.0 - r);
      throw UnconvergedError(sum, report);
    }
    term *= a;
    sum += term;
    ++report.terms_used;
    report.residual = residual_against_unit(e_minus_a * sum);
  }
  report.a_priori_bound = std::pow(r, report.terms_used) / (1.0 - r);
  return {std::move(sum), report};
}

std::vector<Element> neumann_partial_sums(const Element& a, int count) {
  std::vector<Element> sums;
  if (count <= 0) return sums;
  sums.reserve(static_cast<std::size_t>(count));
  Element term = a.algebra().unit();
  sums.push_back(term);
  for (int n = 1; n < count; ++n) {
    term *= a;
    sums.push_back(sums.back() + term);
  }
  return sums;
}

double default_invertibility_tol(const Element& a) { return 1e-10 * (1.0 + a.norm()); }

bool is_invertible(const Element& a, std::optional<double> tol) {
  const double t = tol.value_or(default_invertibility_tol(a));
  for (Eigen::Index k = 0; k < a.coords().size(); ++k) {
    if (!(std::abs(a.coords()(k)) > t)) return false;
  }
  return true;
}

Element inverse(const Element& a, std::optional<double> tol) {
  if (!is_invertible(a, tol)) {
    throw Error(ErrorCode::NotInvertible, "a character value of the element vanishes");
  }
  return a.algebra().element(a.coords().cwiseInverse());
}

Element perturbation_inverse(const Element& a_invertible, const Element& b, double tol, int max_terms) {
  const Element a_inv = inverse(a_invertible);
  const Element diff = a_invertible - b;
  const double radius = 1.0 / a_inv.norm();
  if (!(diff.norm() < radius)) {
    throw Error(ErrorCode::PerturbationTooLarge, describe_norm("||a - b|| =", diff.norm(), ">= 1/||a^-1|| =", radius));
  }
  const Element ratio = a_inv * diff;
  Element term = a_inv;
  Element sum = a_inv;
  NeumannReport report{.terms_used = 1, .residual = residual_against_unit(b * sum), .a_priori_bound = 0.0};
  while (report.residual > tol) {
    if (report.terms_used >= max_terms) throw UnconvergedError(sum, report);
    term = ratio * term;
    sum += term;
    ++report.terms_used;
    report.residual = residual_against_unit(b * sum);
  }
  return sum;
}

Element resolvent(const Element& a, const Complex& lambda, double merge_tol) {
  const SpectrumSet sigma = spectrum(a, merge_tol);
  if (const std::size_t hit = sigma.find(lambda); hit != sigma.size()) {
    throw Error(ErrorCode::SpectrumHit, "lambda = " + format_complex(lambda) + " lies on spectrum point " +
                                            format_complex(sigma[hit]));
  }
  Coords c(a.coords().size());
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = 1.0 / (lambda - a.coords()(k));
  return a.algebra().element(std::move(c));
}

NeumannResult resolvent_series(const Element& a, const Complex& lambda, double tol, int max_terms) {
  if (!(a.norm() < std::abs(lambda))) {
    throw Error(ErrorCode::NormTooLarge, describe_norm("||a|| =", a.norm(), ">= |lambda| =", std::abs(lambda)));
  }
  NeumannResult scaled = neumann_inverse(a * (1.0 / lambda), tol, max_terms);
  scaled.inverse *= 1.0 / lambda;
  return scaled;
}

SpectrumSet spectrum(const Element& a, double merge_tol) {
  std::vector<Complex> values(a.coords().begin(), a.coords().end());
  return SpectrumSet(values, merge_tol);
}

double spectral_radius_exact(const Element& a) { return spectrum(a).max_modulus(); }

namespace {

// Successive squaring shared by the element and dense-matrix routes. The
// running power is kept at unit norm; its true norm lives in log_norm.
template <typename Power, typename NormFn>
RadiusLimit radius_by_squaring(Power q, NormFn norm_of, int n_max) {
  if (n_max < 1) throw Error(ErrorCode::DomainError, "n_max must be at least 1");
  RadiusLimit out;
  out.trace.reserve(static_cast<std::size_t>(n_max) + 1);
  const double first = norm_of(q);
  if (!std::isfinite(first)) throw Error(ErrorCode::Overflow, "norm is not finite; rescale by ||a||");
  out.trace.push_back(first);
  if (first == 0.0) {
    out.trace.resize(static_cast<std::size_t>(n_max) + 1, 0.0);
    return out;
  }
  q = q * (1.0 / first);
  double log_norm = std::log(first);  // log ||a^(2^k)||
  double exponent = 1.0;              // 2^k
  for (int k = 1; k <= n_max; ++k) {
    q = q * q;
    const double nq = norm_of(q);
    if (!std::isfinite(nq)) throw Error(ErrorCode::Overflow, "power norm is not finite at doubling " + std::to_string(k));
    exponent *= 2.0;
    if (nq == 0.0) {
      out.trace.resize(static_cast<std::size_t>(n_max) + 1, 0.0);
      break;
    }
    log_norm = 2.0 * log_norm + std::log(nq);
    q = q * (1.0 / nq);
    out.trace.push_back(std::exp(log_norm / exponent));
  }
  out.estimate = out.trace.back();
  return out;
}

}  // namespace

RadiusLimit spectral_radius_limit(const Element& a, int n_max) {
  return radius_by_squaring(a, [](const Element& x) { return x.norm(); }, n_max);
}

RadiusLimit spectral_radius_limit(const Matrix& m, int n_max) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DomainError, "matrix must be square");
  return radius_by_squaring(Matrix(m), [](const Matrix& x) { return operator_norm(x); }, n_max);
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  const Matrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  const double r = es.eigenvalues().cwiseAbs().maxCoeff();
  return std::sqrt(r);
}

Element apply_polynomial(std::span<const Complex> coeffs, const Element& a) {
  const Algebra& alg = a.algebra();
  if (coeffs.empty()) return alg.zero();
  Element result = alg.constant(coeffs.back());
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    result = result * a + alg.constant(*it);
  }
  return result;
}

Element apply_function(const std::function<Complex(Complex)>& g, const Element& a) {
  Coords out(a.coords().size());
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    const Complex z = a.coords()(k);
    Complex w;
    try {
      w = g(z);
    } catch (const std::exception& ex) {
      throw Error(ErrorCode::DomainError, "function failed at " + format_complex(z) + ": " + ex.what());
    }
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw Error(ErrorCode::DomainError, "function is not finite at spectrum point " + format_complex(z));
    }
    out(k) = w;
  }
  return a.algebra().element(std::move(out));
}

double distance_to_real_line(const Complex& z) { return std::abs(z.imag()); }

double distance_to_unit_circle(const Complex& z) { return std::abs(std::abs(z) - 1.0); }

double distance_to_zero_one(const Complex& z) { return std::min(std::abs(z), std::abs(z - 1.0)); }

double distance_to_nonnegative_reals(const Complex& z) {
  return z.real() >= 0.0 ? std::abs(z.imag()) : std::abs(z);
}

ClassificationReport classify_element(const Element& a, double tol) {
  const double t = tol * (1.0 + a.norm());
  const Element unit = a.algebra().unit();
  const Element adj = a.star();
  const SpectrumSet sigma = spectrum(a);

  auto region_distance = [&](double (*dist)(const Complex&)) {
    double d = 0.0;
    for (const Complex& z : sigma.points()) d = std::max(d, dist(z));
    return d;
  };
  auto finish = [&](ClassFlag& flag, double (*dist)(const Complex&)) {
    flag.holds = flag.defect <= t;
    flag.spectrum_distance = region_distance(dist);
    flag.spectrum_contained = flag.spectrum_distance <= t;
  };

  ClassificationReport report;
  report.self_adjoint.defect = (a - adj).norm();
  finish(report.self_adjoint, distance_to_real_line);

  report.unitary.defect = std::max((adj * a - unit).norm(), (a * adj - unit).norm());
  finish(report.unitary, distance_to_unit_circle);

  report.projection.defect = std::max(report.self_adjoint.defect, (a * a - a).norm());
  finish(report.projection, distance_to_zero_one);

  for (Eigen::Index k = 0; k < a.coords().size(); ++k) {
    const Complex z = a.coords()(k);
    if (std::abs(z.imag()) > t || z.real() < -t) {
      report.positivity_offender = z;
      break;
    }
  }
  if (report.positivity_offender) {
    report.positive.defect = distance_to_nonnegative_reals(*report.positivity_offender);
    report.positive.spectrum_distance = region_distance(distance_to_nonnegative_reals);
  } else {
    Element b = apply_function([](Complex z) { return Complex(std::sqrt(std::max(z.real(), 0.0)), 0.0); }, a);
    report.positive.defect = (b * b.star() - a).norm();
    report.positivity_witness = std::move(b);
    finish(report.positive, distance_to_nonnegative_reals);
  }
  return report;
}

}  // namespace cstar
