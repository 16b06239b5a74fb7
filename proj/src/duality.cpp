#include "cstar/duality.hpp"

#include "cstar/gelfand.hpp"
#include "cstar/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cstar {
namespace {

std::string index_list(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

double coord_distance(const Element& a, const Element& b) { return (a.coords() - b.coords()).cwiseAbs().maxCoeff(); }

LawRecord record(std::string law, std::string instance, double defect, double tol) {
  return LawRecord{std::move(law), std::move(instance), defect, defect <= tol};
}

// Deterministic probe elements: unit, indicators, and a ramp that separates
// every character.
std::vector<Element> probes(const Algebra& algebra) {
  std::vector<Element> out{algebra.unit()};
  const std::size_t d = algebra.dimension();
  for (std::size_t k = 0; k < d; ++k) out.push_back(algebra.indicator(k));
  Coords ramp(static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    const double t = static_cast<double>(k) + 1.0;
    ramp(static_cast<Eigen::Index>(k)) = Complex(t / static_cast<double>(d), std::sin(t));
  }
  out.push_back(algebra.element(std::move(ramp)));
  if (algebra.is_normal_generator_algebra()) out.push_back(algebra.generator());
  return out;
}

}  // namespace

std::string describe(const ContinuousMap& f) {
  std::ostringstream os;
  os << "|X|=" << f.source().size() << " -> |Y|=" << f.target().size() << " map=" << index_list(f.assignment());
  return os.str();
}

std::string describe(const StarHomomorphism& phi) {
  return phi.source().describe() + " -> " + phi.target().describe() + " images=" + index_list(phi.character_images());
}

FiniteSpace functor_F_object(const Algebra& algebra) { return characters(algebra).as_space(); }

ContinuousMap functor_F_morphism(const StarHomomorphism& phi, double tol) {
  const Algebra& a = phi.source();
  const Algebra& b = phi.target();
  const CharacterSpace b_hat = characters(b);

  std::vector<Element> basis_images;
  basis_images.reserve(a.dimension());
  for (std::size_t k = 0; k < a.dimension(); ++k) basis_images.push_back(phi(a.indicator(k)));
  const Element unit_image = phi(a.unit());

  std::vector<std::size_t> assignment(b_hat.size());
  for (std::size_t j = 0; j < b_hat.size(); ++j) {
    const Character& psi = b_hat[j];
    if (std::abs(psi(unit_image) - 1.0) > tol) {
      throw Error(ErrorCode::NotACharacter, "psi o phi is not unital at character " + std::to_string(j));
    }
    // A functional on C(K) is a character iff its values on the indicators
    // form a standard basis vector.
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < basis_images.size(); ++k) {
      const Complex v = psi(basis_images[k]);
      if (std::abs(v - 1.0) <= tol && !hit) {
        hit = k;
      } else if (std::abs(v) > tol) {
        throw Error(ErrorCode::NotACharacter, "psi o phi fails multiplicativity at character " + std::to_string(j));
      }
    }
    if (!hit) throw Error(ErrorCode::NotACharacter, "psi o phi vanishes at character " + std::to_string(j));
    assignment[j] = *hit;
  }
  return ContinuousMap(b_hat.as_space(), functor_F_object(a), std::move(assignment));
}

Algebra functor_G_object(const FiniteSpace& space) { return make_function_algebra(space); }

StarHomomorphism functor_G_morphism(const ContinuousMap& h) {
  // (g o h)(x) = g(h(x)): evaluation at x pulls back to evaluation at h(x).
  return StarHomomorphism(make_function_algebra(h.target()), make_function_algebra(h.source()), h.assignment());
}

StarHomomorphism tau(const Algebra& algebra) {
  const Algebra codomain = gelfand_codomain(algebra);
  Matrix m(static_cast<Eigen::Index>(codomain.dimension()), static_cast<Eigen::Index>(algebra.dimension()));
  for (std::size_t k = 0; k < algebra.dimension(); ++k) {
    m.col(static_cast<Eigen::Index>(k)) = gelfand_transform(algebra.indicator(k)).coords();
  }
  return StarHomomorphism::from_coordinate_matrix(algebra, codomain, m);
}

ContinuousMap mu(const FiniteSpace& space) {
  const Algebra c_of_x = functor_G_object(space);
  const CharacterSpace hat = characters(c_of_x);
  std::vector<std::size_t> assignment(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    const Element probe = c_of_x.indicator(x);
    auto it = std::find_if(hat.characters().begin(), hat.characters().end(),
                           [&](const Character& phi) { return phi(probe) == Complex(1.0, 0.0); });
    if (it == hat.characters().end()) {
      throw Error(ErrorCode::DualityViolation, "no character evaluates at point '" + space.label(x) + "'");
    }
    assignment[x] = static_cast<std::size_t>(it - hat.characters().begin());
  }
  ContinuousMap out(space, hat.as_space(), std::move(assignment));
  if (!out.is_bijective()) throw Error(ErrorCode::DualityViolation, "x -> e_x is not a bijection");
  return out;
}

NaturalitySquareReport verify_naturality_tau(const StarHomomorphism& phi, double tol) {
  const Algebra& a = phi.source();
  const StarHomomorphism tau_a = tau(a);
  const StarHomomorphism tau_b = tau(phi.target());
  const StarHomomorphism g_f_phi = functor_G_morphism(functor_F_morphism(phi));

  double defect = 0.0;
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    const Element basis = a.indicator(k);
    defect = std::max(defect, coord_distance(g_f_phi(tau_a(basis)), tau_b(phi(basis))));
  }
  return {NaturalitySquareReport::Kind::Tau, describe(phi), defect, defect <= tol};
}

NaturalitySquareReport verify_naturality_mu(const ContinuousMap& f, double tol) {
  const ContinuousMap mu_x = mu(f.source());
  const ContinuousMap mu_y = mu(f.target());
  const ContinuousMap f_g_f = functor_F_morphism(functor_G_morphism(f));
  const Algebra c_of_y = functor_G_object(f.target());

  double defect = 0.0;
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    const Character via_fg(c_of_y, f_g_f(mu_x(x)));
    const Character via_mu(c_of_y, mu_y(f(x)));
    for (std::size_t g = 0; g < c_of_y.dimension(); ++g) {
      const Element probe = c_of_y.indicator(g);
      defect = std::max(defect, std::abs(via_fg(probe) - via_mu(probe)));
    }
  }
  return {NaturalitySquareReport::Kind::Mu, describe(f), defect, defect <= tol};
}

LawReport verify_equivalence(const FiniteSpace& space, double tol) {
  const std::string instance = "|X|=" + std::to_string(space.size());
  LawReport out;
  const FiniteSpace round_trip = functor_F_object(functor_G_object(space));
  out.push_back(record("space_round_trip_size", instance,
                       std::abs(static_cast<double>(round_trip.size()) - static_cast<double>(space.size())), 0.0));
  try {
    const ContinuousMap m = mu(space);
    // mu(x) must be the character that is 1 on the indicator of x.
    const Algebra c_of_x = functor_G_object(space);
    double defect = 0.0;
    for (std::size_t x = 0; x < space.size(); ++x) {
      defect = std::max(defect, std::abs(Character(c_of_x, m(x))(c_of_x.indicator(x)) - 1.0));
    }
    out.push_back(record("mu_bijective", instance, defect, tol));
  } catch (const Error&) {
    out.push_back(LawRecord{"mu_bijective", instance, 1.0, false});
  }
  return out;
}

LawReport verify_equivalence(const Algebra& algebra, double tol) {
  const std::string instance = algebra.describe();
  LawReport out;
  const StarHomomorphism t = tau(algebra);
  const std::vector<Element> ps = probes(algebra);

  double injective = 0.0;
  double isometry = 0.0;
  double mult = 0.0;
  double star = 0.0;
  for (const Element& a : ps) {
    const Element hat = t(a);
    injective = std::max(injective, coord_distance(gelfand_inverse(hat, algebra), a));
    // The isometry is checked against the dense operator norm so the two sides
    // are computed independently.
    isometry = std::max(isometry, std::abs(hat.norm() - operator_norm(a.materialize())) / (1.0 + a.norm()));
    star = std::max(star, coord_distance(t(a.star()), hat.star()));
    for (const Element& b : ps) mult = std::max(mult, coord_distance(t(a * b), hat * t(b)));
  }
  out.push_back(record("tau_injective", instance, injective, tol));

  double surjective = std::abs(static_cast<double>(t.target().dimension()) - static_cast<double>(algebra.dimension()));
  for (std::size_t j = 0; j < t.target().dimension(); ++j) {
    const Element target_basis = t.target().indicator(j);
    surjective = std::max(surjective, coord_distance(t(gelfand_inverse(target_basis, algebra)), target_basis));
  }
  out.push_back(record("tau_surjective", instance, surjective, tol));
  out.push_back(record("tau_isometric", instance, isometry, 1e-8));
  out.push_back(record("tau_multiplicative", instance, mult, tol));
  out.push_back(record("tau_star_preserving", instance, star, tol));

  if (algebra.is_normal_generator_algebra()) {
    const auto& model = algebra.normal_model();
    const double scale = std::max(1.0, model.generator.norm());
    const double recon = (algebra.generator().materialize() - model.generator).norm() / scale;
    out.push_back(record("spectral_reconstruction", instance, recon, 1e-7));
  }
  return out;
}

}  // namespace cstar
