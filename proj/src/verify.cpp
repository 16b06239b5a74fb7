#include "cstar/verify.hpp"

#include "cstar/duality.hpp"
#include "cstar/gelfand.hpp"
#include "cstar/ideals.hpp"
#include "cstar/sampling.hpp"
#include "cstar/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cstar {

void LawAccumulator::add(const std::string& law, const std::string& instance, double defect, double tol) {
  add(LawRecord{law, instance, defect, defect <= tol});
}

void LawAccumulator::add(const LawRecord& record) {
  Entry& e = laws_[record.law];
  ++e.checked;
  if (e.checked == 1 || record.defect > e.worst) {
    e.worst = record.defect;
    e.worst_instance = record.instance;
  }
  if (!record.pass && !e.first_failure) e.first_failure = record;
}

void LawAccumulator::merge(const LawReport& report) {
  for (const auto& r : report) add(r);
}

LawReport LawAccumulator::finish() const {
  LawReport out;
  for (const auto& [law, e] : laws_) {
    if (e.first_failure) {
      out.push_back(*e.first_failure);
    } else {
      out.push_back(LawRecord{law, "worst of " + std::to_string(e.checked) + ": " + e.worst_instance, e.worst, true});
    }
  }
  return out;
}

namespace {

double exact(bool ok) { return ok ? 0.0 : 1.0; }

std::vector<std::size_t> subset_of(unsigned mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (mask & (1u << k)) out.push_back(k);
  }
  return out;
}

std::string subset_name(const std::vector<std::size_t>& s, std::size_t n) {
  std::ostringstream os;
  os << "|X|=" << n << " Y={";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

std::size_t size_in(Sampler& s, std::size_t max_size) { return 1 + s.index(max_size); }

void check_duality(const VerifyOptions& opt, Sampler& s, LawAccumulator& acc) {
  for (std::size_t n = 1; n <= opt.max_size; ++n) {
    const FiniteSpace x = FiniteSpace::indexed(n, "x");
    const Algebra c_of_x = functor_G_object(x);
    acc.merge(verify_equivalence(x, opt.tol));
    acc.merge(verify_equivalence(c_of_x, opt.tol));
    const std::string inst = "|X|=" + std::to_string(n);
    acc.add("functor_G_identity", inst,
            exact(functor_G_morphism(ContinuousMap::identity(x)) == StarHomomorphism::identity(c_of_x)), 0.0);
    acc.add("functor_F_identity", inst,
            exact(functor_F_morphism(StarHomomorphism::identity(c_of_x)) ==
                  ContinuousMap::identity(functor_F_object(c_of_x))),
            0.0);
  }

  for (std::size_t i = 0; i < opt.random_morphisms; ++i) {
    const FiniteSpace x = FiniteSpace::indexed(size_in(s, opt.max_size), "x");
    const FiniteSpace y = FiniteSpace::indexed(size_in(s, opt.max_size), "y");
    const FiniteSpace z = FiniteSpace::indexed(size_in(s, opt.max_size), "z");
    const ContinuousMap f = s.map(x, y);
    const ContinuousMap g = s.map(y, z);
    const std::string inst = "f: " + describe(f) + "; g: " + describe(g);

    const StarHomomorphism gf = functor_G_morphism(f);
    const StarHomomorphism gg = functor_G_morphism(g);
    acc.add("functor_G_composition", inst, exact(functor_G_morphism(compose(g, f)) == compose(gf, gg)), 0.0);
    acc.add("functor_F_composition", inst,
            exact(functor_F_morphism(compose(gf, gg)) == compose(functor_F_morphism(gg), functor_F_morphism(gf))),
            0.0);

    const auto mu_square = verify_naturality_mu(f, opt.tol);
    acc.add("naturality_mu", mu_square.morphism, mu_square.max_defect, opt.tol);
    const auto tau_square = verify_naturality_tau(gf, opt.tol);
    acc.add("naturality_tau", tau_square.morphism, tau_square.max_defect, opt.tol);
  }

  // tau-naturality between matrix models, with homomorphisms drawn as random
  // character maps.
  for (std::size_t n = 1; n <= opt.max_size; ++n) {
    const Algebra a = s.normal_algebra(n);
    const Algebra b = s.normal_algebra(size_in(s, opt.max_size));
    std::vector<std::size_t> images(b.dimension());
    for (auto& k : images) k = s.index(a.dimension());
    const auto square = verify_naturality_tau(StarHomomorphism(a, b, images), opt.tol);
    acc.add("naturality_tau", square.morphism, square.max_defect, opt.tol);
    acc.merge(verify_equivalence(a, opt.tol));
  }
}

void check_ideals(const VerifyOptions& opt, Sampler& s, LawAccumulator& acc) {
  const std::size_t exhaustive = std::min<std::size_t>(opt.max_size, 8);
  for (std::size_t n = 1; n <= exhaustive; ++n) {
    const FiniteSpace x = FiniteSpace::indexed(n, "x");
    const Algebra alg = make_function_algebra(x);
    const std::string inst = "|X|=" + std::to_string(n);

    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const auto y = subset_of(mask, n);
      std::vector<std::string> labels;
      for (std::size_t k : y) labels.push_back(x.label(k));
      const Ideal ideal = ideal_from_closed_set(alg, labels);
      acc.add("ideal_correspondence", subset_name(y, n),
              exact(closed_set_from_ideal(ideal) == y && ideal.dimension() == n - y.size() &&
                    ideal.is_proper() == !y.empty() && ideal.is_maximal() == (y.size() == 1)),
              0.0);
    }

    acc.add("zariski_trivial", inst,
            exact(zariski_V(Ideal::zero(alg)).size() == n && zariski_V(Ideal::whole(alg)).empty()), 0.0);
    acc.add("zeta_bijective", inst, exact(zeta(x).is_bijective()), 0.0);

    for (const MaximalIdeal& m : max_ideals(alg)) {
      const QuotientResult q = quotient(m.ideal());
      const Element a = s.element(alg);
      const Element image = q.projection(a);
      const double isometry = std::abs(std::abs(image[0]) - q.quotient.quotient_norm(a));
      acc.add("gelfand_mazur", inst + " m=ker e_" + std::to_string(m.point()),
              std::max(exact(q.quotient.dimension() == 1), isometry), opt.tol);
    }

    // Random quotient by a proper ideal.
    const unsigned mask = 1u + static_cast<unsigned>(s.index((1u << n) - 1));
    const auto y = subset_of(mask, n);
    const QuotientResult q = quotient(Ideal(alg, y));
    const Element a = s.element(alg);
    const Element cls = q.projection(a);
    const std::string qinst = subset_name(y, n);
    acc.add("quotient_c_star", qinst, std::abs((cls.star() * cls).norm() - cls.norm() * cls.norm()), opt.tol);
    acc.add("quotient_projection_contractive", qinst, std::max(0.0, cls.norm() - a.norm()), opt.tol);
    double kernel = 0.0;
    for (const Element& b : q.quotient.ideal().basis()) kernel = std::max(kernel, q.projection(b).norm());
    acc.add("quotient_kernel", qinst, kernel, 0.0);
    // Closed-form quotient norm against the infimum over I: the minimizer
    // cancels a off the zero set, and random members of I never beat it.
    Coords cancel = -a.coords();
    for (std::size_t k : y) cancel(static_cast<Eigen::Index>(k)) = 0.0;
    const Element best = a + alg.element(cancel);
    double inf_defect = std::abs(best.norm() - q.quotient.quotient_norm(a));
    for (int trial = 0; trial < 8; ++trial) {
      Coords c = s.element(alg).coords();
      for (std::size_t k : y) c(static_cast<Eigen::Index>(k)) = 0.0;
      inf_defect = std::max(inf_defect, q.quotient.quotient_norm(a) - (a + alg.element(c)).norm());
    }
    acc.add("quotient_norm_inf", qinst, std::max(0.0, inf_defect), opt.tol);
  }

  const std::size_t lattice = std::min<std::size_t>(opt.max_size, 6);
  for (std::size_t n = 1; n <= lattice; ++n) {
    const Algebra alg = make_function_algebra(FiniteSpace::indexed(n, "x"));
    std::vector<Ideal> ideals;
    std::vector<std::vector<MaximalIdeal>> v;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ideals.emplace_back(alg, subset_of(mask, n));
      v.push_back(zariski_V(ideals.back()));
    }
    auto as_points = [](const std::vector<MaximalIdeal>& ms) {
      std::vector<std::size_t> pts;
      for (const auto& m : ms) pts.push_back(m.point());
      return pts;
    };
    bool unions = true;
    bool intersections = true;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      const auto vi = as_points(v[i]);
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        const auto vj = as_points(v[j]);
        std::vector<std::size_t> u;
        std::vector<std::size_t> w;
        std::set_union(vi.begin(), vi.end(), vj.begin(), vj.end(), std::back_inserter(u));
        std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(), std::back_inserter(w));
        unions = unions && u == as_points(zariski_V(intersect(ideals[i], ideals[j])));
        intersections = intersections && w == as_points(zariski_V(sum(ideals[i], ideals[j])));
      }
    }
    const std::string inst = "|X|=" + std::to_string(n) + " all ideal pairs";
    acc.add("zariski_union", inst, exact(unions), 0.0);
    acc.add("zariski_intersection", inst, exact(intersections), 0.0);
  }
}

void check_element_laws(const Element& a, const std::string& inst, const VerifyOptions& opt, Sampler& s,
                        LawAccumulator& acc) {
  const Algebra& alg = a.algebra();
  const double na = a.norm();

  acc.add("c_star_identity", inst, std::abs((a.star() * a).norm() - na * na) / (1.0 + na * na), opt.tol);
  acc.add("involution_isometry", inst, std::abs(a.star().norm() - na), opt.tol);
  const Element b = s.element(alg);
  acc.add("submultiplicativity", inst, std::max(0.0, (a * b).norm() - na * b.norm()), opt.tol);

  const SpectrumSet sigma = spectrum(a);
  const double r = sigma.max_modulus();
  acc.add("radius_equals_norm", inst, std::abs(r - na), opt.tol);
  acc.add("spectral_bound", inst, std::max(0.0, r - na), opt.tol);
  acc.add("radius_limit", inst, std::abs(spectral_radius_limit(a, 20).estimate - r) / (1.0 + r), 1e-6);

  double contraction = 0.0;
  const CharacterSpace hat_space = characters(alg);
  for (const Character& phi : hat_space.characters()) {
    contraction = std::max(contraction, std::abs(evaluate_character(phi, a)) - na);
  }
  acc.add("character_contraction", inst, std::max(0.0, contraction), opt.tol);

  const auto p = s.polynomial(s.index(6));
  std::vector<Complex> mapped;
  for (const Complex& z : sigma.points()) {
    Complex v = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * z + *it;
    mapped.push_back(v);
  }
  acc.add("spectral_mapping", inst, hausdorff_distance(spectrum(apply_polynomial(p, a)), SpectrumSet(mapped)),
          opt.tol);

  const Element hat = gelfand_transform(a);
  acc.add("gelfand_isometry", inst, std::abs(hat.norm() - na) / (1.0 + na), opt.tol);
  acc.add("gelfand_round_trip", inst, (gelfand_inverse(hat, alg) - a).norm(), opt.tol);
  acc.add("gelfand_multiplicative", inst, (gelfand_transform(a * b) - hat * gelfand_transform(b)).norm(), opt.tol);

  if (na > 0.0) {
    const Element small = a * (0.9 / na);
    const NeumannResult nr = neumann_inverse(small, opt.tol);
    acc.add("neumann_residual", inst, nr.report.residual, opt.tol);
    const Element exact_inverse = inverse(alg.unit() - small);
    const double norm_small = small.norm();
    double excess = 0.0;
    const auto sums = neumann_partial_sums(small, nr.report.terms_used);
    for (std::size_t n = 0; n < sums.size(); ++n) {
      const double bound = std::pow(norm_small, static_cast<double>(n + 1)) / (1.0 - norm_small);
      excess = std::max(excess, (exact_inverse - sums[n]).norm() - bound);
    }
    acc.add("neumann_tail_bound", inst, std::max(0.0, excess), 1e-12);

    const Complex lambda = 2.0 * na * std::polar(1.0, s.uniform(0.0, 6.283185307179586));
    acc.add("resolvent_series_agreement", inst,
            (resolvent(a, lambda) - resolvent_series(a, lambda).inverse).norm(), opt.tol);
  }

  if (alg.is_normal_generator_algebra()) {
    acc.add("norm_uniqueness", inst, std::abs(na - operator_norm(a.materialize())), 1e-8);
    const double scale = (1.0 + na) * (1.0 + b.norm());
    const double defect = std::max({(( a * b).materialize() - a.materialize() * b.materialize()).norm(),
                                    ((a + b).materialize() - a.materialize() - b.materialize()).norm(),
                                    (a.star().materialize() - a.materialize().adjoint()).norm()}) /
                          scale;
    acc.add("materialization_homomorphism", inst, defect, opt.tol);
  }
}

void check_inversion(const Algebra& alg, const std::string& inst, const VerifyOptions& opt, Sampler& s,
                     LawAccumulator& acc) {
  Coords c(static_cast<Eigen::Index>(alg.dimension()));
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = std::polar(s.uniform(0.5, 2.0), s.uniform(0.0, 6.283185307179586));
  const Element a = alg.element(c);
  const Element a_inv = inverse(a);
  const double radius = 1.0 / a_inv.norm();

  const Element d = s.element(alg, 1.0);
  const Element b = a + d * (s.uniform(0.0, 0.499) * radius / std::max(d.norm(), 1e-300));
  acc.add("invertibles_open", inst, exact(is_invertible(b)), 0.0);
  acc.add("perturbation_inverse", inst, (perturbation_inverse(a, b) - inverse(b)).norm(), 1e-8);

  // Continuity of inversion: ||a - b|| < delta forces ||b^-1 - a^-1|| <= eps.
  const double eps = s.uniform(0.01, 1.0);
  const double eps1 = eps / a_inv.norm();
  const double delta = eps1 / ((1.0 + eps1) * a_inv.norm());
  const Element near = a + d * (0.999 * delta / std::max(d.norm(), 1e-300));
  acc.add("inverse_continuity", inst, std::max(0.0, (inverse(near) - a_inv).norm() - eps), opt.tol);
}

void check_classification(const Algebra& alg, const std::string& inst, const VerifyOptions& opt, Sampler& s,
                          LawAccumulator& acc) {
  auto law = [&](const char* name, const Element& a, ClassFlag ClassificationReport::*flag) {
    const ClassFlag f = classify_element(a, opt.tol).*flag;
    acc.add(name, inst, f.holds ? f.spectrum_distance : 1.0, opt.tol);
  };
  law("classification_self_adjoint", s.self_adjoint(alg), &ClassificationReport::self_adjoint);
  law("classification_unitary", s.unitary(alg), &ClassificationReport::unitary);
  law("classification_projection", s.projection(alg), &ClassificationReport::projection);
  law("classification_positive", s.positive(alg), &ClassificationReport::positive);
}

void check_spectral(const VerifyOptions& opt, Sampler& s, LawAccumulator& acc) {
  const std::size_t trials = 8;
  for (std::size_t n = 1; n <= opt.max_size; ++n) {
    const Algebra fn = make_function_algebra(FiniteSpace::indexed(n, "x"));
    const Algebra mat = s.normal_algebra(n);
    for (const Algebra* alg : {&fn, &mat}) {
      const std::string inst = alg->describe();
      for (std::size_t t = 0; t < trials; ++t) {
        check_element_laws(s.element(*alg), inst, opt, s, acc);
        check_inversion(*alg, inst, opt, s, acc);
        check_classification(*alg, inst, opt, s, acc);
      }
      check_element_laws(alg->zero(), inst + " a=0", opt, s, acc);
      check_element_laws(alg->unit(), inst + " a=e", opt, s, acc);
    }
    check_element_laws(mat.generator(), mat.describe() + " a=N", opt, s, acc);
  }
}

}  // namespace

LawReport run_verification(const VerifyOptions& options, const std::optional<Element>& input) {
  Sampler sampler(options.seed);
  LawAccumulator acc;
  check_duality(options, sampler, acc);
  check_ideals(options, sampler, acc);
  check_spectral(options, sampler, acc);
  if (input) {
    const std::string inst = "input " + input->algebra().describe();
    acc.merge(verify_equivalence(input->algebra(), options.tol));
    check_element_laws(*input, inst, options, sampler, acc);
  }
  return acc.finish();
}

}  // namespace cstar
