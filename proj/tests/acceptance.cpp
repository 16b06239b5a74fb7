// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include "cstar/duality.hpp"
#include "cstar/gelfand.hpp"
#include "cstar/ideals.hpp"
#include "cstar/sampling.hpp"
#include "cstar/spectral.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace cstar;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Tracks the worst value of one measured quantity against its bound.
struct Worst {
  Worst(const char* what_, double bound_) : what(what_), bound(bound_) {}

  const char* what;
  double bound;
  double value = 0.0;
  std::size_t count = 0;
  std::string where;

  void see(double v, const std::string& instance = {}) {
    if (count++ == 0 || v > value || std::isnan(v)) {
      value = v;
      where = instance;
    }
  }
  bool ok() const { return count > 0 && value <= bound; }
  std::string text() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s %.2e (bound %.0e, n=%zu)", what, value, bound, count);
    std::string s = buf;
    if (!ok() && !where.empty()) s += " at " + where;
    return s;
  }
};

Outcome combine(std::initializer_list<const Worst*> ws, bool extra_ok = true, const std::string& extra = {}) {
  Outcome o;
  o.pass = extra_ok;
  for (const Worst* w : ws) {
    o.pass = o.pass && w->ok();
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += w->text();
  }
  if (!extra.empty()) o.detail += "; " + extra;
  return o;
}

Algebra algebra_for(Sampler& s, std::size_t trial, std::size_t max_n = 8) {
  const std::size_t n = 1 + s.index(max_n);
  return trial % 2 ? make_function_algebra(s.space(n)) : s.normal_algebra(n);
}

double dense_norm(const Matrix& m) { return oracle::largest_singular_value(m); }

std::vector<std::size_t> mask_subset(unsigned mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k)
    if (mask & (1u << k)) out.push_back(k);
  return out;
}

// --- criteria ---

Outcome c_star_identity() {
  Sampler s(1001);
  Worst coord{"max rel defect", 1e-12};
  Worst dense{"max rel defect (dense)", 1e-12};
  std::size_t done = 0;
  while (done < 10'000) {
    auto alg = algebra_for(s, done / 50);
    for (int k = 0; k < 50 && done < 10'000; ++k, ++done) {
      auto a = s.element(alg, std::pow(10.0, s.uniform(-3.0, 3.0)));
      const double na = a.norm();
      const double scale = std::max(na * na, 1e-300);
      coord.see(std::abs((a.star() * a).norm() - na * na) / scale, alg.describe());
      if (alg.is_normal_generator_algebra()) {
        const Matrix m = a.materialize();
        const double nm = dense_norm(m);
        dense.see(std::abs(dense_norm(m.adjoint() * m) - nm * nm) / std::max(nm * nm, 1e-300), alg.describe());
      }
    }
  }
  return combine({&coord, &dense});
}

Outcome neumann() {
  Sampler s(1002);
  Worst residual{"max residual", 1e-8};
  Worst tail{"max (error - tail bound)", 1e-12};
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    auto alg = algebra_for(s, trial);
    auto a = s.element(alg, 0.9);
    const double r = a.norm();
    const auto result = neumann_inverse(a, 1e-12);
    residual.see(result.report.residual, alg.describe());

    const auto sums = neumann_partial_sums(a, result.report.terms_used);
    if (alg.is_function_algebra()) {
      Coords exact(a.size());  // pointwise 1 / (1 - v)
      for (std::size_t k = 0; k < a.size(); ++k) exact(static_cast<Eigen::Index>(k)) = 1.0 / (1.0 - a[k]);
      for (std::size_t n = 0; n < sums.size(); ++n) {
        const double err = (exact - sums[n].coords()).cwiseAbs().maxCoeff();
        tail.see(err - std::pow(r, static_cast<double>(n + 1)) / (1.0 - r), alg.describe());
      }
    } else {
      const Matrix m = a.materialize();
      const Matrix exact = (Matrix::Identity(m.rows(), m.cols()) - m).inverse();
      for (std::size_t n = 0; n < sums.size(); ++n) {
        const double err = dense_norm(exact - sums[n].materialize());
        tail.see(err - std::pow(r, static_cast<double>(n + 1)) / (1.0 - r), alg.describe());
      }
    }
  }
  return combine({&residual, &tail});
}

Outcome perturbation() {
  Sampler s(1003);
  Worst err{"max |b^-1 - 1/b|", 1e-8};
  std::size_t tested = 0;
  while (tested < 1000) {
    auto alg = algebra_for(s, tested);
    auto a = s.element(alg);
    if (!is_invertible(a)) continue;
    const double half_radius = 1.0 / (2.0 * inverse(a).norm());
    auto d = s.element(alg, 1.0);
    if (d.norm() == 0.0) continue;
    auto b = a + (s.uniform(0.0, 1.0) * half_radius / d.norm()) * d;
    auto binv = perturbation_inverse(a, b);
    err.see((binv.coords() - b.coords().cwiseInverse()).cwiseAbs().maxCoeff(), alg.describe());
    ++tested;
  }
  return combine({&err});
}

Outcome spectral_mapping() {
  Sampler s(1004);
  Worst haus{"max Hausdorff", 1e-9};
  Worst dense{"max Hausdorff (dense eigenvalues)", 1e-9};
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    auto alg = algebra_for(s, trial);
    auto a = s.element(alg);
    auto p = s.polynomial(s.index(6));
    std::vector<Complex> image;
    const SpectrumSet sigma_a = spectrum(a);
    for (const Complex& z : sigma_a.points()) image.push_back(oracle::poly_eval(p, z));
    auto pa = apply_polynomial(p, a);
    haus.see(oracle::hausdorff(spectrum(pa).points(), image), alg.describe());
    if (alg.is_normal_generator_algebra()) {
      dense.see(oracle::hausdorff(oracle::eigenvalues(pa.materialize()), image), alg.describe());
    }
  }
  return combine({&haus, &dense});
}

Outcome radius_formula() {
  Sampler s(1005);
  Worst elem{"max |estimate - r|", 1e-6};
  Worst matrix{"max |estimate - r| (dense, n<=16)", 1e-6};
  Worst norm{"max |r(a) - ||a|||", 1e-10};
  for (std::size_t trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + s.index(16);
    Matrix m = s.normal_matrix(n, std::pow(10.0, s.uniform(-1.0, 1.0)));
    double r_oracle = 0.0;
    for (const Complex& z : oracle::eigenvalues(m)) r_oracle = std::max(r_oracle, std::abs(z));
    matrix.see(std::abs(spectral_radius_limit(m, 20).estimate - r_oracle), "n=" + std::to_string(n));

    auto alg = make_normal_generator_algebra(m);
    auto a = s.element(alg, std::pow(10.0, s.uniform(-1.0, 1.0)));
    elem.see(std::abs(spectral_radius_limit(a, 20).estimate - spectral_radius_exact(a)), alg.describe());
    norm.see(std::abs(spectral_radius_exact(a) - dense_norm(a.materialize())), alg.describe());

    auto f = s.element(make_function_algebra(s.space(1 + s.index(16))), std::pow(10.0, s.uniform(-1.0, 1.0)));
    elem.see(std::abs(spectral_radius_limit(f, 20).estimate - spectral_radius_exact(f)), f.algebra().describe());
    norm.see(std::abs(spectral_radius_exact(f) - f.coords().cwiseAbs().maxCoeff()), f.algebra().describe());
  }
  return combine({&elem, &matrix, &norm});
}

Outcome gelfand_isomorphism() {
  Sampler s(1006);
  Worst iso{"isometry", 1e-10};
  Worst mult{"multiplicativity", 1e-10};
  Worst star{"*-preservation", 1e-10};
  Worst trip{"round trip", 1e-10};
  Worst sigma{"sigma vs character values", 1e-9};
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    auto alg = algebra_for(s, trial);
    auto a = s.element(alg);
    auto b = s.element(alg);
    auto ha = gelfand_transform(a);
    const bool dense = alg.is_normal_generator_algebra();
    const double na = dense ? dense_norm(a.materialize()) : a.coords().cwiseAbs().maxCoeff();
    iso.see(std::abs(ha.norm() - na) / (1.0 + na), alg.describe());
    mult.see((gelfand_transform(a * b).coords() - (ha * gelfand_transform(b)).coords()).cwiseAbs().maxCoeff(),
             alg.describe());
    star.see((gelfand_transform(a.star()).coords() - ha.coords().conjugate()).cwiseAbs().maxCoeff(), alg.describe());
    auto back = gelfand_inverse(ha, alg);
    trip.see(dense ? (back.materialize() - a.materialize()).norm()
                   : (back.coords() - a.coords()).cwiseAbs().maxCoeff(),
             alg.describe());
    std::vector<Complex> char_values;
    const CharacterSpace hat = characters(alg);
    for (const Character& phi : hat.characters()) char_values.push_back(phi(a));
    const std::vector<Complex> sig = dense ? oracle::eigenvalues(a.materialize()) : spectrum(a).points();
    sigma.see(oracle::hausdorff(sig, char_values), alg.describe());
  }
  return combine({&iso, &mult, &star, &trip, &sigma});
}

Outcome categorical_equivalence() {
  Sampler s(1007);
  Worst tau_sq{"tau squares", 1e-10};
  Worst mu_sq{"mu squares", 1e-10};
  std::size_t functor_failures = 0;
  std::size_t round_trip_failures = 0;
  std::size_t morphisms = 0;
  std::string first_failure;
  auto fail = [&](std::size_t& counter, const std::string& what) {
    if (counter++ == 0 && first_failure.empty()) first_failure = what;
  };

  std::vector<FiniteSpace> spaces;
  for (std::size_t n = 1; n <= 6; ++n) spaces.push_back(FiniteSpace::indexed(n, "x"));

  auto check_morphism = [&](const ContinuousMap& f) {
    ++morphisms;
    const std::string name = describe(f);
    const StarHomomorphism gf = functor_G_morphism(f);
    // G(f) is the pullback g -> g o f
    auto g = s.element(functor_G_object(f.target()));
    const Element pulled = gf(g);
    for (std::size_t x = 0; x < f.source().size(); ++x)
      if (pulled[x] != g[f(x)]) fail(functor_failures, "pullback " + name);
    // F(G(f)) is f read through mu
    const ContinuousMap fgf = functor_F_morphism(gf);
    const ContinuousMap mx = mu(f.source());
    const ContinuousMap my = mu(f.target());
    for (std::size_t x = 0; x < f.source().size(); ++x)
      if (fgf(mx(x)) != my(f(x))) fail(functor_failures, "F(G(f)) " + name);
    tau_sq.see(verify_naturality_tau(gf).max_defect, name);
    mu_sq.see(verify_naturality_mu(f).max_defect, name);
  };

  for (const FiniteSpace& x : spaces) {
    // objects: round trips and identities
    if (!mu(x).is_bijective()) fail(round_trip_failures, "mu " + std::to_string(x.size()));
    const Algebra cx = functor_G_object(x);
    if (functor_F_object(cx).size() != x.size()) fail(round_trip_failures, "|F(G(X))|");
    if (!tau(cx).is_isomorphism()) fail(round_trip_failures, "tau(C(X))");
    if (!all_pass(verify_equivalence(x)) || !all_pass(verify_equivalence(cx)))
      fail(round_trip_failures, "equivalence " + std::to_string(x.size()));
    if (!(functor_G_morphism(ContinuousMap::identity(x)) == StarHomomorphism::identity(cx)))
      fail(functor_failures, "G(1)");
    if (!(functor_F_morphism(StarHomomorphism::identity(cx)) == ContinuousMap::identity(functor_F_object(cx))))
      fail(functor_failures, "F(1)");
  }
  // every map between spaces of size <= 3
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t m = spaces[i].size();
      const std::size_t n = spaces[j].size();
      std::size_t total = 1;
      for (std::size_t k = 0; k < m; ++k) total *= n;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::size_t> assign(m);
        std::size_t c = code;
        for (std::size_t k = 0; k < m; ++k, c /= n) assign[k] = c % n;
        check_morphism(ContinuousMap(spaces[i], spaces[j], assign));
      }
    }
  }
  // random morphisms and composites up to size 6
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSpace& a = spaces[s.index(6)];
    const FiniteSpace& b = spaces[s.index(6)];
    const FiniteSpace& c = spaces[s.index(6)];
    const ContinuousMap f = s.map(a, b);
    const ContinuousMap g = s.map(b, c);
    check_morphism(f);
    if (!(functor_G_morphism(compose(g, f)) == compose(functor_G_morphism(f), functor_G_morphism(g))))
      fail(functor_failures, "G(g o f)");
    const StarHomomorphism gg = functor_G_morphism(g);
    const StarHomomorphism gf = functor_G_morphism(f);
    if (!(functor_F_morphism(compose(gf, gg)) == compose(functor_F_morphism(gg), functor_F_morphism(gf))))
      fail(functor_failures, "F(phi o psi)");
  }
  // homomorphisms out of matrix algebras
  for (int trial = 0; trial < 50; ++trial) {
    const Algebra alg = s.normal_algebra(1 + s.index(6));
    if (!tau(alg).is_isomorphism() || !all_pass(verify_equivalence(alg))) fail(round_trip_failures, alg.describe());
    const FiniteSpace& y = spaces[s.index(6)];
    std::vector<std::size_t> images;
    for (std::size_t k = 0; k < y.size(); ++k) images.push_back(s.index(alg.dimension()));
    tau_sq.see(verify_naturality_tau(StarHomomorphism(alg, functor_G_object(y), images)).max_defect, alg.describe());
  }

  std::ostringstream extra;
  extra << morphisms << " morphisms, functor-law failures " << functor_failures << ", round-trip failures "
        << round_trip_failures;
  if (!first_failure.empty()) extra << " (first: " << first_failure << ")";
  return combine({&tau_sq, &mu_sq}, functor_failures == 0 && round_trip_failures == 0, extra.str());
}

Outcome ideal_correspondence() {
  std::size_t bad_round_trips = 0, bad_quotients = 0, bad_zariski = 0, subsets = 0;
  Sampler s(1008);
  Worst scalar{"scalar identification |[f]| vs |f(x)|", 0.0};
  for (std::size_t n = 1; n <= 8; ++n) {
    const Algebra alg = make_function_algebra(FiniteSpace::indexed(n, "x"));
    std::set<std::vector<std::size_t>> seen_ideals;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ++subsets;
      const auto y = mask_subset(mask, n);
      const Ideal ideal = ideal_from_closed_set(alg, y);
      // the ideal as a set: which indicators it holds
      std::vector<std::size_t> held;
      for (std::size_t k = 0; k < n; ++k)
        if (ideal.contains(alg.indicator(k))) held.push_back(k);
      if (closed_set_from_ideal(ideal) != y || !seen_ideals.insert(held).second) ++bad_round_trips;
      if (!(ideal_from_closed_set(alg, closed_set_from_ideal(ideal)) == ideal)) ++bad_round_trips;
    }
    if (seen_ideals.size() != (1u << n)) ++bad_round_trips;

    for (const MaximalIdeal& m : max_ideals(alg)) {
      const QuotientResult q = quotient(m.ideal());
      if (q.quotient.dimension() != 1) ++bad_quotients;
      for (int k = 0; k < 20; ++k) {
        const Element f = s.element(alg);
        const Complex cls = q.projection(f)[0];
        if (cls != f[m.point()]) ++bad_quotients;
        scalar.see(std::abs(std::abs(cls) - q.quotient.quotient_norm(f)));
        scalar.see(std::abs(q.projection(f).norm() - std::abs(f[m.point()])));
      }
    }

    // Zariski axioms
    const auto vpoints = [](const Ideal& i) {
      std::set<std::size_t> out;
      for (const auto& m : zariski_V(i)) out.insert(m.point());
      return out;
    };
    if (vpoints(Ideal::zero(alg)).size() != n || !vpoints(Ideal::whole(alg)).empty()) ++bad_zariski;
    const unsigned pair_limit = n <= 6 ? (1u << n) : 0u;
    for (unsigned mi = 0; mi < (1u << n); ++mi) {
      const Ideal i(alg, mask_subset(mi, n));
      const auto vi = vpoints(i);
      if (vi != std::set<std::size_t>(i.zero_set().begin(), i.zero_set().end())) ++bad_zariski;
      for (unsigned mj = 0; mj < pair_limit; ++mj) {
        const Ideal j(alg, mask_subset(mj, n));
        const auto vj = vpoints(j);
        std::set<std::size_t> uni = vi, inter;
        uni.insert(vj.begin(), vj.end());
        for (auto k : vi)
          if (vj.count(k)) inter.insert(k);
        if (uni != vpoints(intersect(i, j)) || inter != vpoints(sum(i, j))) ++bad_zariski;
      }
    }
  }
  std::ostringstream extra;
  extra << subsets << " subsets; round-trip failures " << bad_round_trips << ", quotient failures " << bad_quotients
        << ", Zariski failures " << bad_zariski;
  return combine({&scalar}, bad_round_trips == 0 && bad_quotients == 0 && bad_zariski == 0, extra.str());
}

Outcome classification() {
  Sampler s(1009);
  Worst sa{"R", 1e-9}, un{"S1", 1e-9}, pr{"{0,1}", 1e-9}, po{"R+", 1e-9};
  std::size_t flags_missed = 0;
  auto region = [](const Element& a, double (*dist)(const Complex&)) {
    // spectrum read off the dense matrix when there is one
    std::vector<Complex> sig = a.algebra().is_normal_generator_algebra() ? oracle::eigenvalues(a.materialize())
                                                                          : spectrum(a).points();
    double d = 0.0;
    for (const Complex& z : sig) d = std::max(d, dist(z));
    return d;
  };
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    auto alg = algebra_for(s, trial);
    auto a = s.self_adjoint(alg);
    auto u = s.unitary(alg);
    auto p = s.projection(alg);
    auto q = s.positive(alg);
    sa.see(region(a, distance_to_real_line), alg.describe());
    un.see(region(u, distance_to_unit_circle), alg.describe());
    pr.see(region(p, distance_to_zero_one), alg.describe());
    po.see(region(q, distance_to_nonnegative_reals), alg.describe());
    if (!classify_element(a).self_adjoint.holds || !classify_element(u).unitary.holds ||
        !classify_element(p).projection.holds || !classify_element(q).positive.holds)
      ++flags_missed;
  }
  return combine({&sa, &un, &pr, &po}, flags_missed == 0, "unraised flags " + std::to_string(flags_missed));
}

Outcome norm_uniqueness() {
  Sampler s(1010);
  Worst ours{"| coord sup - operator_norm |", 1e-8};
  Worst svd{"| coord sup - largest singular value |", 1e-8};
  for (std::size_t trial = 0; trial < 500; ++trial) {
    const Algebra alg = s.normal_algebra(1 + s.index(12));
    const Element a = s.element(alg, std::pow(10.0, s.uniform(-1.0, 1.0)));
    const Matrix m = a.materialize();
    ours.see(std::abs(a.norm() - operator_norm(m)), alg.describe());
    svd.see(std::abs(a.norm() - oracle::largest_singular_value(m)), alg.describe());
  }
  return combine({&ours, &svd});
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1", "C*-identity on 10000 elements", c_star_identity},
      {"AC2", "Neumann inversion, 1000 elements with ||a|| <= 0.9", neumann},
      {"AC3", "perturbation inverse vs pointwise reciprocal", perturbation},
      {"AC4", "spectral mapping, 1000 (p, a) with deg p <= 5", spectral_mapping},
      {"AC5", "radius formula and r(a) = ||a||", radius_formula},
      {"AC6", "Gelfand transform is an isometric *-isomorphism", gelfand_isomorphism},
      {"AC7", "categorical equivalence on finite spaces", categorical_equivalence},
      {"AC8", "ideal correspondence, Gelfand-Mazur, Zariski", ideal_correspondence},
      {"AC9", "classification spectra, 1000 per class", classification},
      {"AC10", "norm uniqueness on 500 matrix elements", norm_uniqueness},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::printf("%s %-5s %s | %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
