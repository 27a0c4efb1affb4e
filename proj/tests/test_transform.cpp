#include <doctest.h>

#include <cmath>
#include <random>

#include "moutard/catalog.hpp"
#include "moutard/transform.hpp"
#include "moutard/verify.hpp"

using namespace moutard;

namespace {
constexpr double kPi = 3.14159265358979323846;

AnnularGrid default_grid(int n) {
  return make_grid(1.0, 3.0, 0.3, kPi - 0.3, n, n);
}

// theta range clear of the sin(k r cos t) = 0 line at theta = pi/2
AnnularGrid zero_free_grid(int n) { return make_grid(1.0, 3.0, 0.3, 1.4, n, n); }

ScalarField free_u(const AnnularGrid& g, double k) {
  return sample([k](double, double) { return cplx(-k * k, 0.0); }, g);
}

ScalarField sin_seed(const AnnularGrid& g, double k) {
  return sample(
      [k](double r, double th) {
        return cplx(std::sin(k * r * std::cos(th)), 0.0);
      },
      g);
}

ScalarField cos_seed(const AnnularGrid& g, double k) {
  return sample(
      [k](double r, double th) {
        return cplx(std::cos(k * r * std::cos(th)), 0.0);
      },
      g);
}

}  // namespace

TEST_CASE("single_potential reproduces the closed-form transformed potential") {
  const double k = 1.0;
  const AnnularGrid g = default_grid(129);
  const ScalarField u1 = single_potential(free_u(g, k), sin_seed(g, k));

  FamilySpec spec;
  spec.family = "eq5-single";
  spec.k = k;
  const ScalarField closed = sample(potential(spec).eval, g);

  // compare away from the seed's zero line
  const ScalarField w = sin_seed(g, k);
  const double cutoff = 0.1 * max_abs(w);
  InteriorMask mask{u1.margin(), [&](int i, int j) {
                      return std::abs(w.at(i, j)) < cutoff;
                    }};
  CHECK(relative_linf(u1, closed, mask) < 1e-5);
}

TEST_CASE("single_potential is the identity when sin Y0^2 is constant") {
  // analytically exact; numerically limited by the seed derivatives, so
  // check the discrepancy at finite-difference accuracy and its decay
  const AnnularGrid g0 = default_grid(65);
  double prev = 0.0;
  for (int lvl = 0; lvl < 2; ++lvl) {
    const AnnularGrid g = default_grid(lvl == 0 ? 65 : 129);
    const ScalarField Y0 = sample(
        [](double, double th) {
          return cplx(1.0 / std::sqrt(std::sin(th)), 0.0);
        },
        g);
    const ScalarField u = sample(
        [](double r, double th) { return cplx(r * th, -0.5 * r); }, g);
    const ScalarField ut = single_potential(u, Y0);
    const InteriorMask band =
        physical_band(g, 1.75 * g0.h_r, 1.75 * g0.h_theta, ut.margin());
    const double rel = relative_linf(ut, u, band);
    CHECK(rel < (lvl == 0 ? 1e-3 : 1e-4));
    if (lvl == 1) CHECK(prev / rel > 10.0);
    prev = rel;
  }
}

TEST_CASE("solution_one_form vanishes for Y = Y0 and scales linearly") {
  const double k = 1.0;
  const AnnularGrid g = zero_free_grid(65);
  const ScalarField Y0 = sin_seed(g, k);
  const OneForm w0 = solution_one_form(Y0, Y0);
  CHECK(max_abs(w0.omega_r) < 1e-12);
  CHECK(max_abs(w0.omega_theta) < 1e-12);

  const ScalarField Y = cos_seed(g, k);
  const OneForm w1 = solution_one_form(Y, Y0);
  const OneForm w2 = solution_one_form(cplx(2.0) * Y, Y0);
  CHECK(max_abs(w2.omega_r - cplx(2.0) * w1.omega_r) /
            max_abs(w1.omega_r) < 1e-12);
  CHECK(max_abs(w2.omega_theta - cplx(2.0) * w1.omega_theta) /
            max_abs(w1.omega_theta) < 1e-12);
}

TEST_CASE("solution_one_form exactness defect decays under refinement") {
  const double k = 1.0;
  double prev = 0.0;
  for (int lvl = 0; lvl < 2; ++lvl) {
    const int n = lvl == 0 ? 65 : 129;
    const AnnularGrid g = zero_free_grid(n);
    const double defect =
        exactness_defect_rel(solution_one_form(cos_seed(g, k), sin_seed(g, k)));
    if (lvl == 1) CHECK(prev / defect > 6.0);
    prev = defect;
  }
}

TEST_CASE("transform_solution with Y = Y0 gives the trivial solution") {
  const double k = 1.0;
  const AnnularGrid g = zero_free_grid(65);
  const ScalarField Y0 = sin_seed(g, k);

  PathIntegrationPlan plan;
  plan.anchor_value = cplx(1.0, 0.0);
  const ScalarField Yt = transform_solution(Y0, Y0, plan);
  const ScalarField trivial = sample(
      [k](double r, double th) {
        return cplx(1.0, 0.0) /
               (std::sin(k * r * std::cos(th)) * std::sin(th) * r);
      },
      g);
  CHECK(relative_linf(Yt, trivial, {Yt.margin(), nullptr}) < 1e-10);

  PathIntegrationPlan zero_plan;
  zero_plan.anchor_value = cplx(0.0, 0.0);
  CHECK(max_abs(transform_solution(Y0, Y0, zero_plan)) < 1e-12);
}

TEST_CASE("transformed trivial solution satisfies the transformed equation") {
  const double k = 1.0;
  const AnnularGrid g0 = zero_free_grid(129);
  double prev = 0.0;
  // start the ladder at 129: the steep region near the seed zero line is
  // pre-asymptotic on the 65 grid
  for (int lvl = 0; lvl < 2; ++lvl) {
    const int n = lvl == 0 ? 129 : 257;
    const AnnularGrid g = zero_free_grid(n);
    const ScalarField Y0 = sin_seed(g, k);
    PathIntegrationPlan plan;
    plan.anchor_value = cplx(1.0, 0.0);
    const ScalarField Yt = transform_solution(Y0, Y0, plan);
    const ScalarField ut = single_potential(free_u(g, k), Y0);
    const ScalarField res = apply_schrodinger(Yt, ut);
    const InteriorMask band =
        physical_band(g, 1.75 * g0.h_r, 1.75 * g0.h_theta, res.margin());
    const double rel = norms(res, band).linf / norms(Yt, band).linf;
    CHECK(rel < (lvl == 0 ? 5e-3 : 5e-4));
    if (lvl == 1) CHECK(prev / rel > 8.0);
    prev = rel;
  }
}

TEST_CASE("pair_one_form is antisymmetric and kills equal seeds") {
  const double k = 1.0;
  const AnnularGrid g = default_grid(65);
  const ScalarField Y1 = sin_seed(g, k);
  const ScalarField Y2 = cos_seed(g, k);

  const OneForm wz = pair_one_form(Y1, Y1);
  CHECK(max_abs(wz.omega_r) < 1e-14);
  CHECK(max_abs(wz.omega_theta) < 1e-14);

  const OneForm w12 = pair_one_form(Y1, Y2);
  const OneForm w21 = pair_one_form(Y2, Y1);
  CHECK(max_abs(w12.omega_r + w21.omega_r) / max_abs(w12.omega_r) < 1e-12);
  CHECK(max_abs(w12.omega_theta + w21.omega_theta) /
            max_abs(w12.omega_theta) < 1e-12);
}

TEST_CASE("twofold_potential matches the closed form and its point value") {
  const double k = 1.0, C = 1.0;
  const AnnularGrid g = default_grid(129);
  const ScalarField F = sample(
      [C](double r, double th) {
        const double s = std::sin(th);
        return cplx(r * r * s * s + C, 0.0);
      },
      g);
  const ScalarField utt = twofold_potential(free_u(g, k), F);

  FamilySpec spec;
  spec.family = "eq9-planewave";
  spec.k = k;
  spec.C = C;
  const ClosedForm closed = potential(spec);
  CHECK(compare_rel_linf(utt, closed, {utt.margin(), nullptr}) < 1e-6);
  // at r = 1, theta = pi/2, C = 1: -k^2 + 4 (1 - 1) / 4 = -1
  CHECK(closed.eval(1.0, kPi / 2).real() == doctest::Approx(-1.0));
}

TEST_CASE("twofold_potential is scale invariant in F") {
  const AnnularGrid g = default_grid(65);
  const ScalarField u = free_u(g, 1.0);
  const ScalarField F = sample(
      [](double r, double th) {
        const double s = std::sin(th);
        return cplx(r * r * s * s + 1.0, 0.0);
      },
      g);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const cplx lambda(dist(rng), dist(rng));
  const ScalarField a = twofold_potential(u, F);
  const ScalarField b = twofold_potential(u, lambda * F);
  CHECK(relative_linf(a, b, {a.margin(), nullptr}) < 1e-12);
}

TEST_CASE("twofold_solutions: quotients, identity at F = 1, eq10 combination") {
  const double k = 1.0, C = 1.0;
  const AnnularGrid g = default_grid(65);
  const ScalarField Y1 = sin_seed(g, k);
  const ScalarField Y2 = cos_seed(g, k);

  const ScalarField one(g, cplx(1.0));
  const auto [s1, s2] = twofold_solutions(Y1, Y2, one);
  CHECK(max_abs(s1 - Y1) == 0.0);
  CHECK(max_abs(s2 - Y2) == 0.0);

  const ScalarField F = sample(
      [C](double r, double th) {
        const double s = std::sin(th);
        return cplx(r * r * s * s + C, 0.0);
      },
      g);
  const auto [t1, t2] = twofold_solutions(Y1, Y2, F);
  const ScalarField combo = t2 + cplx(0.0, 1.0) * t1;

  FamilySpec spec;
  spec.family = "eq10-solution";
  spec.k = k;
  spec.C = C;
  CHECK(compare_rel_linf(combo, solution(spec), {2, nullptr}) < 1e-12);
}

TEST_CASE("twofold solutions satisfy the transformed equation") {
  const double k = 1.0, C = 1.0;
  double prev = 0.0;
  for (int lvl = 0; lvl < 2; ++lvl) {
    const int n = lvl == 0 ? 65 : 129;
    const AnnularGrid g = default_grid(n);
    const ScalarField Y1 = sin_seed(g, k);
    const ScalarField Y2 = cos_seed(g, k);
    const ScalarField F = sample(
        [C](double r, double th) {
          const double s = std::sin(th);
          return cplx(r * r * s * s + C, 0.0);
        },
        g);
    const ScalarField utt = twofold_potential(free_u(g, k), F);
    const auto [t1, t2] = twofold_solutions(Y1, Y2, F);
    const ScalarField res = apply_schrodinger(t2 + cplx(0.0, 1.0) * t1, utt);
    const double rel = max_abs(res);
    CHECK(rel < 1e-3);
    if (lvl == 1) CHECK(prev / rel > 10.0);
    prev = rel;
  }
}

TEST_CASE("seed swap leaves the twofold potential unchanged") {
  const double k = 1.0;
  const AnnularGrid g = default_grid(65);
  FamilySpec seeds_spec;
  seeds_spec.family = "seeds-planewave";
  seeds_spec.k = k;
  // reference shape without the constant; eq9 validation wants C > 0,
  // so build it directly
  const ClosedForm f_ref{[](double r, double th) {
                           const double s = std::sin(th);
                           return cplx(r * r * s * s, 0.0);
                         },
                         ""};
  const TwofoldRun fwd = run_twofold(seeds_spec, g, 1.0, &f_ref);

  const ScalarField Y1 = sin_seed(g, k);
  const ScalarField Y2 = cos_seed(g, k);
  const OneForm swapped = pair_one_form(Y2, Y1);
  const PathIntegral pi = integrate_one_form_report(swapped, {});
  const ScalarField ref = sample(f_ref.eval, g);
  const AffineFit fit = affine_fit(pi.field, ref, {pi.field.margin(), nullptr});
  ScalarField F2 = pi.field;
  F2 += fit.alpha * 1.0 - fit.beta;
  const ScalarField utt2 = twofold_potential(free_u(g, k), F2);
  CHECK(relative_linf(fwd.u_twofold, utt2,
                      {fwd.u_twofold.margin(), nullptr}) < 1e-10);
}
