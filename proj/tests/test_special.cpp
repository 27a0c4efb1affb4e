#include <doctest.h>

#include <cmath>
#include <random>

#include "moutard/special.hpp"
#include "moutard/stencil.hpp"

using namespace moutard;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("legendre_p low degrees") {
  CHECK(legendre_p(0, -0.7) == 1.0);
  CHECK(legendre_p(0, 0.3) == 1.0);
  CHECK(legendre_p(1, 0.5) == 0.5);
  CHECK(legendre_p(2, 0.5) == doctest::Approx(-0.125).epsilon(1e-14));
  CHECK_THROWS_AS(legendre_p(2, 1.5), std::domain_error);
}

TEST_CASE("legendre_p satisfies the Bonnet recurrence") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = dist(rng);
    for (int n = 1; n <= 9; ++n) {
      const double lhs = (n + 1) * legendre_p(n + 1, x);
      const double rhs =
          (2 * n + 1) * x * legendre_p(n, x) - n * legendre_p(n - 1, x);
      CHECK(std::abs(lhs - rhs) < 1e-13);
    }
  }
}

TEST_CASE("legendre_p bounds and endpoint") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int p = 0; p <= 10; ++p) {
    CHECK(legendre_p(p, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (int trial = 0; trial < 50; ++trial)
      CHECK(std::abs(legendre_p(p, dist(rng))) <= 1.0 + 1e-13);
  }
}

TEST_CASE("half-integer Bessel closed-form values") {
  CHECK(std::abs(bessel_half_j(0, kPi)) < 1e-15);
  CHECK(bessel_half_j(0, kPi / 2) == doctest::Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(std::abs(bessel_half_y(0, kPi / 2)) < 1e-15);
  // y0(pi) = -cos(pi)/pi = 1/pi
  CHECK(bessel_half_y(0, kPi) ==
        doctest::Approx(std::sqrt(2.0 * kPi / kPi) / kPi).epsilon(1e-14));
  CHECK_THROWS_AS(bessel_half_j(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(bessel_half_y(1, -1.0), std::domain_error);
}

TEST_CASE("j1 small-argument leading order") {
  for (double x : {1e-3, 1e-2}) {
    const double expected = std::sqrt(2.0 * x / kPi) * x / 3.0;
    CHECK(bessel_half_j(1, x) == doctest::Approx(expected).epsilon(1e-4));
  }
}

TEST_CASE("spherical Bessel cross-Wronskian j_p y_{p-1} - j_{p-1} y_p = 1/x^2") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(0.5, 20.0);
  for (int p = 1; p <= 3; ++p) {
    for (int trial = 0; trial < 200; ++trial) {
      const double x = dist(rng);
      const double w = sph_bessel_j(p, x) * sph_bessel_y(p - 1, x) -
                       sph_bessel_j(p - 1, x) * sph_bessel_y(p, x);
      CHECK(std::abs(w - 1.0 / (x * x)) * x * x < 1e-12);
    }
  }
}

TEST_CASE("seed_bessel_solution p = 0 closed forms") {
  const double k = 1.3, r = 2.1, th = 1.0;
  const double amp = std::sqrt(2.0 / (kPi * k));
  CHECK(seed_bessel_solution(BesselKind::first, 0, k, r, th).real() ==
        doctest::Approx(amp * std::sin(k * r) / r).epsilon(1e-13));
  CHECK(seed_bessel_solution(BesselKind::second, 0, k, r, th).real() ==
        doctest::Approx(-amp * std::cos(k * r) / r).epsilon(1e-13));
}

TEST_CASE("Bessel-Legendre seeds solve the equation with u = -k^2") {
  const double k = 1.0;
  for (int p = 0; p <= 2; ++p) {
    for (const BesselKind kind : {BesselKind::first, BesselKind::second}) {
      double prev = 0.0;
      for (int lvl = 0; lvl < 2; ++lvl) {
        const int n = lvl == 0 ? 65 : 129;
        const AnnularGrid g = make_grid(1.0, 3.0, 0.3, kPi - 0.3, n, n);
        const ScalarField Y = sample(
            [&](double r, double th) {
              return seed_bessel_solution(kind, p, k, r, th);
            },
            g);
        const ScalarField u = sample(
            [k](double, double) { return cplx(-k * k, 0.0); }, g);
        const double res = max_abs(apply_schrodinger(Y, u)) / max_abs(Y);
        CHECK(res < (lvl == 0 ? 5e-5 : 5e-6));
        if (lvl == 1) CHECK(prev / res > 12.0);
        prev = res;
      }
    }
  }
}
