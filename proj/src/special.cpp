#include "moutard/special.hpp"

#include <cmath>
#include <stdexcept>

namespace moutard {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double legendre_p(int p, double x) {
  if (p < 0) throw std::domain_error("legendre_p: negative degree");
  if (std::abs(x) > 1.0)
    throw std::domain_error("legendre_p: |x| > 1");
  if (p == 0) return 1.0;
  double pm1 = 1.0;  // P_0
  double pn = x;     // P_1
  for (int n = 1; n < p; ++n) {
    const double pnext = ((2 * n + 1) * x * pn - n * pm1) / (n + 1);
    pm1 = pn;
    pn = pnext;
  }
  return pn;
}

double sph_bessel_j(int p, double x) {
  if (p < 0) throw std::domain_error("sph_bessel_j: negative order");
  if (!(x > 0.0)) throw std::domain_error("sph_bessel_j: x <= 0");
  const double j0 = std::sin(x) / x;
  if (p == 0) return j0;
  const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  if (p == 1) return j1;
  // upward recurrence; adequate for the small orders used here
  double fm1 = j0, fn = j1;
  for (int n = 1; n < p; ++n) {
    const double fnext = (2 * n + 1) / x * fn - fm1;
    fm1 = fn;
    fn = fnext;
  }
  return fn;
}

double sph_bessel_y(int p, double x) {
  if (p < 0) throw std::domain_error("sph_bessel_y: negative order");
  if (!(x > 0.0)) throw std::domain_error("sph_bessel_y: x <= 0");
  const double y0 = -std::cos(x) / x;
  if (p == 0) return y0;
  const double y1 = -std::cos(x) / (x * x) - std::sin(x) / x;
  if (p == 1) return y1;
  double fm1 = y0, fn = y1;
  for (int n = 1; n < p; ++n) {
    const double fnext = (2 * n + 1) / x * fn - fm1;
    fm1 = fn;
    fn = fnext;
  }
  return fn;
}

double bessel_half_j(int p, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_half_j: x <= 0");
  return std::sqrt(2.0 * x / kPi) * sph_bessel_j(p, x);
}

double bessel_half_y(int p, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_half_y: x <= 0");
  return std::sqrt(2.0 * x / kPi) * sph_bessel_y(p, x);
}

std::complex<double> seed_bessel_solution(BesselKind kind, int p, double k,
                                          double r, double theta) {
  if (!(r > 0.0) || !(theta > 0.0) || !(theta < kPi) || !(k > 0.0))
    throw std::domain_error("seed_bessel_solution: out of domain");
  const double radial = (kind == BesselKind::first)
                            ? bessel_half_j(p, k * r)
                            : bessel_half_y(p, k * r);
  return radial * legendre_p(p, std::cos(theta)) / std::sqrt(r);
}

}  // namespace moutard
