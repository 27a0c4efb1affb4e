#pragma once

#include <complex>

namespace moutard {

// Legendre polynomial P_p(x) on [-1, 1] via the Bonnet three-term
// recurrence. Throws std::domain_error for |x| > 1.
double legendre_p(int p, double x);

// Spherical Bessel functions j_p, y_p from the elementary closed forms
// j0 = sin x / x, y0 = -cos x / x and the standard recurrence.
double sph_bessel_j(int p, double x);
double sph_bessel_y(int p, double x);

// Half-integer Bessel functions J_{p+1/2}(x) = sqrt(2x/pi) j_p(x) and the
// Y counterpart. Throws std::domain_error for x <= 0.
double bessel_half_j(int p, double x);
double bessel_half_y(int p, double x);

enum class BesselKind { first, second };

// Seed solution J_{p+1/2}(kr) P_p(cos theta) / sqrt(r) (or the Y variant),
// a solution of the axisymmetric equation with u = -k^2.
std::complex<double> seed_bessel_solution(BesselKind kind, int p, double k,
                                          double r, double theta);

}  // namespace moutard
