#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace moutard {

// Identifier + parameters selecting one of the closed-form families.
struct FamilySpec {
  std::string family;
  double k = 1.0;
  double C = 0.0;
  int p = 0;

  // Throws std::invalid_argument on an unknown family or a parameter
  // choice that makes the family singular on (0, pi).
  void validate() const;
};

struct ClosedForm {
  std::function<std::complex<double>(double r, double theta)> eval;
  std::string singular_set;  // empty when nonsingular on any valid grid
};

std::vector<std::string> catalog_families();

// Potentials: eq5-single, eq9-planewave, eq14-calogero, eq15-p0, eq16-p1,
// eq17-p2. Also accepts "free" for u = -k^2.
ClosedForm potential(const FamilySpec& spec);

// Solutions: eq10-solution, eq18-sol0, eq19-sol1, eq20-sol2, trivial-tilde.
ClosedForm solution(const FamilySpec& spec);

// F in closed form: eq9-planewave -> r^2 sin^2(theta) + C;
// eq13-Fp (p <= 2) -> the explicit cos(theta) polynomials.
ClosedForm f_closed(const FamilySpec& spec);

// Eq-13 antiderivative by quadrature: integral of P_p(x)^2 dx from 0 to
// cos(theta), plus C. Agrees with f_closed up to the fixed scale 1, 1/3,
// 1/20 for p = 0, 1, 2.
double f_quadrature(int p, double theta, double C);

// Seed pairs: seeds-planewave -> (sin(kr cos t), cos(kr cos t));
// seeds-bessel -> the half-integer Bessel / Legendre pair.
std::pair<ClosedForm, ClosedForm> seeds(const FamilySpec& spec);

}  // namespace moutard
