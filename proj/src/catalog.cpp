#include "moutard/catalog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "moutard/special.hpp"

namespace moutard {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

// F_p - C as polynomials in x = cos(theta), in the eq13-Fp normalization
double fp_poly(int p, double x) {
  switch (p) {
    case 0: return x;
    case 1: return x * x * x;
    case 2: return (9.0 * x * x * x * x - 10.0 * x * x + 5.0) * x;
    default:
      throw std::invalid_argument("F_p closed form only known for p <= 2");
  }
}

double fp_poly_d1(int p, double x) {
  switch (p) {
    case 0: return 1.0;
    case 1: return 3.0 * x * x;
    case 2: return 45.0 * x * x * x * x - 30.0 * x * x + 5.0;
    default: throw std::invalid_argument("F_p closed form only known for p <= 2");
  }
}

double fp_poly_d2(int p, double x) {
  switch (p) {
    case 0: return 0.0;
    case 1: return 6.0 * x;
    case 2: return 180.0 * x * x * x - 60.0 * x;
    default: throw std::invalid_argument("F_p closed form only known for p <= 2");
  }
}

// max |F_p - C| over theta; the nonsingularity constraint is |C| > this
double fp_poly_max(int p) {
  switch (p) {
    case 0: return 1.0;
    case 1: return 1.0;
    case 2: return 4.0;  // 9 - 10 + 5 at x = 1; monotone on [-1, 1]
    default: throw std::invalid_argument("F_p closed form only known for p <= 2");
  }
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_fp_constraint(const FamilySpec& s) {
  require(s.p >= 0 && s.p <= 2, s.family + ": p must be 0, 1 or 2");
  std::ostringstream os;
  os << s.family << ": need |C| > " << fp_poly_max(s.p)
     << " to keep F_p nonzero on (0, pi), got C=" << s.C;
  require(std::abs(s.C) > fp_poly_max(s.p), os.str());
}

double simpson(const std::function<double(double)>& f, double a, double b) {
  return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = simpson(f, a, m);
  const double right = simpson(f, m, b);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, right, 0.5 * tol, depth - 1);
}

}  // namespace

std::vector<std::string> catalog_families() {
  return {"free",       "eq5-single",  "eq9-planewave", "eq10-solution",
          "eq13-Fp",    "eq14-calogero", "eq15-p0",     "eq16-p1",
          "eq17-p2",    "eq18-sol0",   "eq19-sol1",     "eq20-sol2",
          "seeds-planewave", "seeds-bessel", "trivial-tilde"};
}

void FamilySpec::validate() const {
  require(k > 0.0, family + ": need k > 0");
  const auto& f = family;
  bool known = false;
  for (const auto& name : catalog_families()) known = known || name == f;
  require(known, "unknown family '" + f + "'");
  if (f == "eq9-planewave" || f == "eq10-solution")
    require(C > 0.0, f + ": need C > 0 (r^2 sin^2 + C must not vanish)");
  if (f == "eq13-Fp") require(p >= 0, f + ": need p >= 0");
  if (f == "eq14-calogero") check_fp_constraint(*this);
  if (f == "eq15-p0" || f == "eq18-sol0") {
    FamilySpec s = *this;
    s.p = 0;
    check_fp_constraint(s);
  }
  if (f == "eq16-p1" || f == "eq19-sol1") {
    FamilySpec s = *this;
    s.p = 1;
    check_fp_constraint(s);
  }
  if (f == "eq17-p2" || f == "eq20-sol2") {
    FamilySpec s = *this;
    s.p = 2;
    check_fp_constraint(s);
  }
  if (f == "seeds-bessel") require(p >= 0, f + ": need p >= 0");
}

ClosedForm potential(const FamilySpec& spec) {
  spec.validate();
  const double k = spec.k, C = spec.C;
  const std::string& f = spec.family;

  if (f == "free")
    return {[k](double, double) { return cplx(-k * k, 0.0); }, ""};

  if (f == "eq5-single") {
    return {[k](double r, double th) {
              const double s = std::sin(k * r * std::cos(th));
              const double st = std::sin(th);
              return cplx(-k * k + 2.0 * k * k / (s * s) +
                              1.0 / (r * r * st * st),
                          0.0);
            },
            "sin(k r cos(theta)) = 0"};
  }
  if (f == "eq9-planewave") {
    return {[k, C](double r, double th) {
              const double g = r * r * std::sin(th) * std::sin(th);
              return cplx(-k * k + 4.0 * (g - C) / ((g + C) * (g + C)), 0.0);
            },
            ""};
  }
  if (f == "eq14-calogero") {
    const int p = spec.p;
    return {[k, C, p](double r, double th) {
              const double x = std::cos(th);
              const double st = std::sin(th);
              const double F = fp_poly(p, x) + C;
              const double Ft = -st * fp_poly_d1(p, x);
              const double Ftt = -x * fp_poly_d1(p, x) + st * st * fp_poly_d2(p, x);
              const double d2lnF = Ftt / F - (Ft / F) * (Ft / F);
              return cplx(-k * k - 2.0 * d2lnF / (r * r), 0.0);
            },
            ""};
  }
  if (f == "eq15-p0") {
    return {[k, C](double r, double th) {
              const double x = std::cos(th);
              return cplx(-k * k + 2.0 * (x * C + 1.0) /
                                       ((x + C) * (x + C) * r * r),
                          0.0);
            },
            ""};
  }
  if (f == "eq16-p1") {
    return {[k, C](double r, double th) {
              const double x = std::cos(th);
              const double x3 = x * x * x;
              return cplx(-k * k + 6.0 * x * ((3.0 * x * x - 2.0) * C + x3) /
                                       ((x3 + C) * (x3 + C) * r * r),
                          0.0);
            },
            ""};
  }
  if (f == "eq17-p2") {
    return {[k, C](double r, double th) {
              const double x = std::cos(th);
              const double x2 = x * x, x4 = x2 * x2;
              const double den = (9.0 * x4 - 10.0 * x2 + 5.0) * x + C;
              const double N = (45.0 * x4 - 54.0 * x2 + 13.0) * x * C +
                               (9.0 * x4 + 72.0 * x2 - 70.0) * x4 + 5.0;
              return cplx(-k * k + 10.0 * N / (den * den * r * r), 0.0);
            },
            ""};
  }
  throw std::invalid_argument("'" + f + "' is not a potential family");
}

ClosedForm solution(const FamilySpec& spec) {
  spec.validate();
  const double k = spec.k, C = spec.C;
  const std::string& f = spec.family;

  if (f == "eq10-solution") {
    return {[k, C](double r, double th) {
              const double st = std::sin(th);
              return std::exp(kI * k * r * std::cos(th)) /
                     (r * r * st * st + C);
            },
            ""};
  }
  if (f == "eq18-sol0") {
    return {[k, C](double r, double th) {
              const double x = std::cos(th);
              return std::exp(kI * k * r * x) *
                     (1.0 + kI / (k * r * (x + C)));
            },
            ""};
  }
  if (f == "eq19-sol1") {
    return {[k, C](double r, double th) {
              const double x = std::cos(th);
              const cplx corr = 3.0 * x * (kI * k * r * x - 1.0) /
                                (k * k * r * r * (x * x * x + C));
              return std::exp(kI * k * r * x) * (1.0 + corr);
            },
            ""};
  }
  if (f == "eq20-sol2") {
    return {[k, C](double r, double th) {
              const double x = std::cos(th);
              const double x2 = x * x, x4 = x2 * x2;
              const double den =
                  r * r * r * k * k * k * ((9.0 * x4 - 10.0 * x2 + 5.0) * x + C);
              const cplx M = 5.0 * kI * (3.0 * x2 - 1.0) *
                             ((3.0 * x2 - 1.0) * r * r * k * k +
                              6.0 * kI * k * r * x - 6.0);
              return std::exp(kI * k * r * x) * (1.0 + M / den);
            },
            ""};
  }
  if (f == "trivial-tilde") {
    return {[k](double r, double th) {
              return cplx(1.0, 0.0) /
                     (std::sin(k * r * std::cos(th)) * std::sin(th) * r);
            },
            "sin(k r cos(theta)) = 0"};
  }
  throw std::invalid_argument("'" + f + "' is not a solution family");
}

ClosedForm f_closed(const FamilySpec& spec) {
  spec.validate();
  const double C = spec.C;
  if (spec.family == "eq9-planewave") {
    return {[C](double r, double th) {
              const double st = std::sin(th);
              return cplx(r * r * st * st + C, 0.0);
            },
            ""};
  }
  if (spec.family == "eq13-Fp") {
    const int p = spec.p;
    if (p > 2)
      throw std::invalid_argument(
          "f_closed: no closed form for p > 2, use f_quadrature");
    return {[p, C](double, double th) {
              return cplx(fp_poly(p, std::cos(th)) + C, 0.0);
            },
            ""};
  }
  throw std::invalid_argument("'" + spec.family + "' has no closed-form F");
}

double f_quadrature(int p, double theta, double C) {
  if (p < 0) throw std::invalid_argument("f_quadrature: p < 0");
  const double x = std::cos(theta);
  const auto integrand = [p](double t) {
    const double v = legendre_p(p, t);
    return v * v;
  };
  if (x == 0.0) return C;
  const double whole = simpson(integrand, 0.0, x);
  return adaptive_simpson(integrand, 0.0, x, whole, 1e-13, 40) + C;
}

std::pair<ClosedForm, ClosedForm> seeds(const FamilySpec& spec) {
  spec.validate();
  const double k = spec.k;
  if (spec.family == "seeds-planewave") {
    return {{[k](double r, double th) {
               return cplx(std::sin(k * r * std::cos(th)), 0.0);
             },
             ""},
            {[k](double r, double th) {
               return cplx(std::cos(k * r * std::cos(th)), 0.0);
             },
             ""}};
  }
  if (spec.family == "seeds-bessel") {
    const int p = spec.p;
    return {{[k, p](double r, double th) {
               return seed_bessel_solution(BesselKind::first, p, k, r, th);
             },
             ""},
            {[k, p](double r, double th) {
               return seed_bessel_solution(BesselKind::second, p, k, r, th);
             },
             ""}};
  }
  throw std::invalid_argument("'" + spec.family + "' is not a seed family");
}

}  // namespace moutard
