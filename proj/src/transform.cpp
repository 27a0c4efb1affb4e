#include "moutard/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moutard {

namespace {

void require_same_grid(const ScalarField& a, const ScalarField& b,
                       const char* op) {
  if (!a.grid().same_layout(b.grid()))
    throw std::invalid_argument(std::string(op) + ": grid mismatch");
}

}  // namespace

ScalarField single_potential(const ScalarField& u, const ScalarField& Y0,
                             double eps_rel) {
  require_same_grid(u, Y0, "single_potential");
  const auto& g = u.grid();

  const ScalarField a = divide_masked(differentiate(Y0, Axis::r, 1), Y0, eps_rel);
  const ScalarField b = divide_masked(differentiate(Y0, Axis::r, 2), Y0, eps_rel);
  const ScalarField c =
      divide_masked(differentiate(Y0, Axis::theta, 1), Y0, eps_rel);
  const ScalarField d =
      divide_masked(differentiate(Y0, Axis::theta, 2), Y0, eps_rel);

  ScalarField out(g);
  out.set_margin(std::max(a.margin(), u.margin()));
  const int m = out.margin();
  for (int i = m; i < g.n_r - m; ++i) {
    const double r = g.r(i);
    for (int j = m; j < g.n_theta - m; ++j) {
      if (a.excluded(i, j) || b.excluded(i, j) || c.excluded(i, j) ||
          d.excluded(i, j) || u.excluded(i, j)) {
        out.exclude(i, j);
        continue;
      }
      const double s = std::sin(g.theta(j));
      const cplx ar = a.at(i, j), brr = b.at(i, j);
      const cplx at = c.at(i, j), btt = d.at(i, j);
      // d2r ln(sin Y0^2) = 2(Y0_rr/Y0 - (Y0_r/Y0)^2); the sin factor is
      // r-independent. d2t ln(sin Y0^2) = -1/sin^2 + 2(Y0_tt/Y0 - (Y0_t/Y0)^2).
      out.at(i, j) = u.at(i, j) - 2.0 * (brr - ar * ar) - 2.0 * ar / r -
                     (-1.0 / (s * s) + 2.0 * (btt - at * at)) / (r * r);
    }
  }
  return out;
}

OneForm solution_one_form(const ScalarField& Y, const ScalarField& Y0,
                          double eps_rel) {
  require_same_grid(Y, Y0, "solution_one_form");
  const auto& g = Y.grid();

  const ScalarField ratio = divide_masked(Y, Y0, eps_rel);
  const ScalarField ratio_r = differentiate(ratio, Axis::r, 1);
  const ScalarField ratio_t = differentiate(ratio, Axis::theta, 1);

  OneForm w{ScalarField(g), ScalarField(g)};
  w.omega_r.set_margin(ratio_r.margin());
  w.omega_theta.set_margin(ratio_r.margin());
  const int m = ratio_r.margin();
  for (int i = m; i < g.n_r - m; ++i) {
    const double r = g.r(i);
    for (int j = m; j < g.n_theta - m; ++j) {
      const double s = std::sin(g.theta(j));
      const cplx y0 = Y0.at(i, j);
      if (ratio_r.excluded(i, j) || ratio_t.excluded(i, j)) {
        w.omega_r.exclude(i, j);
        w.omega_theta.exclude(i, j);
        continue;
      }
      w.omega_r.at(i, j) = -s * y0 * y0 * ratio_t.at(i, j);
      w.omega_theta.at(i, j) = s * r * r * y0 * y0 * ratio_r.at(i, j);
    }
  }
  return w;
}

ScalarField transform_solution(const ScalarField& Y, const ScalarField& Y0,
                               const PathIntegrationPlan& plan,
                               double eps_rel) {
  const auto& g = Y.grid();
  const ScalarField V = integrate_one_form(solution_one_form(Y, Y0, eps_rel), plan);

  ScalarField denom(g);
  for (int i = 0; i < g.n_r; ++i) {
    const double r = g.r(i);
    for (int j = 0; j < g.n_theta; ++j)
      denom.at(i, j) = Y0.at(i, j) * std::sin(g.theta(j)) * r;
  }
  return divide_masked(V, denom, eps_rel);
}

OneForm pair_one_form(const ScalarField& Y1, const ScalarField& Y2) {
  require_same_grid(Y1, Y2, "pair_one_form");
  const auto& g = Y1.grid();

  const ScalarField Y1r = differentiate(Y1, Axis::r, 1);
  const ScalarField Y2r = differentiate(Y2, Axis::r, 1);
  const ScalarField Y1t = differentiate(Y1, Axis::theta, 1);
  const ScalarField Y2t = differentiate(Y2, Axis::theta, 1);

  OneForm w{ScalarField(g), ScalarField(g)};
  const int m = Y1r.margin();
  w.omega_r.set_margin(m);
  w.omega_theta.set_margin(m);
  for (int i = m; i < g.n_r - m; ++i) {
    const double r = g.r(i);
    for (int j = m; j < g.n_theta - m; ++j) {
      if (Y1r.excluded(i, j) || Y2r.excluded(i, j) || Y1t.excluded(i, j) ||
          Y2t.excluded(i, j)) {
        w.omega_r.exclude(i, j);
        w.omega_theta.exclude(i, j);
        continue;
      }
      const double s = std::sin(g.theta(j));
      const cplx br = Y2r.at(i, j) * Y1.at(i, j) - Y1r.at(i, j) * Y2.at(i, j);
      const cplx bt = Y2t.at(i, j) * Y1.at(i, j) - Y1t.at(i, j) * Y2.at(i, j);
      w.omega_theta.at(i, j) = s * r * r * br;
      w.omega_r.at(i, j) = -s * bt;
    }
  }
  return w;
}

ScalarField twofold_potential(const ScalarField& u, const ScalarField& F,
                              double eps_rel) {
  require_same_grid(u, F, "twofold_potential");
  const auto& g = u.grid();

  const ScalarField ar = divide_masked(differentiate(F, Axis::r, 1), F, eps_rel);
  const ScalarField arr = divide_masked(differentiate(F, Axis::r, 2), F, eps_rel);
  const ScalarField at =
      divide_masked(differentiate(F, Axis::theta, 1), F, eps_rel);
  const ScalarField att =
      divide_masked(differentiate(F, Axis::theta, 2), F, eps_rel);

  ScalarField out(g);
  out.set_margin(std::max(ar.margin(), u.margin()));
  const int m = out.margin();
  for (int i = m; i < g.n_r - m; ++i) {
    const double r = g.r(i);
    for (int j = m; j < g.n_theta - m; ++j) {
      if (ar.excluded(i, j) || arr.excluded(i, j) || at.excluded(i, j) ||
          att.excluded(i, j) || u.excluded(i, j)) {
        out.exclude(i, j);
        continue;
      }
      const cplx lr = ar.at(i, j);
      const cplx lt = at.at(i, j);
      // d2 ln F = F''/F - (F'/F)^2
      const cplx d2r = arr.at(i, j) - lr * lr;
      const cplx d2t = att.at(i, j) - lt * lt;
      out.at(i, j) =
          u.at(i, j) - 2.0 * d2r - 2.0 * lr / r - 2.0 * d2t / (r * r);
    }
  }
  return out;
}

std::pair<ScalarField, ScalarField> twofold_solutions(const ScalarField& Y1,
                                                      const ScalarField& Y2,
                                                      const ScalarField& F,
                                                      double eps_rel) {
  return {divide_masked(Y1, F, eps_rel), divide_masked(Y2, F, eps_rel)};
}

}  // namespace moutard
