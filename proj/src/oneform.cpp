#include "moutard/oneform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace moutard {

namespace {

// Prefix integrals P[t] = integral from node lo to node t along one line.
// 4th-order composite rule (one-sided 4-point formulas at the ends),
// or plain trapezoid.
struct LinePrefix {
  std::vector<cplx> prefix;   // indexed by node - lo
  std::vector<int> bad_count; // running count of excluded nodes
  int lo;

  cplx segment(int a, int b) const {  // signed integral a -> b
    return prefix[b - lo] - prefix[a - lo];
  }
  bool clean(int a, int b) const {  // no excluded node in [min,max]
    const int m0 = std::min(a, b) - lo, m1 = std::max(a, b) - lo;
    const int before = (m0 == 0) ? 0 : bad_count[m0 - 1];
    return bad_count[m1] - before == 0;
  }
};

LinePrefix line_prefix(const std::function<cplx(int)>& f,
                       const std::function<bool(int)>& excluded, int lo,
                       int hi, double h, Quadrature quad) {
  LinePrefix out;
  out.lo = lo;
  const int n = hi - lo + 1;
  out.prefix.assign(n, cplx(0.0, 0.0));
  out.bad_count.assign(n, 0);
  std::vector<cplx> v(n);
  for (int t = 0; t < n; ++t) {
    v[t] = f(lo + t);
    out.bad_count[t] = (t ? out.bad_count[t - 1] : 0) + (excluded(lo + t) ? 1 : 0);
  }
  for (int t = 0; t < n - 1; ++t) {
    cplx d;
    if (quad == Quadrature::trapezoid || n < 4) {
      d = 0.5 * h * (v[t] + v[t + 1]);
    } else if (t == 0) {
      d = h / 24.0 * (9.0 * v[0] + 19.0 * v[1] - 5.0 * v[2] + v[3]);
    } else if (t == n - 2) {
      d = h / 24.0 *
          (v[n - 4] - 5.0 * v[n - 3] + 19.0 * v[n - 2] + 9.0 * v[n - 1]);
    } else {
      d = h / 24.0 *
          (-v[t - 1] + 13.0 * v[t] + 13.0 * v[t + 1] - v[t + 2]);
    }
    out.prefix[t + 1] = out.prefix[t] + d;
  }
  return out;
}

}  // namespace

double exactness_defect_rel(const OneForm& w) {
  if (!w.omega_r.grid().same_layout(w.omega_theta.grid()))
    throw std::invalid_argument("one-form: component grid mismatch");
  const ScalarField dtr = differentiate(w.omega_r, Axis::theta, 1);
  const ScalarField drt = differentiate(w.omega_theta, Axis::r, 1);
  const double defect = max_abs(dtr - drt);
  const double scale =
      std::max(max_abs(w.omega_r), max_abs(w.omega_theta));
  return scale > 0.0 ? defect / scale : defect;
}

PathIntegral integrate_one_form_report(const OneForm& w,
                                       const PathIntegrationPlan& plan) {
  if (!w.omega_r.grid().same_layout(w.omega_theta.grid()))
    throw std::invalid_argument("one-form: component grid mismatch");
  const AnnularGrid& g = w.grid();
  const int m = w.margin();
  const int ilo = m, ihi = g.n_r - 1 - m;
  const int jlo = m, jhi = g.n_theta - 1 - m;
  const int i0 = plan.i0 >= 0 ? plan.i0 : (ilo + ihi) / 2;
  const int j0 = plan.j0 >= 0 ? plan.j0 : (jlo + jhi) / 2;
  if (i0 < ilo || i0 > ihi || j0 < jlo || j0 > jhi)
    throw std::invalid_argument("integrate_one_form: anchor outside interior");

  const auto wr = [&](int i, int j) { return w.omega_r.at(i, j); };
  const auto wt = [&](int i, int j) { return w.omega_theta.at(i, j); };
  const auto wr_bad = [&](int i, int j) { return w.omega_r.excluded(i, j); };
  const auto wt_bad = [&](int i, int j) {
    return w.omega_theta.excluded(i, j);
  };

  // r-first: along row j0 in r, then along theta in each column
  const LinePrefix row0 = line_prefix([&](int i) { return wr(i, j0); },
                                      [&](int i) { return wr_bad(i, j0); },
                                      ilo, ihi, g.h_r, plan.quadrature);
  std::vector<LinePrefix> cols(ihi - ilo + 1);
  for (int i = ilo; i <= ihi; ++i)
    cols[i - ilo] = line_prefix([&](int j) { return wt(i, j); },
                                [&](int j) { return wt_bad(i, j); }, jlo, jhi,
                                g.h_theta, plan.quadrature);

  // theta-first: along column i0 in theta, then along r in each row
  const LinePrefix col0 = line_prefix([&](int j) { return wt(i0, j); },
                                      [&](int j) { return wt_bad(i0, j); },
                                      jlo, jhi, g.h_theta, plan.quadrature);
  std::vector<LinePrefix> rows(jhi - jlo + 1);
  for (int j = jlo; j <= jhi; ++j)
    rows[j - jlo] = line_prefix([&](int i) { return wr(i, j); },
                                [&](int i) { return wr_bad(i, j); }, ilo, ihi,
                                g.h_r, plan.quadrature);

  ScalarField V(g);
  V.set_margin(m);
  double defect = 0.0, vmax = 0.0;
  for (int i = ilo; i <= ihi; ++i) {
    for (int j = jlo; j <= jhi; ++j) {
      const bool ok1 = row0.clean(i0, i) && cols[i - ilo].clean(j0, j);
      const bool ok2 = col0.clean(j0, j) && rows[j - jlo].clean(i0, i);
      if (!ok1) {
        V.exclude(i, j);
        continue;
      }
      const cplx v1 = plan.anchor_value + row0.segment(i0, i) +
                      cols[i - ilo].segment(j0, j);
      V.at(i, j) = v1;
      vmax = std::max(vmax, std::abs(v1));
      if (ok2) {
        const cplx v2 = plan.anchor_value + col0.segment(j0, j) +
                        rows[j - jlo].segment(i0, i);
        defect = std::max(defect, std::abs(v1 - v2));
      }
    }
  }

  PathIntegral out{std::move(V), 0.0, exactness_defect_rel(w)};
  out.path_defect_rel = vmax > 0.0 ? defect / vmax : defect;
  return out;
}

ScalarField integrate_one_form(const OneForm& w,
                               const PathIntegrationPlan& plan) {
  PathIntegral pi = integrate_one_form_report(w, plan);
  if (pi.exactness_rel > plan.exactness_tol) {
    std::ostringstream os;
    os << "integrate_one_form: mixed-partial defect " << pi.exactness_rel
       << " exceeds tolerance " << plan.exactness_tol
       << " (generating fields likely do not solve the equation)";
    throw inexact_form_error(os.str());
  }
  if (pi.path_defect_rel > plan.path_tol) {
    std::ostringstream os;
    os << "integrate_one_form: path orderings disagree by "
       << pi.path_defect_rel << " relative, tolerance " << plan.path_tol;
    throw inexact_form_error(os.str());
  }
  return std::move(pi.field);
}

}  // namespace moutard
