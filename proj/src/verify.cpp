#include "moutard/verify.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "moutard/stencil.hpp"
#include "moutard/transform.hpp"

namespace moutard {

AnnularGrid GridSpec::grid() const {
  return make_grid(r_min, r_max, theta_min, theta_max, n_r, n_theta);
}

GridSpec GridSpec::refined() const {
  GridSpec s = *this;
  s.n_r = 2 * n_r - 1;
  s.n_theta = 2 * n_theta - 1;
  return s;
}

InteriorMask physical_band(const AnnularGrid& g, double band_r,
                           double band_theta, int margin) {
  InteriorMask mask;
  mask.margin = margin;
  mask.exclude = [g, band_r, band_theta](int i, int j) {
    const double r = g.r(i), t = g.theta(j);
    return r - g.r_min < band_r || g.r_max - r < band_r ||
           t - g.theta_min < band_theta || g.theta_max - t < band_theta;
  };
  return mask;
}

namespace {

// Points whose derivative stencils reach within `frac * ||w||_inf` of a
// zero of the witness are dropped along with the near-zero points
// themselves: the finite differences there see the singular region.
std::shared_ptr<std::vector<char>> dilated_small_set(const ScalarField& w,
                                                     double frac, int reach) {
  const auto& g = w.grid();
  const double cutoff = frac * max_abs(w, {2, nullptr});
  std::vector<char> small(g.size(), 0);
  for (int i = 0; i < g.n_r; ++i)
    for (int j = 0; j < g.n_theta; ++j)
      small[g.idx(i, j)] = std::abs(w.at(i, j)) < cutoff;
  auto out = std::make_shared<std::vector<char>>(g.size(), 0);
  for (int i = 0; i < g.n_r; ++i) {
    for (int j = 0; j < g.n_theta; ++j) {
      char hit = 0;
      for (int di = -reach; di <= reach && !hit; ++di) {
        if (i + di < 0 || i + di >= g.n_r) continue;
        for (int dj = -reach; dj <= reach; ++dj) {
          if (j + dj < 0 || j + dj >= g.n_theta) continue;
          if (small[g.idx(i + di, j + dj)]) {
            hit = 1;
            break;
          }
        }
      }
      (*out)[g.idx(i, j)] = hit;
    }
  }
  return out;
}

InteriorMask witness_mask(const ScalarField* w, double frac, int margin,
                          const InteriorMask& band, int reach) {
  InteriorMask mask = band;
  mask.margin = margin;
  if (w) {
    auto drop = dilated_small_set(*w, frac, reach);
    const AnnularGrid g = w->grid();
    auto outer = band.exclude;
    mask.exclude = [drop, g, outer](int i, int j) {
      if ((*drop)[g.idx(i, j)]) return true;
      return outer && outer(i, j);
    };
  }
  return mask;
}

}  // namespace

ResidualCase verify_pair(const std::string& name, const ClosedForm& sol,
                         const ClosedForm& pot, const GridSpec& base,
                         int n_levels, double residual_tol, double min_order,
                         const ClosedForm* witness, double witness_frac) {
  ResidualCase rc;
  rc.name = name;
  rc.residual_tol = residual_tol;
  rc.min_order = min_order;

  // Norms on every level are taken over the base grid's trusted interior
  // (the index margin alone would creep toward the boundary as h halves).
  const AnnularGrid g0 = base.grid();

  GridSpec spec = base;
  for (int level = 0; level < n_levels; ++level) {
    const AnnularGrid g = spec.grid();
    const ScalarField Y = sample(sol.eval, g);
    const ScalarField u = sample(pot.eval, g);
    const ScalarField res = apply_schrodinger(Y, u);

    const InteriorMask band = physical_band(g, 1.75 * g0.h_r,
                                            1.75 * g0.h_theta, res.margin());
    std::unique_ptr<ScalarField> wfield;
    if (witness) wfield = std::make_unique<ScalarField>(sample(witness->eval, g));
    const int reach = 2 * (1 << level);  // keep the dilation fixed physically
    const InteriorMask mask = witness_mask(wfield.get(), witness_frac,
                                           res.margin(), band, reach);
    const Norms rn = norms(res, mask);
    const double yinf = norms(Y, mask).linf;
    rc.levels.push_back({g.n_r, g.n_theta, rn.linf / yinf, rn.l2 / yinf});
    spec = spec.refined();
  }

  for (std::size_t l = 0; l + 1 < rc.levels.size(); ++l)
    rc.orders.push_back(
        std::log2(rc.levels[l].rel_linf / rc.levels[l + 1].rel_linf));

  bool ok = rc.levels.back().rel_linf <= residual_tol;
  for (double o : rc.orders) ok = ok && o >= min_order;
  rc.pass = ok;

  std::ostringstream os;
  os << "residual " << rc.levels.back().rel_linf << " (tol " << residual_tol
     << ")";
  if (!rc.orders.empty()) {
    os << ", orders";
    for (double o : rc.orders) os << " " << o;
    os << " (min " << min_order << ")";
  }
  rc.detail = os.str();
  return rc;
}

AffineFit affine_fit(const ScalarField& numeric, const ScalarField& reference,
                     const InteriorMask& mask) {
  const auto& g = numeric.grid();
  const int m = std::max({mask.margin, numeric.margin(), reference.margin()});
  cplx s_rr = 0.0, s_r = 0.0, b_r = 0.0, b_1 = 0.0;
  double n = 0.0;
  for (int i = m; i < g.n_r - m; ++i) {
    for (int j = m; j < g.n_theta - m; ++j) {
      if (numeric.excluded(i, j) || reference.excluded(i, j)) continue;
      if (mask.exclude && mask.exclude(i, j)) continue;
      const cplx R = reference.at(i, j);
      const cplx N = numeric.at(i, j);
      s_rr += std::conj(R) * R;
      s_r += R;
      b_r += std::conj(R) * N;
      b_1 += N;
      n += 1.0;
    }
  }
  if (n < 2.0) throw std::runtime_error("affine_fit: too few points");
  // [s_rr  conj(s_r); s_r  n] [alpha; beta] = [b_r; b_1]
  const cplx det = s_rr * n - std::conj(s_r) * s_r;
  AffineFit fit;
  fit.alpha = (b_r * n - std::conj(s_r) * b_1) / det;
  fit.beta = (s_rr * b_1 - s_r * b_r) / det;
  return fit;
}

TwofoldRun run_twofold(const FamilySpec& seed_spec, const AnnularGrid& g,
                       double C_target, const ClosedForm* f_reference_no_c,
                       const PathIntegrationPlan& plan) {
  const auto [cf1, cf2] = seeds(seed_spec);
  const ScalarField Y1 = sample(cf1.eval, g);
  const ScalarField Y2 = sample(cf2.eval, g);
  const OneForm w = pair_one_form(Y1, Y2);

  PathIntegrationPlan p = plan;
  p.anchor_value = cplx(0.0, 0.0);
  PathIntegral pi = integrate_one_form_report(w, p);
  if (pi.exactness_rel > p.exactness_tol)
    throw inexact_form_error("run_twofold: seeds do not generate a closed form");
  if (pi.path_defect_rel > p.path_tol)
    throw inexact_form_error("run_twofold: path orderings disagree");

  TwofoldRun out;
  out.path_defect_rel = pi.path_defect_rel;
  out.exactness_rel = pi.exactness_rel;

  ScalarField F = std::move(pi.field);
  if (f_reference_no_c) {
    const ScalarField ref = sample(f_reference_no_c->eval, g);
    const AffineFit fit = affine_fit(F, ref, {F.margin(), nullptr});
    // F ~= alpha ref + beta; shift so F = alpha (ref + C_target)
    F += fit.alpha * C_target - fit.beta;
    out.f_scale = fit.alpha;
  } else {
    F += plan.anchor_value;
  }

  FamilySpec free_spec;
  free_spec.family = "free";
  free_spec.k = seed_spec.k;
  const ScalarField u0 = sample(potential(free_spec).eval, g);

  out.u_twofold = twofold_potential(u0, F);
  auto sols = twofold_solutions(Y1, Y2, F);
  out.sol1 = std::move(sols.first);
  out.sol2 = std::move(sols.second);
  out.F = std::move(F);
  return out;
}

ScalarField run_single(const ClosedForm& Y0, double k, const AnnularGrid& g) {
  FamilySpec free_spec;
  free_spec.family = "free";
  free_spec.k = k;
  const ScalarField u0 = sample(potential(free_spec).eval, g);
  return single_potential(u0, sample(Y0.eval, g));
}

double compare_rel_linf(const ScalarField& numeric, const ClosedForm& closed,
                        const InteriorMask& mask) {
  const ScalarField ref = sample(closed.eval, numeric.grid());
  return relative_linf(numeric, ref, mask);
}

}  // namespace moutard
