#pragma once

#include <stdexcept>

#include "moutard/field.hpp"
#include "moutard/stencil.hpp"

namespace moutard {

// Components of an exact differential omega_r dr + omega_theta dtheta.
struct OneForm {
  ScalarField omega_r;
  ScalarField omega_theta;

  const AnnularGrid& grid() const { return omega_r.grid(); }
  int margin() const {
    return std::max(omega_r.margin(), omega_theta.margin());
  }
};

enum class Quadrature { trapezoid, simpson };

struct PathIntegrationPlan {
  int i0 = -1;  // anchor grid indices; -1 means domain center
  int j0 = -1;
  cplx anchor_value = cplx(0.0, 0.0);
  Quadrature quadrature = Quadrature::simpson;
  // interior Linf of the mixed-partial defect relative to the form's Linf
  double exactness_tol = 1e-3;
  // relative disagreement between the two axis-ordered paths
  double path_tol = 1e-4;
};

class inexact_form_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linf of (d/dtheta omega_r - d/dr omega_theta) over the interior,
// relative to the form's own Linf.
double exactness_defect_rel(const OneForm& w);

struct PathIntegral {
  ScalarField field;        // primary (r-first) path result
  double path_defect_rel;   // Linf(r-first - theta-first) / Linf(field)
  double exactness_rel;     // mixed-partial defect, relative
};

// Line-integrates the form from the anchor to every interior point along
// grid-aligned paths. Never throws on defects; use for negative controls.
PathIntegral integrate_one_form_report(const OneForm& w,
                                       const PathIntegrationPlan& plan);

// Same, but throws inexact_form_error when either the exactness residual
// or the path-ordering disagreement exceeds the plan tolerances.
ScalarField integrate_one_form(const OneForm& w,
                               const PathIntegrationPlan& plan);

}  // namespace moutard
