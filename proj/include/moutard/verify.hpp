#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moutard/catalog.hpp"
#include "moutard/field.hpp"
#include "moutard/oneform.hpp"

namespace moutard {

struct GridSpec {
  double r_min = 1.0;
  double r_max = 3.0;
  double theta_min = 0.3;
  double theta_max = 3.14159265358979323846 - 0.3;
  int n_r = 65;
  int n_theta = 65;

  AnnularGrid grid() const;
  GridSpec refined() const;  // halves both spacings (n -> 2n - 1)
};

struct LevelResult {
  int n_r = 0;
  int n_theta = 0;
  double rel_linf = 0.0;
  double rel_l2 = 0.0;
};

struct ResidualCase {
  std::string name;
  std::vector<LevelResult> levels;
  std::vector<double> orders;  // log2 ratio between consecutive levels
  double residual_tol = 0.0;
  double min_order = 0.0;
  bool pass = false;
  std::string detail;
};

// Mask that excludes points within a fixed physical distance of the domain
// boundary (so refinement-ladder norms are taken over one region, not over
// a band that creeps toward the boundary as h shrinks).
InteriorMask physical_band(const AnnularGrid& g, double band_r,
                           double band_theta, int margin);

// Samples (solution, potential), applies the Schrodinger operator on a
// factor-2 refinement ladder and reports relative residuals and observed
// convergence orders. Norms are taken over the base grid's interior region
// at every level. `witness` (when given) excludes points whose stencil
// neighborhood contains |witness| < witness_frac * ||witness||_inf, for
// families singular on part of the domain.
ResidualCase verify_pair(const std::string& name, const ClosedForm& sol,
                         const ClosedForm& pot, const GridSpec& base,
                         int n_levels, double residual_tol, double min_order,
                         const ClosedForm* witness = nullptr,
                         double witness_frac = 0.1);

// Least-squares fit numeric ~= alpha * reference + beta over the joint
// valid interior.
struct AffineFit {
  cplx alpha;
  cplx beta;
};
AffineFit affine_fit(const ScalarField& numeric, const ScalarField& reference,
                     const InteriorMask& mask = {});

// Full numeric twofold pipeline: seeds -> pair 1-form -> path-integrated F
// -> twofold potential and solutions. When a closed-form reference for F
// (with C = 0) is given, the integration constant is adjusted so the
// effective additive constant equals C_target in the reference scale.
struct TwofoldRun {
  ScalarField F;
  ScalarField u_twofold;
  ScalarField sol1, sol2;
  double path_defect_rel = 0.0;
  double exactness_rel = 0.0;
  cplx f_scale{1.0, 0.0};  // fitted scale of numeric F vs reference
};

TwofoldRun run_twofold(const FamilySpec& seed_spec, const AnnularGrid& g,
                       double C_target, const ClosedForm* f_reference_no_c,
                       const PathIntegrationPlan& plan = {});

// Numeric single transform with seed Y0 and u = -k^2.
ScalarField run_single(const ClosedForm& Y0, double k, const AnnularGrid& g);

// ||numeric - closed||_inf / ||closed||_inf on the masked interior.
double compare_rel_linf(const ScalarField& numeric, const ClosedForm& closed,
                        const InteriorMask& mask = {});

}  // namespace moutard
