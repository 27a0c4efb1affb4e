#pragma once

#include <utility>

#include "moutard/oneform.hpp"

namespace moutard {

// Single Moutard transform of the potential built on a seed solution Y0:
//   u~ = u - d2r ln(sin(theta) Y0^2) - (1/r) dr ln(...) - (1/r^2) d2t ln(...)
// All logarithmic derivatives are evaluated as derivative ratios, so no
// complex logarithm branch is taken. Points with |Y0| < eps ||Y0||_inf
// are excluded from the output.
ScalarField single_potential(const ScalarField& u, const ScalarField& Y0,
                             double eps_rel = 1e-8);

// Exact 1-form of V = Y~ Y0 sin(theta) r:
//   omega_r     = -sin(theta) Y0^2 d/dtheta (Y/Y0)
//   omega_theta =  sin(theta) r^2 Y0^2 d/dr (Y/Y0)
OneForm solution_one_form(const ScalarField& Y, const ScalarField& Y0,
                          double eps_rel = 1e-8);

// Y~ = V / (Y0 sin(theta) r) with V the path integral of the form above.
// The anchor value adds the trivial c / (Y0 sin(theta) r) solution.
ScalarField transform_solution(const ScalarField& Y, const ScalarField& Y0,
                               const PathIntegrationPlan& plan,
                               double eps_rel = 1e-8);

// The 1-form dF of the twofold transform:
//   dF/dtheta = sin(theta) r^2 [(dr Y2) Y1 - (dr Y1) Y2]
//   dF/dr     = -sin(theta)    [(dt Y2) Y1 - (dt Y1) Y2]
OneForm pair_one_form(const ScalarField& Y1, const ScalarField& Y2);

// Twofold potential:
//   u~~ = u - 2 d2r ln F - (2/r) dr ln F - (2/r^2) d2t ln F
// via derivative ratios; invariant under F -> lambda F.
ScalarField twofold_potential(const ScalarField& u, const ScalarField& F,
                              double eps_rel = 1e-8);

// Simple solutions with the twofold potential: (Y1/F, Y2/F).
std::pair<ScalarField, ScalarField> twofold_solutions(const ScalarField& Y1,
                                                      const ScalarField& Y2,
                                                      const ScalarField& F,
                                                      double eps_rel = 1e-8);

}  // namespace moutard
