#pragma once

#include "moutard/field.hpp"

namespace moutard {

enum class Axis { r, theta };

// 4th-order central finite differences, order 1 or 2, in the given axis.
// Output margin grows by 2; points whose stencil touches an excluded point
// are excluded in the output.
ScalarField differentiate(const ScalarField& f, Axis axis, int order);

// L[Y] = Y_rr + (2/r) Y_r + (1/r^2)(Y_tt + cot(theta) Y_t) - u Y,
// the expanded form of the axially symmetric Schrodinger operator.
ScalarField apply_schrodinger(const ScalarField& Y, const ScalarField& u);

}  // namespace moutard
