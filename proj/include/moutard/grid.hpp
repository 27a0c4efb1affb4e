#pragma once

#include <cstddef>
#include <functional>

namespace moutard {

// Uniform tensor-product (r, theta) grid on an annular sector.
// The domain never touches r = 0 or theta in {0, pi}: the operator
// coefficients 1/r^2 and cot(theta) are singular there.
struct AnnularGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  double theta_min = 0.0;
  double theta_max = 0.0;
  int n_r = 0;
  int n_theta = 0;
  double h_r = 0.0;
  double h_theta = 0.0;

  double r(int i) const { return r_min + i * h_r; }
  double theta(int j) const { return theta_min + j * h_theta; }

  std::size_t size() const {
    return static_cast<std::size_t>(n_r) * static_cast<std::size_t>(n_theta);
  }
  // row-major, r index outer
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_theta) + j;
  }

  bool same_layout(const AnnularGrid& o) const {
    return r_min == o.r_min && r_max == o.r_max && theta_min == o.theta_min &&
           theta_max == o.theta_max && n_r == o.n_r && n_theta == o.n_theta;
  }
};

// Throws std::invalid_argument on domain-bounds or size violations.
AnnularGrid make_grid(double r_min, double r_max, double theta_min,
                      double theta_max, int n_r, int n_theta);

// Selects the grid points over which derivatives and norms are trusted:
// at least `margin` cells from every edge, minus an optional per-point
// exclusion (used for near-zero denominator fields).
struct InteriorMask {
  int margin = 2;
  std::function<bool(int, int)> exclude;  // true = drop the point
};

}  // namespace moutard
