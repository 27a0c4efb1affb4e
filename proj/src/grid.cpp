#include "moutard/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace moutard {

AnnularGrid make_grid(double r_min, double r_max, double theta_min,
                      double theta_max, int n_r, int n_theta) {
  const double pi = 3.14159265358979323846;
  if (!(r_min > 0.0) || !(r_max > r_min)) {
    std::ostringstream os;
    os << "make_grid: need 0 < r_min < r_max, got [" << r_min << ", " << r_max
       << "]";
    throw std::invalid_argument(os.str());
  }
  if (!(theta_min > 0.0) || !(theta_max > theta_min) || !(theta_max < pi)) {
    std::ostringstream os;
    os << "make_grid: need 0 < theta_min < theta_max < pi, got [" << theta_min
       << ", " << theta_max << "]";
    throw std::invalid_argument(os.str());
  }
  if (n_r < 9 || n_theta < 9) {
    std::ostringstream os;
    os << "make_grid: need at least 9 points per axis for 4th-order stencils, "
       << "got n_r=" << n_r << ", n_theta=" << n_theta;
    throw std::invalid_argument(os.str());
  }
  AnnularGrid g;
  g.r_min = r_min;
  g.r_max = r_max;
  g.theta_min = theta_min;
  g.theta_max = theta_max;
  g.n_r = n_r;
  g.n_theta = n_theta;
  g.h_r = (r_max - r_min) / (n_r - 1);
  g.h_theta = (theta_max - theta_min) / (n_theta - 1);
  return g;
}

}  // namespace moutard
