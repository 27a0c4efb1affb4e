#include "moutard/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moutard {

ScalarField differentiate(const ScalarField& f, Axis axis, int order) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("differentiate: order must be 1 or 2");
  const auto& g = f.grid();
  const double h = (axis == Axis::r) ? g.h_r : g.h_theta;
  const int di = (axis == Axis::r) ? 1 : 0;
  const int dj = (axis == Axis::r) ? 0 : 1;

  ScalarField out(g);
  out.set_margin(f.margin() + 2);

  const int m = out.margin();
  for (int i = m; i < g.n_r - m; ++i) {
    for (int j = m; j < g.n_theta - m; ++j) {
      bool ok = true;
      for (int s = -2; s <= 2 && ok; ++s)
        if (f.excluded(i + s * di, j + s * dj)) ok = false;
      if (!ok) {
        out.exclude(i, j);
        continue;
      }
      const cplx fm2 = f.at(i - 2 * di, j - 2 * dj);
      const cplx fm1 = f.at(i - di, j - dj);
      const cplx f0 = f.at(i, j);
      const cplx fp1 = f.at(i + di, j + dj);
      const cplx fp2 = f.at(i + 2 * di, j + 2 * dj);
      if (order == 1) {
        out.at(i, j) = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
      } else {
        out.at(i, j) =
            (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) /
            (12.0 * h * h);
      }
    }
  }
  return out;
}

ScalarField apply_schrodinger(const ScalarField& Y, const ScalarField& u) {
  if (!Y.grid().same_layout(u.grid()))
    throw std::invalid_argument("apply_schrodinger: grid mismatch");
  const auto& g = Y.grid();

  const ScalarField Yr = differentiate(Y, Axis::r, 1);
  const ScalarField Yrr = differentiate(Y, Axis::r, 2);
  const ScalarField Yt = differentiate(Y, Axis::theta, 1);
  const ScalarField Ytt = differentiate(Y, Axis::theta, 2);

  ScalarField out(g);
  out.set_margin(std::max(Yr.margin(), u.margin()));
  const int m = out.margin();
  for (int i = m; i < g.n_r - m; ++i) {
    const double r = g.r(i);
    for (int j = m; j < g.n_theta - m; ++j) {
      if (Yr.excluded(i, j) || Yt.excluded(i, j) || u.excluded(i, j)) {
        out.exclude(i, j);
        continue;
      }
      const double th = g.theta(j);
      const double cot = std::cos(th) / std::sin(th);
      out.at(i, j) = Yrr.at(i, j) + (2.0 / r) * Yr.at(i, j) +
                     (Ytt.at(i, j) + cot * Yt.at(i, j)) / (r * r) -
                     u.at(i, j) * Y.at(i, j);
    }
  }
  return out;
}

}  // namespace moutard
