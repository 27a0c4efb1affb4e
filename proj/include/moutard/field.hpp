#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "moutard/grid.hpp"

namespace moutard {

using cplx = std::complex<double>;

// Complex samples on an AnnularGrid. Two layers of validity bookkeeping:
//  - margin: a boundary band (stencil half-widths accumulate here) whose
//    values are stored but never enter norms or comparisons;
//  - an optional per-point exclusion mask for points lost to near-zero
//    denominators.
// Stored values are always finite; excluded points hold 0.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const AnnularGrid& g, cplx fill = cplx(0.0, 0.0))
      : grid_(g), values_(g.size(), fill) {}

  const AnnularGrid& grid() const { return grid_; }
  int margin() const { return margin_; }
  void set_margin(int m) { margin_ = m; }

  cplx& at(int i, int j) { return values_[grid_.idx(i, j)]; }
  const cplx& at(int i, int j) const { return values_[grid_.idx(i, j)]; }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }

  bool excluded(int i, int j) const {
    return !excl_.empty() && excl_[grid_.idx(i, j)] != 0;
  }
  void exclude(int i, int j) {
    if (excl_.empty()) excl_.assign(grid_.size(), 0);
    excl_[grid_.idx(i, j)] = 1;
    values_[grid_.idx(i, j)] = cplx(0.0, 0.0);
  }
  bool has_exclusions() const { return !excl_.empty(); }
  std::size_t excluded_count() const;

  // valid = outside the margin band and not excluded
  bool valid(int i, int j) const {
    return i >= margin_ && i < grid_.n_r - margin_ && j >= margin_ &&
           j < grid_.n_theta - margin_ && !excluded(i, j);
  }

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(const ScalarField& o);
  ScalarField& operator*=(cplx a);
  ScalarField& operator+=(cplx a);

 private:
  AnnularGrid grid_;
  std::vector<cplx> values_;
  std::vector<std::uint8_t> excl_;
  int margin_ = 0;

  void merge_validity(const ScalarField& o);
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(ScalarField a, const ScalarField& b);
ScalarField operator*(cplx a, ScalarField f);

// Pointwise evaluation of f(r, theta) on the grid nodes.
// Throws std::runtime_error naming the first non-finite point.
ScalarField sample(const std::function<cplx(double, double)>& f,
                   const AnnularGrid& g);

// Pointwise quotient with near-zero masking: points where
// |den| < eps_rel * ||den||_inf are excluded from the result.
ScalarField divide_masked(const ScalarField& num, const ScalarField& den,
                          double eps_rel = 1e-8);

struct Norms {
  double linf = 0.0;
  double l2 = 0.0;
  std::size_t count = 0;
};

// Max-abs and RMS over the masked interior. The effective margin is
// max(mask.margin, f.margin). Throws std::runtime_error on an empty mask.
Norms norms(const ScalarField& f, const InteriorMask& mask = {});

// ||a - b||_inf / ||b||_inf over the joint masked interior.
double relative_linf(const ScalarField& a, const ScalarField& b,
                     const InteriorMask& mask = {});

double max_abs(const ScalarField& f, const InteriorMask& mask = {});

}  // namespace moutard
