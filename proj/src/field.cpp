#include "moutard/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace moutard {

namespace {

void require_same_grid(const ScalarField& a, const ScalarField& b,
                       const char* op) {
  if (!a.grid().same_layout(b.grid())) {
    std::ostringstream os;
    os << op << ": grid mismatch (" << a.grid().n_r << "x" << a.grid().n_theta
       << " vs " << b.grid().n_r << "x" << b.grid().n_theta << ")";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

std::size_t ScalarField::excluded_count() const {
  std::size_t n = 0;
  for (auto e : excl_) n += e;
  return n;
}

void ScalarField::merge_validity(const ScalarField& o) {
  margin_ = std::max(margin_, o.margin_);
  if (o.excl_.empty()) return;
  if (excl_.empty()) excl_.assign(grid_.size(), 0);
  for (std::size_t k = 0; k < excl_.size(); ++k) {
    if (o.excl_[k]) {
      excl_[k] = 1;
      values_[k] = cplx(0.0, 0.0);
    }
  }
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same_grid(*this, o, "field add");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  merge_validity(o);
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same_grid(*this, o, "field sub");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
  merge_validity(o);
  return *this;
}

ScalarField& ScalarField::operator*=(const ScalarField& o) {
  require_same_grid(*this, o, "field mul");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] *= o.values_[k];
  merge_validity(o);
  return *this;
}

ScalarField& ScalarField::operator*=(cplx a) {
  for (auto& v : values_) v *= a;
  return *this;
}

ScalarField& ScalarField::operator+=(cplx a) {
  for (auto& v : values_) v += a;
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(ScalarField a, const ScalarField& b) { return a *= b; }
ScalarField operator*(cplx a, ScalarField f) { return f *= a; }

ScalarField sample(const std::function<cplx(double, double)>& f,
                   const AnnularGrid& g) {
  ScalarField out(g);
  for (int i = 0; i < g.n_r; ++i) {
    const double r = g.r(i);
    for (int j = 0; j < g.n_theta; ++j) {
      const cplx v = f(r, g.theta(j));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream os;
        os << "sample: non-finite value at (r=" << r
           << ", theta=" << g.theta(j) << ")";
        throw std::runtime_error(os.str());
      }
      out.at(i, j) = v;
    }
  }
  return out;
}

ScalarField divide_masked(const ScalarField& num, const ScalarField& den,
                          double eps_rel) {
  require_same_grid(num, den, "divide_masked");
  double den_max = 0.0;
  const auto& g = den.grid();
  for (int i = 0; i < g.n_r; ++i)
    for (int j = 0; j < g.n_theta; ++j)
      if (den.valid(i, j)) den_max = std::max(den_max, std::abs(den.at(i, j)));
  const double cutoff = eps_rel * den_max;

  ScalarField out(g);
  out.set_margin(std::max(num.margin(), den.margin()));
  for (int i = 0; i < g.n_r; ++i) {
    for (int j = 0; j < g.n_theta; ++j) {
      if (num.excluded(i, j) || den.excluded(i, j) ||
          std::abs(den.at(i, j)) <= cutoff) {
        out.exclude(i, j);
      } else {
        out.at(i, j) = num.at(i, j) / den.at(i, j);
      }
    }
  }
  return out;
}

Norms norms(const ScalarField& f, const InteriorMask& mask) {
  const auto& g = f.grid();
  const int m = std::max(mask.margin, f.margin());
  Norms n;
  double sumsq = 0.0;
  for (int i = m; i < g.n_r - m; ++i) {
    for (int j = m; j < g.n_theta - m; ++j) {
      if (f.excluded(i, j)) continue;
      if (mask.exclude && mask.exclude(i, j)) continue;
      const double a = std::abs(f.at(i, j));
      n.linf = std::max(n.linf, a);
      sumsq += a * a;
      ++n.count;
    }
  }
  if (n.count == 0) throw std::runtime_error("norms: empty interior mask");
  n.l2 = std::sqrt(sumsq / static_cast<double>(n.count));
  return n;
}

double max_abs(const ScalarField& f, const InteriorMask& mask) {
  return norms(f, mask).linf;
}

double relative_linf(const ScalarField& a, const ScalarField& b,
                     const InteriorMask& mask) {
  ScalarField diff = a - b;
  const double denom = norms(b, {std::max(mask.margin, diff.margin()),
                                 mask.exclude})
                           .linf;
  if (denom == 0.0) throw std::runtime_error("relative_linf: zero reference");
  return norms(diff, mask).linf / denom;
}

}  // namespace moutard
