#pragma once

#include <iosfwd>
#include <string>

#include "moutard/field.hpp"

namespace moutard {

// CSV with the exact header `r,theta,re,im`, one row per grid point in
// row-major (r-outer) order, 17 significant digits (round-trips binary64).
void emit_csv(const ScalarField& f, std::ostream& os);
void emit_csv_file(const ScalarField& f, const std::string& path);

// JSON object {r_min, r_max, theta_min, theta_max, n_r, n_theta,
// values: [re, im, ...]}.
void emit_json(const ScalarField& f, std::ostream& os);
void emit_json_file(const ScalarField& f, const std::string& path);

ScalarField parse_csv(std::istream& is);
ScalarField parse_json(std::istream& is);

}  // namespace moutard
