#include "moutard/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace moutard {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

}  // namespace

void emit_csv(const ScalarField& f, std::ostream& os) {
  const auto& g = f.grid();
  os << "r,theta,re,im\n";
  for (int i = 0; i < g.n_r; ++i) {
    const std::string r = fmt17(g.r(i));
    for (int j = 0; j < g.n_theta; ++j) {
      const cplx v = f.at(i, j);
      os << r << ',' << fmt17(g.theta(j)) << ',' << fmt17(v.real()) << ','
         << fmt17(v.imag()) << '\n';
    }
  }
}

void emit_csv_file(const ScalarField& f, const std::string& path) {
  auto os = open_out(path);
  emit_csv(f, os);
}

void emit_json(const ScalarField& f, std::ostream& os) {
  const auto& g = f.grid();
  nlohmann::json j;
  j["r_min"] = g.r_min;
  j["r_max"] = g.r_max;
  j["theta_min"] = g.theta_min;
  j["theta_max"] = g.theta_max;
  j["n_r"] = g.n_r;
  j["n_theta"] = g.n_theta;
  std::vector<double> flat;
  flat.reserve(2 * f.values().size());
  for (const cplx& v : f.values()) {
    flat.push_back(v.real());
    flat.push_back(v.imag());
  }
  j["values"] = std::move(flat);
  os << j.dump() << '\n';
}

void emit_json_file(const ScalarField& f, const std::string& path) {
  auto os = open_out(path);
  emit_json(f, os);
}

ScalarField parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "r,theta,re,im")
    throw std::runtime_error("parse_csv: bad header");
  std::vector<double> rs, thetas;
  std::vector<cplx> vals;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    double r, th, re, im;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r, &th, &re, &im) != 4)
      throw std::runtime_error("parse_csv: bad row: " + line);
    rs.push_back(r);
    thetas.push_back(th);
    vals.emplace_back(re, im);
  }
  if (vals.empty()) throw std::runtime_error("parse_csv: no data");
  // row-major r-outer: theta cycles fastest
  int n_theta = 1;
  while (n_theta < static_cast<int>(vals.size()) && rs[n_theta] == rs[0])
    ++n_theta;
  const int n_r = static_cast<int>(vals.size()) / n_theta;
  if (static_cast<std::size_t>(n_r) * n_theta != vals.size())
    throw std::runtime_error("parse_csv: ragged grid");
  const AnnularGrid g = make_grid(rs.front(), rs.back(), thetas.front(),
                                  thetas[n_theta - 1], n_r, n_theta);
  ScalarField f(g);
  f.values() = std::move(vals);
  return f;
}

ScalarField parse_json(std::istream& is) {
  nlohmann::json j;
  is >> j;
  const AnnularGrid g =
      make_grid(j.at("r_min").get<double>(), j.at("r_max").get<double>(),
                j.at("theta_min").get<double>(), j.at("theta_max").get<double>(),
                j.at("n_r").get<int>(), j.at("n_theta").get<int>());
  const auto flat = j.at("values").get<std::vector<double>>();
  if (flat.size() != 2 * g.size())
    throw std::runtime_error("parse_json: values length mismatch");
  ScalarField f(g);
  for (std::size_t k = 0; k < g.size(); ++k)
    f.values()[k] = cplx(flat[2 * k], flat[2 * k + 1]);
  return f;
}

}  // namespace moutard
