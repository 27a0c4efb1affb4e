// Command-line front end: catalog evaluation, numeric transform pipelines,
// and residual/convergence verification with machine-readable reports.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "moutard/catalog.hpp"
#include "moutard/io.hpp"
#include "moutard/oneform.hpp"
#include "moutard/stencil.hpp"
#include "moutard/transform.hpp"
#include "moutard/verify.hpp"

using namespace moutard;
using nlohmann::json;

namespace {

struct GridArgs {
  double r_min = 1.0;
  double r_max = 3.0;
  double theta_min = 0.3;
  double theta_max = 3.14159265358979323846 - 0.3;
  int n_r = 129;
  int n_theta = 129;

  void attach(CLI::App* cmd) {
    cmd->add_option("--r-min", r_min, "inner radius (> 0)");
    cmd->add_option("--r-max", r_max, "outer radius");
    cmd->add_option("--theta-min", theta_min, "lower polar angle (> 0)");
    cmd->add_option("--theta-max", theta_max, "upper polar angle (< pi)");
    cmd->add_option("--n-r", n_r, "radial point count");
    cmd->add_option("--n-theta", n_theta, "angular point count");
  }

  GridSpec spec() const {
    GridSpec s;
    s.r_min = r_min;
    s.r_max = r_max;
    s.theta_min = theta_min;
    s.theta_max = theta_max;
    s.n_r = n_r;
    s.n_theta = n_theta;
    return s;
  }
};

void write_field(const ScalarField& f, const std::string& path,
                 const std::string& format) {
  if (format == "json")
    emit_json_file(f, path);
  else
    emit_csv_file(f, path);
}

void write_report(const json& rep, const std::string& path) {
  if (path.empty()) {
    std::cout << rep.dump(2) << std::endl;
  } else {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write report: " + path);
    os << rep.dump(2) << '\n';
  }
}

json case_to_json(const ResidualCase& rc) {
  json j;
  j["name"] = rc.name;
  j["residual_tol"] = rc.residual_tol;
  j["min_order"] = rc.min_order;
  j["pass"] = rc.pass;
  j["detail"] = rc.detail;
  json levels = json::array();
  for (const auto& l : rc.levels)
    levels.push_back({{"n_r", l.n_r},
                      {"n_theta", l.n_theta},
                      {"rel_linf", l.rel_linf},
                      {"rel_l2", l.rel_l2}});
  j["levels"] = levels;
  j["orders"] = rc.orders;
  return j;
}

// Fill options the command line left unset from a JSON config file with
// identical kebab-case keys.
void apply_config(CLI::App* cmd, const std::string& config_path) {
  if (config_path.empty()) return;
  std::ifstream is(config_path);
  if (!is) throw std::runtime_error("cannot open config: " + config_path);
  json cfg;
  is >> cfg;
  for (auto& [key, value] : cfg.items()) {
    CLI::Option* opt = cmd->get_option_no_throw("--" + key);
    if (!opt || opt->count() > 0) continue;
    std::vector<std::string> vals{value.is_string()
                                      ? value.get<std::string>()
                                      : value.dump()};
    opt->add_result(vals[0]);
    opt->run_callback();
  }
}

FamilySpec make_spec(const std::string& family, double k, double C, int p) {
  FamilySpec s;
  s.family = family;
  s.k = k;
  s.C = C;
  s.p = p;
  return s;
}

int cmd_catalog_list() {
  for (const auto& f : catalog_families()) std::cout << f << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moutard transformation toolkit for the axially symmetric "
               "Schrodinger equation"};
  app.require_subcommand(1);

  // ---- catalog ----
  CLI::App* catalog = app.add_subcommand("catalog", "closed-form families");
  catalog->require_subcommand(1);
  CLI::App* cat_list = catalog->add_subcommand("list", "list family names");

  CLI::App* cat_eval =
      catalog->add_subcommand("eval", "evaluate a family on a grid");
  std::string ce_family, ce_what = "potential", ce_format = "csv", ce_output,
              ce_config;
  double ce_k = 1.0, ce_c = 0.0;
  int ce_p = 0;
  GridArgs ce_grid;
  cat_eval->add_option("--family", ce_family, "family identifier")->required();
  cat_eval->add_option("--what", ce_what,
                       "potential | solution | f | seed1 | seed2");
  cat_eval->add_option("--k", ce_k, "wavenumber");
  cat_eval->add_option("--c", ce_c, "additive constant C");
  cat_eval->add_option("--p", ce_p, "Legendre degree");
  cat_eval->add_option("--format", ce_format, "csv | json");
  cat_eval->add_option("--output", ce_output, "output file")->required();
  cat_eval->add_option("--config", ce_config, "JSON config file");
  ce_grid.attach(cat_eval);

  // ---- transform ----
  CLI::App* transform = app.add_subcommand("transform", "numeric pipelines");
  transform->require_subcommand(1);

  CLI::App* tr_single = transform->add_subcommand(
      "single", "single Moutard transform from a sin(kr cos t) seed");
  double ts_k = 1.0;
  std::string ts_output, ts_format = "csv", ts_report, ts_config;
  double ts_tol = 1e-4;
  GridArgs ts_grid;
  tr_single->add_option("--k", ts_k, "wavenumber");
  tr_single->add_option("--comparison-tol", ts_tol,
                        "relative Linf tolerance vs the closed form");
  tr_single->add_option("--output", ts_output, "transformed potential file");
  tr_single->add_option("--format", ts_format, "csv | json");
  tr_single->add_option("--report", ts_report, "JSON report file");
  tr_single->add_option("--config", ts_config, "JSON config file");
  ts_grid.attach(tr_single);

  CLI::App* tr_two = transform->add_subcommand(
      "twofold", "twofold Moutard transform from a seed pair");
  std::string tt_seeds = "seeds-planewave", tt_format = "csv", tt_report,
              tt_config;
  std::string tt_out_f, tt_out_pot, tt_out_sol1, tt_out_sol2;
  double tt_k = 1.0, tt_c = 1.0;
  int tt_p = 0;
  double tt_exactness = 1e-3, tt_path = 1e-4, tt_tol = 1e-4;
  GridArgs tt_grid;
  tr_two->add_option("--seeds", tt_seeds, "seeds-planewave | seeds-bessel");
  tr_two->add_option("--k", tt_k, "wavenumber");
  tr_two->add_option("--c", tt_c, "target additive constant for F");
  tr_two->add_option("--p", tt_p, "Legendre degree (seeds-bessel)");
  tr_two->add_option("--exactness-tol", tt_exactness,
                     "mixed-partial defect tolerance (relative)");
  tr_two->add_option("--path-tol", tt_path,
                     "path-ordering agreement tolerance (relative)");
  tr_two->add_option("--comparison-tol", tt_tol,
                     "relative Linf tolerance vs the closed form");
  tr_two->add_option("--output-f", tt_out_f, "integrated F file");
  tr_two->add_option("--output-potential", tt_out_pot,
                     "twofold potential file");
  tr_two->add_option("--output-sol1", tt_out_sol1, "Y1/F file");
  tr_two->add_option("--output-sol2", tt_out_sol2, "Y2/F file");
  tr_two->add_option("--format", tt_format, "csv | json");
  tr_two->add_option("--report", tt_report, "JSON report file");
  tr_two->add_option("--config", tt_config, "JSON config file");
  tt_grid.attach(tr_two);

  // ---- verify / converge ----
  const auto add_verify_args = [](CLI::App* cmd, std::string& potential_fam,
                                  std::string& solution_fam, double& k,
                                  double& C, int& p, int& levels, double& tol,
                                  double& min_order, double& perturb,
                                  std::string& report, std::string& config,
                                  GridArgs& grid) {
    cmd->add_option("--potential", potential_fam, "potential family")
        ->required();
    cmd->add_option("--solution", solution_fam, "solution family")->required();
    cmd->add_option("--k", k, "wavenumber");
    cmd->add_option("--c", C, "additive constant C");
    cmd->add_option("--p", p, "Legendre degree");
    cmd->add_option("--levels", levels, "refinement ladder depth (>= 3)");
    cmd->add_option("--residual-tol", tol, "relative residual tolerance");
    cmd->add_option("--min-order", min_order, "minimum convergence order");
    cmd->add_option("--perturb", perturb,
                    "add a constant to the potential (negative control)");
    cmd->add_option("--report", report, "JSON report file");
    cmd->add_option("--config", config, "JSON config file");
    grid.attach(cmd);
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "residual test for a catalog (solution, potential) pair");
  std::string vf_pot, vf_sol, vf_report, vf_config;
  double vf_k = 1.0, vf_c = 1.0, vf_tol = 1e-6, vf_order = 3.5, vf_perturb = 0.0;
  int vf_p = 0, vf_levels = 3;
  GridArgs vf_grid;
  vf_grid.n_r = vf_grid.n_theta = 65;
  add_verify_args(verify, vf_pot, vf_sol, vf_k, vf_c, vf_p, vf_levels, vf_tol,
                  vf_order, vf_perturb, vf_report, vf_config, vf_grid);

  CLI::App* converge = app.add_subcommand(
      "converge", "refinement ladder with per-level residuals and orders");
  std::string cv_pot, cv_sol, cv_report, cv_config;
  double cv_k = 1.0, cv_c = 1.0, cv_tol = 1e-6, cv_order = 3.5, cv_perturb = 0.0;
  int cv_p = 0, cv_levels = 3;
  GridArgs cv_grid;
  cv_grid.n_r = cv_grid.n_theta = 65;
  add_verify_args(converge, cv_pot, cv_sol, cv_k, cv_c, cv_p, cv_levels,
                  cv_tol, cv_order, cv_perturb, cv_report, cv_config, cv_grid);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cat_list->parsed()) return cmd_catalog_list();

    if (cat_eval->parsed()) {
      apply_config(cat_eval, ce_config);
      const FamilySpec spec = make_spec(ce_family, ce_k, ce_c, ce_p);
      ClosedForm cf;
      if (ce_what == "potential")
        cf = potential(spec);
      else if (ce_what == "solution")
        cf = solution(spec);
      else if (ce_what == "f")
        cf = f_closed(spec);
      else if (ce_what == "seed1")
        cf = seeds(spec).first;
      else if (ce_what == "seed2")
        cf = seeds(spec).second;
      else
        throw std::invalid_argument("unknown --what '" + ce_what + "'");
      write_field(sample(cf.eval, ce_grid.spec().grid()), ce_output, ce_format);
      return 0;
    }

    if (tr_single->parsed()) {
      apply_config(tr_single, ts_config);
      const AnnularGrid g = ts_grid.spec().grid();
      const ClosedForm Y0 = seeds(make_spec("seeds-planewave", ts_k, 0, 0)).first;
      const ScalarField u1 = run_single(Y0, ts_k, g);
      const ScalarField w = sample(Y0.eval, g);
      const double cutoff = 0.1 * max_abs(w);
      InteriorMask mask{u1.margin(), [&](int i, int j) {
                          return std::abs(w.at(i, j)) < cutoff;
                        }};
      const double err =
          compare_rel_linf(u1, potential(make_spec("eq5-single", ts_k, 0, 0)),
                           mask);
      if (!ts_output.empty()) write_field(u1, ts_output, ts_format);
      json rep;
      rep["case"] = "transform-single";
      rep["k"] = ts_k;
      rep["rel_linf_vs_closed_form"] = err;
      rep["comparison_tol"] = ts_tol;
      rep["excluded_points"] = u1.excluded_count();
      rep["pass"] = err <= ts_tol;
      write_report(rep, ts_report);
      return err <= ts_tol ? 0 : 1;
    }

    if (tr_two->parsed()) {
      apply_config(tr_two, tt_config);
      const AnnularGrid g = tt_grid.spec().grid();
      const FamilySpec seed_spec = make_spec(tt_seeds, tt_k, 0.0, tt_p);

      // closed-form references, when the catalog has them
      std::optional<ClosedForm> f_ref;
      std::optional<ClosedForm> pot_ref;
      if (tt_seeds == "seeds-planewave") {
        f_ref = ClosedForm{[](double r, double th) {
                             const double s = std::sin(th);
                             return cplx(r * r * s * s, 0.0);
                           },
                           ""};
        pot_ref = potential(make_spec("eq9-planewave", tt_k, tt_c, 0));
      } else if (tt_seeds == "seeds-bessel" && tt_p <= 2) {
        f_ref = f_closed(make_spec("eq13-Fp", tt_k, 0.0, tt_p));
        pot_ref = potential(make_spec("eq14-calogero", tt_k, tt_c, tt_p));
      }

      PathIntegrationPlan plan;
      plan.exactness_tol = tt_exactness;
      plan.path_tol = tt_path;
      const TwofoldRun run = run_twofold(seed_spec, g, tt_c,
                                         f_ref ? &*f_ref : nullptr, plan);

      json rep;
      rep["case"] = "transform-twofold";
      rep["seeds"] = tt_seeds;
      rep["k"] = tt_k;
      rep["c"] = tt_c;
      rep["p"] = tt_p;
      rep["path_defect_rel"] = run.path_defect_rel;
      rep["exactness_rel"] = run.exactness_rel;
      rep["masked_points"] = run.u_twofold.excluded_count();
      bool pass = true;
      if (pot_ref) {
        const double err = compare_rel_linf(
            run.u_twofold, *pot_ref, {run.u_twofold.margin(), nullptr});
        rep["rel_linf_vs_closed_form"] = err;
        rep["comparison_tol"] = tt_tol;
        pass = err <= tt_tol;
      }
      rep["pass"] = pass;
      if (!tt_out_f.empty()) write_field(run.F, tt_out_f, tt_format);
      if (!tt_out_pot.empty()) write_field(run.u_twofold, tt_out_pot, tt_format);
      if (!tt_out_sol1.empty()) write_field(run.sol1, tt_out_sol1, tt_format);
      if (!tt_out_sol2.empty()) write_field(run.sol2, tt_out_sol2, tt_format);
      write_report(rep, tt_report);
      return pass ? 0 : 1;
    }

    const auto run_verify_cmd =
        [&](CLI::App* cmd, const std::string& config, const std::string& pot_fam,
            const std::string& sol_fam, double k, double C, int p, int levels,
            double tol, double min_order, double perturb,
            const std::string& report, const GridArgs& grid) -> int {
      apply_config(cmd, config);
      if (levels < 3)
        throw std::invalid_argument(
            "need at least 3 ladder levels to estimate an order");
      ClosedForm pot = potential(make_spec(pot_fam, k, C, p));
      if (perturb != 0.0) {
        const ClosedForm base = pot;
        const double eps = perturb;
        pot = ClosedForm{[base, eps](double r, double th) {
                           return base.eval(r, th) + eps;
                         },
                         base.singular_set};
      }
      const ClosedForm sol = solution(make_spec(sol_fam, k, C, p));
      // families singular on the seed zero set need a witness mask
      std::optional<ClosedForm> witness;
      if (pot_fam == "eq5-single" || sol_fam == "trivial-tilde")
        witness = seeds(make_spec("seeds-planewave", k, 0, 0)).first;
      const ResidualCase rc =
          verify_pair(pot_fam + "/" + sol_fam, sol, pot, grid.spec(), levels,
                      tol, min_order, witness ? &*witness : nullptr, 0.1);
      json rep = case_to_json(rc);
      rep["k"] = k;
      rep["c"] = C;
      rep["p"] = p;
      rep["perturb"] = perturb;
      write_report(rep, report);
      return rc.pass ? 0 : 1;
    };

    if (verify->parsed())
      return run_verify_cmd(verify, vf_config, vf_pot, vf_sol, vf_k, vf_c,
                            vf_p, vf_levels, vf_tol, vf_order, vf_perturb,
                            vf_report, vf_grid);
    if (converge->parsed())
      return run_verify_cmd(converge, cv_config, cv_pot, cv_sol, cv_k, cv_c,
                            cv_p, cv_levels, cv_tol, cv_order, cv_perturb,
                            cv_report, cv_grid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
