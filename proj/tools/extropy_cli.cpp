//------------------------------------------------------------------------------
//
//   Copyright 2026 The extropy-measures Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// Command-line front end: measures between families, two-sample estimates,
// Monte-Carlo studies, grouped CSV matrices and identity checks.

#include "extropy/extropy.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace extropy;
namespace fs = std::filesystem;

enum ExitCode
{
  exit_ok        = 0,
  exit_input     = 2,
  exit_numerical = 3,
  exit_verify    = 4,
};

struct Common
{
  std::string out_dir;
  std::string format = "json";
  std::string atom_convention = "ac";
  std::string boundary_reflect = "off";

  AtomConvention atoms() const
  {
    return atom_convention == "paper" ? AtomConvention::with_atom : AtomConvention::absolutely_continuous;
  }

  EstimateOptions estimate() const
  {
    EstimateOptions o;
    o.boundary = boundary_reflect == "on" ? Boundary::reflect_at_zero : Boundary::none;
    return o;
  }
};

/// Writes `files` into --out, or prints the one matching --format to stdout.
void emit(Common const &c, std::vector<std::pair<std::string, std::string>> const &files)
{
  if (c.out_dir.empty())
  {
    for (auto const &[name, content] : files)
    {
      if (fs::path(name).extension() == "." + c.format)
      {
        std::cout << content;
        return;
      }
    }
    throw InvalidParameter("format '" + c.format + "' is not available for this command");
  }
  std::error_code ec;
  fs::create_directories(c.out_dir, ec);
  if (ec)
  {
    throw IoError("cannot create " + c.out_dir + ": " + ec.message());
  }
  for (auto const &[name, content] : files)
  {
    write_text(fs::path(c.out_dir) / name, content);
  }
}

std::string dump(Json const &j)
{
  return j.dump(2) + "\n";
}

int run_measure(Common const &c, std::string const &fx, std::optional<std::string> const &fy,
                std::optional<double> t)
{
  auto const px = parse_family(fx, c.atoms());
  auto const x  = make_model(px);
  std::vector<MeasureReport> out{extropy::extropy(x)};
  if (t)
  {
    out.push_back(residual_extropy(x, *t));
    out.push_back(past_extropy(x, *t));
  }
  if (fy)
  {
    auto const y = make_model(parse_family(*fy, c.atoms()));
    out.push_back(extropy::extropy(y));
    out.push_back(extropy_inaccuracy(x, y));
    out.push_back(relative_extropy(x, y));
    out.push_back(extropy_divergence(x, y));
    auto gf = extropy_divergence(y, x);
    gf.id   = MeasureId::divergence_gf;
    out.push_back(gf);
    if (t)
    {
      out.push_back(residual_extropy(y, *t));
      out.push_back(past_extropy(y, *t));
      out.push_back(residual_inaccuracy(x, y, *t));
      out.push_back(past_inaccuracy(x, y, *t));
      out.push_back(residual_relative(x, y, *t));
      out.push_back(past_relative(x, y, *t));
      out.push_back(residual_divergence(x, y, *t));
      out.push_back(past_divergence(x, y, *t));
    }
  }

  Json j = report_envelope("measure");
  j["inputs"]["family_x"]        = describe(px);
  j["inputs"]["family_y"]        = fy ? Json(describe(parse_family(*fy, c.atoms()))) : Json(nullptr);
  j["inputs"]["t"]               = t ? json_number(*t) : Json(nullptr);
  j["inputs"]["atom_convention"] = c.atom_convention;
  Json arr = Json::array();
  std::string csv = "measure,x,y,t,value,error_estimate\n";
  for (auto const &r : out)
  {
    arr.push_back(to_json(r));
    bool const single = r.id == MeasureId::extropy || r.id == MeasureId::residual_extropy ||
                        r.id == MeasureId::past_extropy;
    csv += std::string(to_string(r.id)) + ',' + csv_quote(r.x_name) + ',' + (single ? "" : csv_quote(r.y_name)) + ',' +
           (r.t ? format_real(*r.t) : "") + ',' + format_real(r.value) + ',' +
           format_real(r.diagnostics.error_estimate) + '\n';
  }
  j["measures"] = std::move(arr);
  emit(c, {{"report.json", dump(j)}, {"measures.csv", csv}});
  return exit_ok;
}

int run_estimate(Common const &c, std::string const &fx, std::string const &fy, std::string const &value_col)
{
  auto load = [&](std::string const &path) {
    auto const table = read_csv_file(path);
    auto const col   = table.column(value_col);
    std::vector<double> v;
    for (std::size_t r = 0; r < table.rows.size(); ++r)
    {
      if (!detail::is_missing(table.rows[r][col]))
      {
        v.push_back(detail::parse_real(table.rows[r][col], r + 1, value_col));
      }
    }
    if (v.size() < 5)
    {
      throw TooFewObservations(path + " has " + std::to_string(v.size()) + " usable values");
    }
    return SampleBatch(std::move(v));
  };
  auto const sx = load(fx);
  auto const sy = load(fy);
  auto const opt = c.estimate();
  auto const d  = estimate_relative_extropy_detailed(sx, sy, opt);

  Json j = report_envelope("estimate");
  j["inputs"]["x"]            = fs::path(fx).filename().string();
  j["inputs"]["y"]            = fs::path(fy).filename().string();
  j["inputs"]["value_column"] = value_col;
  j["inputs"]["boundary"]     = to_string(opt.boundary);
  j["n_x"]                    = sx.size();
  j["n_y"]                    = sy.size();
  j["bandwidth_x"]            = json_number(d.bandwidth_x);
  j["bandwidth_y"]            = json_number(d.bandwidth_y);
  j["integration_range"]      = {json_number(d.lo), json_number(d.hi)};
  j["estimate"]               = json_number(d.value);
  j["error_estimate"]         = json_number(d.error_estimate);
  std::string const csv = "estimate,bandwidth_x,bandwidth_y,n_x,n_y\n" + format_real(d.value) + ',' +
                          format_real(d.bandwidth_x) + ',' + format_real(d.bandwidth_y) + ',' +
                          std::to_string(sx.size()) + ',' + std::to_string(sy.size()) + '\n';
  emit(c, {{"report.json", dump(j)}, {"estimate.csv", csv}});
  return exit_ok;
}

int run_simulate(Common const &c, std::string const &fx, std::string const &fy, std::vector<std::size_t> const &ns,
                 std::size_t reps, std::uint64_t seed, unsigned threads)
{
  McStudyConfig cfg;
  cfg.family_x = parse_family(fx, c.atoms());
  cfg.family_y = parse_family(fy, c.atoms());
  cfg.reps     = reps;
  cfg.seed     = seed;
  cfg.threads  = threads;
  cfg.estimate = c.estimate();
  auto const rows = mc_study(cfg, ns);
  emit(c, {{"report.json", dump(study_report(cfg, rows))}, {"study.csv", study_csv(rows)}});
  return exit_ok;
}

int run_groups(Common const &c, std::string const &path, LoadOptions const &opt)
{
  auto const ds  = load_csv(path, opt);
  auto const eo  = c.estimate();
  auto const m   = pairwise_matrix(ds, eo);
  emit(c, {{"report.json", dump(matrix_report(ds, m, eo))},
           {"matrix.csv", matrix_csv(m)},
           {"heatmap.svg", heatmap_svg(m)}});
  return exit_ok;
}

int run_verify(Common const &c, std::string const &fx, std::string const &fy, double t_min, double t_max,
               std::size_t points, BoundHypotheses const &declared)
{
  auto const x    = make_model(parse_family(fx, c.atoms()));
  auto const y    = make_model(parse_family(fy, c.atoms()));
  auto const grid = TimeGrid::linspace(t_min, t_max, points);

  std::vector<DynamicVerdict> identities;
  {
    auto const     split = decompose_relative(x, y);
    DynamicVerdict v;
    v.kind      = VerdictKind::decomposition;
    v.name      = "static_split";
    v.tolerance = 10.0 * QuadratureSpec{}.abs_tol;
    v.per_point.push_back({0.0, split.relative, split.divergence_fg + split.divergence_gf, "d = J(f|g) + J(g|f)"});
    v.max_abs_residual = split.residual();
    v.holds            = v.max_abs_residual <= v.tolerance;
    identities.push_back(std::move(v));
  }
  identities.push_back(sum_rule_checks(x, y, grid));
  identities.push_back(ode_check_relative(x, y, grid));
  identities.push_back(ode_check_divergence(x, y, grid));
  for (double t : grid.points())
  {
    identities.push_back(global_decompositions(x, y, t));
  }
  auto const bounds = bound_checks(x, y, grid, {}, declared);
  auto const order  = dynamic_orderings(x, y, grid);

  bool ok = true;
  Json j  = report_envelope("verify");
  j["inputs"]["family_x"] = x.name;
  j["inputs"]["family_y"] = y.name;
  j["inputs"]["grid"]     = grid.points();
  j["inputs"]["declared"] = {{"nondecreasing_relative", declared.nondecreasing_relative},
                             {"hazard_order_with_dfr", declared.hazard_order_with_dfr}};
  Json ids = Json::array();
  for (auto const &v : identities)
  {
    ok = ok && v.holds;
    ids.push_back(to_json(v));
  }
  j["identities"] = std::move(ids);
  Json bs = Json::array();
  for (auto const &v : bounds)
  {
    ok = ok && v.hypothesis_met;
    bs.push_back(to_json(v));
  }
  j["bounds"]    = std::move(bs);
  j["orderings"] = {{"hr", to_string(order.hr)},   {"rh", to_string(order.rh)},   {"rex", to_string(order.rex)},
                    {"red", to_string(order.red)}, {"pex", to_string(order.pex)}, {"ped", to_string(order.ped)},
                    {"rex_red_equivalent", order.rex_red_equivalent},
                    {"pex_ped_equivalent", order.pex_ped_equivalent}};
  ok = ok && order.rex_red_equivalent && order.pex_ped_equivalent;
  j["all_hold"] = ok;
  emit(c, {{"report.json", dump(j)}});
  return ok ? exit_ok : exit_verify;
}

void add_common(CLI::App *cmd, Common &c, bool families, bool estimate)
{
  cmd->add_option("--out", c.out_dir, "write report files into this directory");
  cmd->add_option("--format", c.format, "stdout format when --out is not given")
      ->check(CLI::IsMember({"json", "csv", "svg"}));
  if (families)
  {
    cmd->add_option("--atom-convention", c.atom_convention, "point mass of the CRH family: paper (keep the atom) or ac")
        ->check(CLI::IsMember({"paper", "ac"}));
  }
  if (estimate)
  {
    cmd->add_option("--boundary-reflect", c.boundary_reflect, "reflect kernel estimates at zero")
        ->check(CLI::IsMember({"on", "off"}));
  }
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Extropy-based measures, estimators and reports"};
  app.require_subcommand(1);
  Common c;

  std::string                fx = "exp:1", fy_sim = "exp:2";
  std::optional<std::string> fy;
  std::optional<double>      t;
  auto *measure = app.add_subcommand("measure", "measures between parametric families");
  measure->add_option("--family-x", fx, "e.g. exp:1, weibull:1.5,2, crh:1,2, uniform:0,1")->required();
  measure->add_option("--family-y", fy);
  measure->add_option("--t", t, "time point for residual and past measures");
  add_common(measure, c, true, false);

  std::string x_csv, y_csv, value_col;
  auto *estimate = app.add_subcommand("estimate", "kernel estimate of d(f,g) from two samples");
  estimate->add_option("x", x_csv)->required()->check(CLI::ExistingFile);
  estimate->add_option("y", y_csv)->required()->check(CLI::ExistingFile);
  estimate->add_option("--value-col", value_col)->required();
  add_common(estimate, c, false, true);

  std::vector<std::size_t> ns{50, 75, 100};
  std::size_t              reps    = 500;
  std::uint64_t            seed    = 20240531;
  unsigned                 threads = 0;
  auto *simulate = app.add_subcommand("simulate", "Monte-Carlo bias and MSE of the estimator");
  simulate->add_option("--family-x", fx);
  simulate->add_option("--family-y", fy_sim);
  simulate->add_option("--n", ns, "sample sizes, comma separated")->delimiter(',');
  simulate->add_option("--reps", reps);
  simulate->add_option("--seed", seed);
  simulate->add_option("--threads", threads, "0 uses every core; results do not depend on it");
  add_common(simulate, c, true, true);

  std::string                input;
  std::optional<std::string> group_col, filter;
  std::vector<double>        quantiles;
  auto *groups = app.add_subcommand("groups", "pairwise matrix between groups of a CSV file");
  groups->add_option("csv", input)->required();
  groups->add_option("--value-col", value_col)->required();
  groups->add_option("--group-col", group_col);
  groups->add_option("--quantiles", quantiles, "cut probabilities, comma separated")->delimiter(',');
  groups->add_option("--filter", filter, "keep rows with col=value or col!=value");
  add_common(groups, c, false, true);

  double         t_min = 0.1, t_max = 2.0;
  std::size_t    points = 10;
  BoundHypotheses declared;
  auto *verify = app.add_subcommand("verify", "identity, ODE, bound and ordering checks on a grid");
  verify->add_option("--family-x", fx)->required();
  verify->add_option("--family-y", fy_sim)->required();
  verify->add_option("--t-min", t_min);
  verify->add_option("--t-max", t_max);
  verify->add_option("--points", points);
  verify->add_flag("--assume-nondecreasing", declared.nondecreasing_relative);
  verify->add_flag("--assume-hr-dfr", declared.hazard_order_with_dfr);
  add_common(verify, c, true, false);

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return exit_input;
  }

  try
  {
    if (*measure)
    {
      return run_measure(c, fx, fy, t);
    }
    if (*estimate)
    {
      return run_estimate(c, x_csv, y_csv, value_col);
    }
    if (*simulate)
    {
      return run_simulate(c, fx, fy_sim, ns, reps, seed, threads);
    }
    if (*groups)
    {
      LoadOptions opt{.value_column = value_col, .group_column = group_col};
      if (groups->count("--quantiles"))
      {
        opt.quantiles = QuantileGroupSpec{quantiles};
      }
      if (filter)
      {
        opt.filter = RowFilter::parse(*filter);
      }
      return run_groups(c, input, opt);
    }
    return run_verify(c, fx, fy_sim, t_min, t_max, points, declared);
  }
  catch (Error const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return e.category() == ErrorCategory::input ? exit_input : exit_numerical;
  }
  catch (std::exception const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_numerical;
  }
}
