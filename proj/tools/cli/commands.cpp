#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <CLI11.hpp>

#include "emit.hpp"
#include "kakeya/errors.hpp"

namespace kakeya::cli {

bounds::BoundParams<double> sec41_params() { return {0.06473, 0.22785, 0.88794, 0.90696}; }

void OutputTable::validate() const
{
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw DomainError("output table is not rectangular");
    for (const double x : row)
      if (!std::isfinite(x)) throw DomainError("output table has a non-finite entry");
  }
}

std::vector<double> ScanAxis::points() const
{
  if (steps < 0) throw DomainError("scan steps must be >= 0");
  if (steps == 0 || from == to) return {from};
  std::vector<double> xs(steps + 1);
  for (int i = 0; i <= steps; ++i) xs[i] = i == steps ? to : from + (to - from) * i / steps;
  return xs;
}

namespace {

std::string coef_line(const std::string& label, double coefficient, int digits)
{
  return label + format_digits(coefficient, digits) + " pi = " + format_digits(coefficient * pi<double>, digits);
}

bool wants(const Config& c, Emit e) { return c.emit.count(e) > 0; }

void emit_table(const Config& config, const OutputTable& table, const std::string& stem, int x_col, int y_col,
                std::ostream& out)
{
  if (wants(config, Emit::csv)) {
    write_text(config.output_dir / (stem + ".csv"), to_csv(table));
    out << "wrote " << (config.output_dir / (stem + ".csv")).string() << "\n";
  }
  if (wants(config, Emit::svg)) {
    write_text(config.output_dir / (stem + ".svg"), to_svg(table, x_col, y_col));
    out << "wrote " << (config.output_dir / (stem + ".svg")).string() << "\n";
  }
}

void emit_json(const Config& config, const nlohmann::ordered_json& j, const std::string& stem, std::ostream& out)
{
  if (!wants(config, Emit::json)) return;
  write_text(config.output_dir / (stem + ".json"), j.dump(2) + "\n");
  out << "wrote " << (config.output_dir / (stem + ".json")).string() << "\n";
}

const char* convention_name(bounds::RLambdaConvention c)
{
  return c == bounds::RLambdaConvention::reproducing ? "reproducing" : "paper-literal";
}

}  // namespace

int cmd_bound(const Config& config, std::ostream& out)
{
  const int d = config.digits;
  if (config.preset == "cunningham") {
    const double value = bounds::cunningham_bound<double>();
    out << coef_line("cunningham = ", value, d) << "  (A = [0, pi), r = 1/6)\n";
    out << "cunningham vs 1/108: difference " << format_digits(value - 1.0 / 108, 3) << "\n";
    OutputTable table{{"measure_a", "r", "coefficient", "area"}, {{pi<double>, 1.0 / 6, value, value * pi<double>}},
                      "Cunningham bound"};
    emit_table(config, table, "bound_cunningham", 1, 2, out);
    emit_json(config, {{"preset", "cunningham"}, {"coefficient", value}, {"area", value * pi<double>}},
              "bound_cunningham", out);
    return exit_ok;
  }

  const auto b = bounds::theorem_bound(config.params, config.quad_tol, config.rlambda_convention);
  const auto& p = config.params;
  out << "params: a = " << format_digits(p.a, d) << ", r0 = " << format_digits(p.r0, d)
      << ", p = " << format_digits(p.p, d) << ", lambda = " << format_digits(p.lambda, d)
      << " (r_lambda convention: " << convention_name(config.rlambda_convention) << ")\n";
  out << "derived: r_lambda = " << format_digits(b.derived.r_lambda, d) << ", delta1 = "
      << format_digits(b.derived.delta1, d) << ", r1 = " << format_digits(b.derived.r1, d)
      << ", integral = " << format_digits(b.integral_value, d) << "\n";
  out << coef_line("case_i  = ", b.case_i, d) << "\n";
  out << coef_line("case_ii = ", b.case_ii, d) << "\n";
  out << coef_line("half_a  = ", b.half_a, d) << "\n";
  out << coef_line("final   = ", b.final, d) << "\n";
  out << "final >= 1/98: " << (b.final >= 1.0 / 98 ? "yes" : "no") << " (final - 1/98 = "
      << format_digits(b.final - 1.0 / 98, 3) << ")\n";

  OutputTable table{{"a", "r0", "p", "lambda", "case_i", "case_ii", "half_a", "final"},
                    {{p.a, p.r0, p.p, p.lambda, b.case_i, b.case_ii, b.half_a, b.final}},
                    "bound breakdown (coefficients of pi)"};
  emit_table(config, table, "bound", 4, 7, out);
  nlohmann::ordered_json j{{"params", to_json(p)},
                           {"rlambda_convention", convention_name(config.rlambda_convention)},
                           {"quad_tol", config.quad_tol},
                           {"breakdown", to_json(b)}};
  emit_json(config, j, "bound", out);
  return exit_ok;
}

int cmd_optimize(const Config& config, const OptimizeOptions& options, std::ostream& out)
{
  const int d = config.digits;
  const auto result = opt::optimize(options.box);
  const auto& b = result.breakdown;
  const auto& best = result.best;
  out << "best: a = " << format_digits(best.a, d) << ", r0 = " << format_digits(best.r0, d)
      << ", p = " << format_digits(best.p, d) << ", lambda = " << format_digits(best.lambda, d) << "\n";
  out << coef_line("case_i  = ", b.case_i, d) << "\n";
  out << coef_line("case_ii = ", b.case_ii, d) << "\n";
  out << coef_line("half_a  = ", b.half_a, d) << "\n";
  out << coef_line("bound   = ", b.final, d) << "\n";
  out << "a/2 constraint gap: |final - a/(2 pi)| = " << format_digits(std::abs(b.final - b.half_a), 3) << "\n";
  out << "evaluations: " << result.evaluations << "\n";

  auto j = to_json(result);
  j["box"] = to_json(options.box);
  j["rlambda_convention"] = convention_name(options.box.convention);

  OutputTable trace{{"step", "a", "r0", "p", "lambda", "value"}, {}, "optimizer trace (coefficients of pi)"};
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const auto& t = result.trace[i];
    trace.rows.push_back({static_cast<double>(i), t.params.a, t.params.r0, t.params.p, t.params.lambda, t.value});
  }

  std::optional<OutputTable> refine;
  if (options.refine > 0) {
    const auto steps =
        opt::refine_iterative_trace(best, options.refine, options.refine_tol, config.quad_tol, options.box.convention);
    nlohmann::ordered_json seq = nlohmann::ordered_json::array(), detail = nlohmann::ordered_json::array();
    refine = OutputTable{{"iteration", "p", "inner", "balanced", "value"}, {}, "iterative refinement"};
    out << "refine:";
    for (const auto& s : steps) {
      out << " " << format_digits(s.value, d);
      seq.push_back(s.value);
      detail.push_back({{"iteration", s.iteration}, {"p", s.p}, {"inner", s.inner}, {"balanced", s.balanced},
                        {"value", s.value}});
      refine->rows.push_back({static_cast<double>(s.iteration), s.p, s.inner, s.balanced, s.value});
    }
    out << "\n";
    j["refine"] = seq;
    j["refine_steps"] = detail;
  }
  emit_table(config, trace, "optimize_trace", 0, 5, out);
  if (refine) emit_table(config, *refine, "optimize_refine", 0, 4, out);
  emit_json(config, j, "optimize", out);
  return exit_ok;
}

int cmd_verify(const Config& config, const VerifyOptions& options, std::ostream& out)
{
  std::vector<oracle::CheckId> ids = options.checks;
  if (ids.empty()) ids.assign(oracle::all_checks.begin(), oracle::all_checks.end());
  const auto reports = oracle::run_checks(ids, config.seed, options.samples);
  bool all = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    all = all && r.pass;
    out << (r.pass ? "PASS " : "FAIL ") << oracle::name(r.id) << "  max_violation = " << format_digits(r.max_violation, 6)
        << "  tolerance = " << format_digits(r.tolerance, 6) << "  samples = " << r.samples << "\n";
    out << "     " << r.detail << "\n";
    arr.push_back(to_json(r));
    rows.push_back({std::string(oracle::name(r.id)), std::to_string(r.samples), r.grid_spec,
                    format_real(r.max_violation), format_real(r.tolerance), r.pass ? "true" : "false",
                    std::to_string(r.seed), r.detail});
  }
  out << (all ? "all checks passed" : "some checks FAILED") << " (" << reports.size() << " reports, seed "
      << config.seed << ")\n";
  if (wants(config, Emit::csv)) {
    write_text(config.output_dir / "verify.csv",
               to_csv({"id", "samples", "grid_spec", "max_violation", "tolerance", "pass", "seed", "detail"}, rows));
    out << "wrote " << (config.output_dir / "verify.csv").string() << "\n";
  }
  emit_json(config, {{"seed", config.seed}, {"all_pass", all}, {"reports", arr}}, "verify", out);
  return all ? exit_ok : exit_check_failed;
}

int cmd_scan(const Config& config, const ScanOptions& options, std::ostream& out, std::ostream& err)
{
  const auto& fn = options.function;
  const auto& base = config.params;
  OutputTable table;
  int x_col = 0, y_col = 1;

  if (fn == "f" || fn == "g" || fn == "c") {
    ScanAxis axis = options.r;
    if (!axis.active) {
      if (fn == "f") axis = {min_cutoff_radius<double>, 0.5, 100, true};
      if (fn == "g") axis = {base.a, base.r0, 100, true};
      if (fn == "c") axis = {base.a, 1.0, 100, true};
    }
    const auto rs = axis.points();
    if (fn == "f") {
      table = {{"r", "f"}, {}, "f(r) = r (2r - 1)^2 / 2"};
      for (const double r : rs) table.rows.push_back({r, bounds::f(r)});
    } else if (fn == "c") {
      table = {{"r", "c"}, {}, "c(r) = a / (2 arcsin(a / r)), a = " + format_digits(base.a, 6)};
      for (const double r : rs) table.rows.push_back({r, bounds::c(r, base.a)});
    } else {
      const auto derived = bounds::derive_params(base, config.rlambda_convention);
      table = {{"r", "g", "branch_r", "branch_r_lambda", "branch_angle", "active"}, {},
               "g(r), r_lambda = " + format_digits(derived.r_lambda, 6)};
      for (const double r : rs) {
        const auto gb = bounds::g_branches(r, derived);
        table.rows.push_back({r, bounds::g(r, derived), gb.values[0], gb.values[1], gb.values[2],
                              static_cast<double>(gb.active)});
      }
      const double lo = std::max(rs.front(), base.a), hi = std::min(rs.back(), base.r0);
      if (lo < hi)
        for (const double k : bounds::g_kinks(lo, hi, derived)) out << "branch switch at r = " << format_real(k) << "\n";
    }
  } else if (fn == "case_i" || fn == "case_ii" || fn == "final") {
    auto pts = [](const ScanAxis& axis, double fixed) { return axis.active ? axis.points() : std::vector<double>{fixed}; };
    const auto as = pts(options.a, base.a), r0s = pts(options.r0, base.r0), ls = pts(options.lambda, base.lambda),
               ps = pts(options.p, base.p);
    table.columns = {"a", "r0", "p", "lambda", fn};
    if (fn == "final") table.columns.insert(table.columns.end(), {"balanced_p", "objective"});
    table.caption = fn + " (coefficients of pi)";
    std::size_t dropped = 0;
    for (const double a : as)
      for (const double r0 : r0s)
        for (const double lam : ls)
          for (const double p : ps) {
            const bounds::BoundParams<double> q{a, r0, p, lam};
            try {
              if (fn == "case_i") {
                table.rows.push_back({a, r0, p, lam, bounds::case_i_bound(q, config.quad_tol, config.rlambda_convention)});
              } else if (fn == "case_ii") {
                table.rows.push_back({a, r0, p, lam, bounds::case_ii_bound(q, config.rlambda_convention)});
              } else {
                const auto b = bounds::theorem_bound(q, config.quad_tol, config.rlambda_convention);
                const auto bal = opt::balance(a, r0, lam, config.quad_tol, config.rlambda_convention);
                table.rows.push_back({a, r0, p, lam, b.final, bal.p, std::min(bal.value, b.half_a)});
              }
            } catch (const CaseIIInfeasible&) {
              ++dropped;
            }
          }
    if (dropped) err << "dropped " << dropped << " Case II infeasible points\n";
    // plot against the first axis that varies
    x_col = -1;
    const std::array<std::size_t, 4> sizes{as.size(), r0s.size(), ps.size(), ls.size()};
    const std::array<int, 4> cols{0, 1, 2, 3};
    for (std::size_t i = 0; i < 4; ++i)
      if (sizes[i] > 1) {
        x_col = cols[i];
        break;
      }
    y_col = 4;
  } else {
    throw DomainError("unknown scan function '" + fn + "' (expected f, g, c, case_i, case_ii or final)");
  }

  table.validate();
  out << "scan " << fn << ": " << table.rows.size() << " rows\n";
  if (!table.rows.empty()) {
    const auto best = std::max_element(table.rows.begin(), table.rows.end(),
                                       [y_col](const auto& x, const auto& y) { return x[y_col] < y[y_col]; });
    out << "maximum " << table.columns[y_col] << " = " << format_digits((*best)[y_col], config.digits);
    if (x_col >= 0) out << " at " << table.columns[x_col] << " = " << format_digits((*best)[x_col], config.digits);
    out << "\n";
  }
  emit_table(config, table, "scan_" + fn, x_col, y_col, out);
  emit_json(config, to_json(table), "scan_" + fn, out);
  return exit_ok;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Lower bounds for the area of star-shaped Kakeya sets", "kakeya"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key = value file; command-line flags override it");

  Config config;
  std::optional<double> a, r0, p, lambda;
  std::string convention = "reproducing";
  std::vector<std::string> emit;
  std::string output_dir = ".";

  app.add_option("--a", a, "needle-distance cap a");
  app.add_option("--r0", r0, "cutoff radius r0");
  app.add_option("--p", p, "direction proportion p");
  app.add_option("--lambda", lambda, "interpolation weight lambda");
  app.add_option("--quad-tol", config.quad_tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "master seed (falls back to KAKEYA_SEED)")->envname("KAKEYA_SEED");
  app.add_option("--preset", config.preset, "cunningham, theorem or sec41")
      ->check(CLI::IsMember({"cunningham", "theorem", "sec41"}));
  app.add_option("--rlambda-convention", convention, "reproducing or paper-literal")
      ->check(CLI::IsMember({"reproducing", "paper-literal"}));
  app.add_option("--output-dir", output_dir, "directory for emitted files");
  app.add_option("--emit", emit, "comma list of csv, svg, json")->delimiter(',')->check(CLI::IsMember({"csv", "svg", "json"}));
  app.add_option("--digits", config.digits, "significant digits on stdout")->check(CLI::Range(1, 17));

  auto* bound = app.add_subcommand("bound", "evaluate the two-case bound")->fallthrough();

  OptimizeOptions opt_options;
  ScanOptions scan;
  std::optional<double> a_from, a_to, r0_from, r0_to, l_from, l_to, p_from, p_to, from, to;
  int a_steps = 20, r0_steps = 20, l_steps = 20, p_steps = 20, steps = 100;
  auto add_axes = [&](CLI::App* sub) {
    sub->add_option("--a-from", a_from);
    sub->add_option("--a-to", a_to);
    sub->add_option("--r0-from", r0_from);
    sub->add_option("--r0-to", r0_to);
    sub->add_option("--lambda-from", l_from);
    sub->add_option("--lambda-to", l_to);
  };

  auto* optimize = app.add_subcommand("optimize", "maximize the bound over (a, r0, lambda)")->fallthrough();
  add_axes(optimize);
  optimize->add_option("--grid", opt_options.box.grid, "grid points per axis")->check(CLI::Range(1, 1000));
  optimize->add_option("--starts", opt_options.box.starts, "grid points refined")->check(CLI::Range(1, 1000));
  optimize->add_option("--refine-tol", opt_options.box.refine_tol, "stop refining below this gain")
      ->check(CLI::PositiveNumber);
  optimize->add_option("--refine", opt_options.refine, "iterative refinement steps")->check(CLI::NonNegativeNumber);
  optimize->add_option("--refine-step-tol", opt_options.refine_tol, "stop iterating below this gain")
      ->check(CLI::NonNegativeNumber);

  VerifyOptions verify_options;
  std::vector<std::string> checks;
  bool all_checks = false;
  std::int64_t samples = 0;
  auto* verify = app.add_subcommand("verify", "run the lemma oracles")->fallthrough();
  verify->add_flag("--all", all_checks, "run every check (the default)");
  verify->add_option("--check", checks, "check name, repeatable");
  auto* samples_opt = verify->add_option("--samples", samples, "samples per check (>= 100)");

  auto* scan_cmd = app.add_subcommand("scan", "tabulate a function")->fallthrough();
  scan_cmd->add_option("function", scan.function, "f, g, c, case_i, case_ii or final")
      ->required()
      ->check(CLI::IsMember({"f", "g", "c", "case_i", "case_ii", "final"}));
  add_axes(scan_cmd);
  scan_cmd->add_option("--from", from);
  scan_cmd->add_option("--to", to);
  scan_cmd->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--a-steps", a_steps)->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--r0-steps", r0_steps)->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--lambda-steps", l_steps)->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--p-from", p_from);
  scan_cmd->add_option("--p-to", p_to);
  scan_cmd->add_option("--p-steps", p_steps)->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv{"kakeya"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    config.output_dir = output_dir;
    config.rlambda_convention =
        convention == "paper-literal" ? bounds::RLambdaConvention::paper_literal : bounds::RLambdaConvention::reproducing;
    for (const auto& e : emit) config.emit.insert(e == "csv" ? Emit::csv : e == "svg" ? Emit::svg : Emit::json);
    if (config.preset == "sec41") config.params = sec41_params();
    if (a) config.params.a = *a;
    if (r0) config.params.r0 = *r0;
    if (p) config.params.p = *p;
    if (lambda) config.params.lambda = *lambda;

    auto pair_axis = [](std::optional<double> lo, std::optional<double> hi, const char* what) -> std::optional<opt::Interval> {
      if (!lo && !hi) return std::nullopt;
      if (!lo || !hi) throw DomainError(std::string("--") + what + "-from and --" + what + "-to go together");
      return opt::Interval{*lo, *hi};
    };

    if (bound->parsed()) {
      if (config.preset != "cunningham") bounds::validate(config.params);
      return cmd_bound(config, out);
    }
    if (optimize->parsed()) {
      if (config.preset == "cunningham") throw DomainError("the cunningham preset has no search box");
      auto& box = opt_options.box;
      if (config.preset == "sec41") {
        const auto tuned = opt::sec41_box();
        box.a = tuned.a, box.r0 = tuned.r0, box.lambda = tuned.lambda;
      } else if (config.preset == "theorem") {
        const auto point = opt::point_box(bounds::theorem_params<double>());
        box.a = point.a, box.r0 = point.r0, box.lambda = point.lambda;
      }
      if (a) box.a = {*a, *a};
      if (r0) box.r0 = {*r0, *r0};
      if (lambda) box.lambda = {*lambda, *lambda};
      if (auto iv = pair_axis(a_from, a_to, "a")) box.a = *iv;
      if (auto iv = pair_axis(r0_from, r0_to, "r0")) box.r0 = *iv;
      if (auto iv = pair_axis(l_from, l_to, "lambda")) box.lambda = *iv;
      box.quad_tol = config.quad_tol;
      box.convention = config.rlambda_convention;
      if (config.emit.empty()) config.emit.insert(Emit::json);
      return cmd_optimize(config, opt_options, out);
    }
    if (verify->parsed()) {
      if (all_checks && !checks.empty()) throw DomainError("--all and --check are exclusive");
      for (const auto& name : checks) {
        const auto id = oracle::parse_check(name);
        if (!id) throw DomainError("unknown check '" + name + "'");
        verify_options.checks.push_back(*id);
      }
      if (samples_opt->count()) verify_options.samples = samples;
      if (config.emit.empty()) config.emit.insert(Emit::json);
      return cmd_verify(config, verify_options, out);
    }
    if (scan_cmd->parsed()) {
      auto axis = [](std::optional<double> lo, std::optional<double> hi, int n, const char* what) {
        ScanAxis s;
        if (lo || hi) {
          if (!lo || !hi) throw DomainError(std::string("scan: ") + what + " needs both ends");
          s = {*lo, *hi, n, true};
        }
        return s;
      };
      scan.r = axis(from, to, steps, "--from/--to");
      scan.a = axis(a_from, a_to, a_steps, "--a-from/--a-to");
      scan.r0 = axis(r0_from, r0_to, r0_steps, "--r0-from/--r0-to");
      scan.lambda = axis(l_from, l_to, l_steps, "--lambda-from/--lambda-to");
      scan.p = axis(p_from, p_to, p_steps, "--p-from/--p-to");
      const bool one_d = scan.function == "f" || scan.function == "g" || scan.function == "c";
      if (one_d && (scan.a.active || scan.r0.active || scan.lambda.active || scan.p.active))
        throw DomainError("scan " + scan.function + " takes --from/--to/--steps only");
      if (!one_d && scan.r.active) throw DomainError("scan " + scan.function + " takes parameter axes, not --from/--to");
      if (config.emit.empty()) config.emit.insert(Emit::csv);
      return cmd_scan(config, scan, out, err);
    }
    return exit_usage;
  } catch (const CaseIIInfeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return exit_infeasible;
  } catch (const EmptyFeasibleSet& e) {
    err << "infeasible: " << e.what() << "\n";
    return exit_infeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace kakeya::cli
