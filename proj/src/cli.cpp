#include "splitric/cli.hpp"

#include "splitric/config.hpp"
#include "splitric/json_out.hpp"
#include "splitric/param_path.hpp"
#include "splitric/quantity.hpp"
#include "splitric/sweep.hpp"
#include "splitric/validate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace splitric {

namespace {

Scenario parse_scenario(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), ::tolower);
  if (s == "s1") return Scenario::S1GroundCentric;
  if (s == "s2") return Scenario::S2SplitRic;
  if (s == "s3") return Scenario::S3MultiLayer;
  throw CLI::ValidationError("--scenario", "expected s1, s2, or s3");
}

Objective parse_objective(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), ::tolower);
  if (s == "energy") return Objective::Energy;
  if (s == "latency") return Objective::Latency;
  throw CLI::ValidationError("--objective", "expected energy or latency");
}

Axis parse_axis(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return axis_from_name(s);
}

double parse_bound(const std::string& text, Axis axis) {
  const Quantity q = parse_quantity(text);
  const Dimension expected = param_dimension(axis_param_path(axis));
  if (q.dim != expected && q.dim != Dimension::Scalar)
    throw std::invalid_argument("bound \"" + text + "\" has the wrong dimension for axis " +
                                axis_name(axis));
  return q.value;
}

struct AxisDefaults {
  double lo, hi;
};

AxisDefaults default_range(Axis a) {
  switch (a) {
    case Axis::InputSize: return {8e4, 4e8};      // 10 kB .. 50 MB
    case Axis::Complexity: return {1e8, 5e11};    // 0.1 .. 500 GFLOP
    case Axis::Longevity: return {1.0, 1e6};
    case Axis::WaitTime: return {0.0, 3600.0};    // 0 .. 60 min
    case Axis::UplinkRate: return {5e7, 1e9};     // 50 Mbit/s .. 1 Gbit/s
  }
  return {0.0, 1.0};
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + output_path);
  f << text;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lifecycle energy/latency feasibility analysis for split-RIC NTN deployments"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_path;
  app.add_option("--config", config_path, "Scenario configuration file (TOML)");
  app.add_option("--set", overrides, "Override parameter.path=quantity (repeatable)");
  app.add_option("--output", output_path, "Write results to this file instead of stdout");

  // cost
  auto* cost = app.add_subcommand("cost", "Lifecycle energy and latency breakdowns");
  std::string cost_scenario = "s2";
  cost->add_option("--scenario", cost_scenario, "s1, s2, or s3")->required();

  // loop
  auto* loop = app.add_subcommand("loop", "Per-decision control-loop latency");
  std::string loop_scenario = "s2";
  loop->add_option("--scenario", loop_scenario, "s1, s2, or s3")->required();

  // boundary
  auto* boundary = app.add_subcommand("boundary", "Evaluate one dominance condition");
  std::string condition;
  boundary->add_option("--condition", condition, "edge, link, or continuity")->required();

  // crossover
  auto* crossover = app.add_subcommand("crossover", "Solve a scenario crossover point");
  std::string cr_axis, cr_pair = "s1:s2", cr_objective = "energy", cr_method = "closed-form";
  std::string cr_lo, cr_hi;
  bool cr_per_op = false;
  crossover->add_option("--axis", cr_axis,
                        "input-size, complexity, longevity, wait-time, uplink-rate")
      ->required();
  crossover->add_option("--pair", cr_pair, "Scenario pair, e.g. s1:s2");
  crossover->add_option("--objective", cr_objective, "energy or latency");
  crossover->add_flag("--per-op", cr_per_op, "Compare marginal per-inference cost");
  crossover->add_option("--lo", cr_lo, "Lower search bound (quantity string)");
  crossover->add_option("--hi", cr_hi, "Upper search bound (quantity string)");
  crossover->add_option("--method", cr_method, "closed-form or bisection");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Optimal-scenario region label");
  std::string cl_objective = "energy";
  classify_cmd->add_option("--objective", cl_objective, "energy or latency")->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "1D sensitivity sweep, CSV output");
  std::string sw_param, sw_lo, sw_hi, sw_scenarios = "s1,s2,s3";
  int sw_points = 100;
  bool sw_log = false;
  sweep_cmd->add_option("--param", sw_param, "Parameter path, e.g. workload.inference.input_size")
      ->required();
  sweep_cmd->add_option("--lo", sw_lo, "Lower bound (quantity string)")->required();
  sweep_cmd->add_option("--hi", sw_hi, "Upper bound (quantity string)")->required();
  sweep_cmd->add_option("--points", sw_points, "Grid points (default 100)");
  sweep_cmd->add_flag("--log", sw_log, "Logarithmic spacing");
  sweep_cmd->add_option("--scenarios", sw_scenarios, "Comma list, default s1,s2,s3");

  // map
  auto* map_cmd = app.add_subcommand("map", "2D feasibility map, CSV output");
  std::string map_kind;
  int map_points = 50;
  bool map_include_s3 = false;
  map_cmd->add_option("--kind", map_kind, "energy or latency")->required();
  map_cmd->add_option("--points", map_points, "Grid points per axis (default 50)");
  map_cmd->add_flag("--include-s3", map_include_s3, "Include S3 in the energy map");

  // validate
  app.add_subcommand("validate", "Run the built-in validation suite");

  // preset
  auto* preset = app.add_subcommand("preset", "Emit a configuration preset");
  bool paper_defaults = false;
  preset->add_flag("--paper-defaults", paper_defaults, "Published default parameters");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 convention
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    RunConfig cfg = config_path.empty() ? parse_config_text(paper_defaults_toml())
                                        : load_config(config_path);
    for (const std::string& o : overrides) apply_override(cfg, o);
    for (const std::string& warning : cfg.warnings) err << "warning: " << warning << "\n";
    const Topology& topo = cfg.topology;
    const WorkloadProfile& w = cfg.workload;

    if (cost->parsed()) {
      const Scenario s = parse_scenario(cost_scenario);
      ordered_json j{{"energy", to_json(lifecycle_energy(s, topo, w))},
                     {"latency", to_json(lifecycle_latency(s, topo, w))},
                     {"amortized_energy_per_inference_J",
                      amortized_energy_per_inference(s, topo, w)}};
      emit(j.dump(2) + "\n", output_path, out);
    } else if (loop->parsed()) {
      const Scenario s = parse_scenario(loop_scenario);
      emit(to_json(control_loop_latency(s, topo, w), s).dump(2) + "\n", output_path, out);
    } else if (boundary->parsed()) {
      BoundaryVerdict v;
      if (condition == "edge") v = edge_advantage(topo, w);
      else if (condition == "link") v = link_efficiency(topo, w);
      else if (condition == "continuity") v = continuity_gain(topo, w);
      else {
        err << "usage error: --condition expects edge, link, or continuity\n";
        return 2;
      }
      emit(to_json(v).dump(2) + "\n", output_path, out);
    } else if (crossover->parsed()) {
      CrossoverRequest req;
      req.axis = parse_axis(cr_axis);
      req.objective = parse_objective(cr_objective);
      const size_t colon = cr_pair.find(':');
      if (colon == std::string::npos) {
        err << "usage error: --pair expects the form s1:s2\n";
        return 2;
      }
      req.first = parse_scenario(cr_pair.substr(0, colon));
      req.second = parse_scenario(cr_pair.substr(colon + 1));
      req.per_op = cr_per_op;
      const AxisDefaults d = default_range(req.axis);
      req.lo = cr_lo.empty() ? d.lo : parse_bound(cr_lo, req.axis);
      req.hi = cr_hi.empty() ? d.hi : parse_bound(cr_hi, req.axis);
      if (cr_method == "bisection") req.method = SolveMethod::Bisection;
      else if (cr_method != "closed-form") {
        err << "usage error: --method expects closed-form or bisection\n";
        return 2;
      }
      const CrossoverResult res = solve_crossover(topo, w, req);
      ordered_json j = to_json(res);
      j["units"] = unit_symbol(param_dimension(axis_param_path(req.axis)));
      emit(j.dump(2) + "\n", output_path, out);
    } else if (classify_cmd->parsed()) {
      emit(to_json(classify(topo, w, parse_objective(cl_objective))).dump(2) + "\n",
           output_path, out);
    } else if (sweep_cmd->parsed()) {
      AxisSpec axis;
      axis.parameter = sw_param;
      const Dimension dim = param_dimension(sw_param);
      auto bound = [&](const std::string& text) {
        const Quantity q = parse_quantity(text);
        if (q.dim != dim && q.dim != Dimension::Scalar)
          throw std::invalid_argument("bound \"" + text + "\" has the wrong dimension for " +
                                      sw_param);
        return q.value;
      };
      axis.lo = bound(sw_lo);
      axis.hi = bound(sw_hi);
      axis.points = sw_points;
      axis.spacing = sw_log ? Spacing::Logarithmic : Spacing::Linear;
      std::set<Scenario> scenarios;
      std::stringstream ss(sw_scenarios);
      std::string tok;
      while (std::getline(ss, tok, ',')) scenarios.insert(parse_scenario(tok));
      const SweepResult result = run_sweep(axis, topo, w, scenarios);
      for (const std::string& s : result.skipped) err << "skipped: " << s << "\n";
      emit(sweep_to_csv(result), output_path, out);
    } else if (map_cmd->parsed()) {
      if (map_kind == "energy") {
        const AxisSpec x{"workload.inference.input_size", 8e4, 4e8, map_points,
                         Spacing::Logarithmic};
        const AxisSpec y{"workload.inference.complexity", 1e8, 5e11, map_points,
                         Spacing::Logarithmic};
        emit(energy_map_to_csv(run_energy_map(x, y, topo, w, map_include_s3)), output_path,
             out);
      } else if (map_kind == "latency") {
        const AxisSpec x{"links.feeder.wait_time", 0.0, 3600.0, map_points, Spacing::Linear};
        const AxisSpec y{"update_deadline", 1.0, 1e4, map_points, Spacing::Logarithmic};
        emit(latency_map_to_csv(run_latency_map(x, y, topo, w)), output_path, out);
      } else {
        err << "usage error: --kind expects energy or latency\n";
        return 2;
      }
    } else if (app.get_subcommand("validate")->parsed()) {
      std::ostringstream report;
      const int failures = run_validation(report);
      emit(report.str(), output_path, out);
      return failures == 0 ? 0 : 1;
    } else if (preset->parsed()) {
      if (!paper_defaults) {
        err << "usage error: preset requires --paper-defaults\n";
        return 2;
      }
      emit(paper_defaults_toml(), output_path, out);
    }
    return 0;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace splitric
