#include "splitric/sweep.hpp"

#include "splitric/param_path.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace splitric {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17e", v);
  return buf;
}

const char* dim_suffix(Dimension d) {
  switch (d) {
    case Dimension::Bits: return "bits";
    case Dimension::BitsPerSecond: return "bit_per_s";
    case Dimension::Seconds: return "s";
    case Dimension::Joules: return "J";
    case Dimension::Watts: return "W";
    case Dimension::Flop: return "flop";
    case Dimension::FlopPerSecond: return "flop_per_s";
    case Dimension::JoulesPerFlop: return "J_per_flop";
    case Dimension::Hertz: return "Hz";
    case Dimension::Scalar: return "";
  }
  return "";
}

std::string axis_column_name(const std::string& param) {
  const size_t dot = param.rfind('.');
  std::string name = (dot == std::string::npos) ? param : param.substr(dot + 1);
  const char* suffix = dim_suffix(param_dimension(param));
  if (suffix[0] != '\0') name += std::string("_") + suffix;
  return name;
}

int scenario_index(Scenario s) { return static_cast<int>(s); }

}  // namespace

std::vector<double> grid_values(const AxisSpec& axis) {
  if (!(axis.lo < axis.hi))
    throw std::invalid_argument("axis range must satisfy lo < hi");
  if (axis.points < 2)
    throw std::invalid_argument("axis needs at least 2 points");
  if (axis.spacing == Spacing::Logarithmic && !(axis.lo > 0))
    throw std::invalid_argument("logarithmic axis requires lo > 0");

  std::vector<double> values(axis.points);
  const int n = axis.points;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    values[i] = (axis.spacing == Spacing::Linear)
                    ? axis.lo + t * (axis.hi - axis.lo)
                    : std::exp(std::log(axis.lo) + t * (std::log(axis.hi) - std::log(axis.lo)));
  }
  values.front() = axis.lo;
  values.back() = axis.hi;
  return values;
}

SweepResult run_sweep(const AxisSpec& axis, const Topology& topo, const WorkloadProfile& w,
                      const std::set<Scenario>& scenarios) {
  if (scenarios.empty()) throw std::invalid_argument("empty scenario set");
  param_dimension(axis.parameter);  // reject unknown paths up front

  SweepResult result;
  result.axis = axis;
  for (double x : grid_values(axis)) {
    Topology t = topo;
    WorkloadProfile wl = w;
    try {
      set_param(t, wl, axis.parameter, x);
      validate(t, wl);  // warnings ignored; hard violations throw
    } catch (const std::invalid_argument& e) {
      result.skipped.push_back(fmt(x) + std::string(": ") + e.what());
      continue;
    }
    SweepRow row;
    row.axis_value = x;
    bool have_winner = false;
    for (Scenario s : scenarios) {
      if (s == Scenario::S3MultiLayer && (!t.geo || !t.isl)) continue;
      auto& cell = row.scenario[scenario_index(s)];
      cell.present = true;
      cell.energy = lifecycle_energy(s, t, wl).total;
      cell.latency = lifecycle_latency(s, t, wl).total;
      // Ascending scenario order plus strict < keeps the simpler
      // architecture on ties, matching classify.
      if (!have_winner) {
        row.winner_energy = row.winner_latency = s;
        have_winner = true;
      } else {
        if (cell.energy < row.scenario[scenario_index(row.winner_energy)].energy)
          row.winner_energy = s;
        if (cell.latency < row.scenario[scenario_index(row.winner_latency)].latency)
          row.winner_latency = s;
      }
    }
    if (!have_winner) {
      result.skipped.push_back(fmt(x) + std::string(": no evaluable scenario"));
      continue;
    }
    result.rows.push_back(row);
  }
  return result;
}

std::vector<EnergyMapCell> run_energy_map(const AxisSpec& x, const AxisSpec& y,
                                          const Topology& topo, const WorkloadProfile& w,
                                          bool include_s3) {
  const std::vector<double> xs = grid_values(x);
  const std::vector<double> ys = grid_values(y);
  std::vector<EnergyMapCell> cells;
  cells.reserve(xs.size() * ys.size());
  for (double yv : ys) {
    for (double xv : xs) {
      Topology t = topo;
      WorkloadProfile wl = w;
      set_param(t, wl, x.parameter, xv);
      set_param(t, wl, y.parameter, yv);
      Scenario winner = Scenario::S1GroundCentric;
      double best = lifecycle_energy(winner, t, wl).total;
      std::vector<Scenario> rest = {Scenario::S2SplitRic};
      if (include_s3 && t.geo && t.isl) rest.push_back(Scenario::S3MultiLayer);
      for (Scenario s : rest) {
        const double e = lifecycle_energy(s, t, wl).total;
        if (e < best) {
          best = e;
          winner = s;
        }
      }
      cells.push_back(EnergyMapCell{xv, yv, winner});
    }
  }
  return cells;
}

const char* latency_map_label_name(LatencyMapLabel l) {
  switch (l) {
    case LatencyMapLabel::S2: return "S2";
    case LatencyMapLabel::S3: return "S3";
    case LatencyMapLabel::Infeasible: return "Infeasible";
  }
  return "?";
}

std::vector<LatencyMapCell> run_latency_map(const AxisSpec& wait_axis,
                                            const AxisSpec& deadline_axis,
                                            const Topology& topo, const WorkloadProfile& w) {
  const std::vector<double> waits = grid_values(wait_axis);
  const std::vector<double> deadlines = grid_values(deadline_axis);
  std::vector<LatencyMapCell> cells;
  cells.reserve(waits.size() * deadlines.size());
  for (double deadline : deadlines) {
    for (double wait : waits) {
      Topology t = topo;
      WorkloadProfile wl = w;
      set_param(t, wl, "links.feeder.wait_time", wait);
      const double t_s2 = lifecycle_latency(Scenario::S2SplitRic, t, wl).total;
      LatencyMapLabel label;
      if (t_s2 <= deadline) {
        label = LatencyMapLabel::S2;
      } else if (t.geo && t.isl &&
                 lifecycle_latency(Scenario::S3MultiLayer, t, wl).total <= deadline) {
        label = LatencyMapLabel::S3;
      } else {
        label = LatencyMapLabel::Infeasible;
      }
      cells.push_back(LatencyMapCell{wait, deadline, label});
    }
  }
  return cells;
}

OracleReport oracle_verify(const CrossoverResult& cross, const CrossoverRequest& req,
                           const Topology& topo, const WorkloadProfile& w,
                           int grid_points, Spacing spacing) {
  AxisSpec axis;
  axis.parameter = axis_param_path(req.axis);
  axis.lo = req.lo;
  axis.hi = req.hi;
  axis.points = grid_points;
  axis.spacing = spacing;

  OracleReport report;
  const std::vector<double> xs = grid_values(axis);
  double prev = crossover_difference(topo, w, req, xs[0]);
  for (size_t i = 1; i < xs.size(); ++i) {
    const double cur = crossover_difference(topo, w, req, xs[i]);
    if ((prev > 0) != (cur > 0) || prev == 0.0) {
      ++report.sign_changes;
      report.grid_crossing = 0.5 * (xs[i - 1] + xs[i]);
      report.grid_step = xs[i] - xs[i - 1];
    }
    prev = cur;
  }

  if (!cross.bracketed) {
    report.ok = report.sign_changes == 0;
    report.detail = report.ok ? "no crossing, consistent with solver"
                              : "solver reported no crossing but the grid found one";
    return report;
  }
  if (report.sign_changes != 1) {
    report.detail = "expected exactly one sign change, found " +
                    std::to_string(report.sign_changes);
    return report;
  }
  report.deviation = std::abs(report.grid_crossing - cross.value.value());
  report.ok = report.deviation <= report.grid_step;
  report.detail = report.ok ? "grid crossing within one step of solver value"
                            : "grid crossing deviates by more than one step";
  return report;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string out = axis_column_name(result.axis.parameter);
  const char* names[3] = {"s1", "s2", "s3"};
  bool present[3] = {false, false, false};
  for (const SweepRow& row : result.rows)
    for (int i = 0; i < 3; ++i) present[i] = present[i] || row.scenario[i].present;
  for (int i = 0; i < 3; ++i)
    if (present[i]) {
      out += ",";
      out += names[i];
      out += "_energy_J,";
      out += names[i];
      out += "_latency_s";
    }
  out += ",winner_energy,winner_latency\n";
  for (const SweepRow& row : result.rows) {
    out += fmt(row.axis_value);
    for (int i = 0; i < 3; ++i) {
      if (!present[i]) continue;
      if (row.scenario[i].present)
        out += "," + fmt(row.scenario[i].energy) + "," + fmt(row.scenario[i].latency);
      else
        out += ",,";
    }
    out += ",";
    out += scenario_name(row.winner_energy);
    out += ",";
    out += scenario_name(row.winner_latency);
    out += "\n";
  }
  return out;
}

std::string energy_map_to_csv(const std::vector<EnergyMapCell>& cells) {
  std::string out = "input_size_bits,complexity_flop,winner\n";
  for (const EnergyMapCell& c : cells) {
    out += fmt(c.x) + "," + fmt(c.y) + ",";
    out += scenario_name(c.winner);
    out += "\n";
  }
  return out;
}

std::string latency_map_to_csv(const std::vector<LatencyMapCell>& cells) {
  std::string out = "wait_time_s,update_deadline_s,label\n";
  for (const LatencyMapCell& c : cells) {
    out += fmt(c.x) + "," + fmt(c.y) + ",";
    out += latency_map_label_name(c.label);
    out += "\n";
  }
  return out;
}

}  // namespace splitric
