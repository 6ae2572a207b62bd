#pragma once

#include "splitric/feasibility.hpp"

#include <set>
#include <string>
#include <vector>

namespace splitric {

enum class Spacing { Linear, Logarithmic };

/// One swept parameter: a path-addressed field, a range in canonical units,
/// and a grid.
struct AxisSpec {
  std::string parameter;  // e.g. "workload.inference.input_size"
  double lo = 0.0;
  double hi = 0.0;
  int points = 2;
  Spacing spacing = Spacing::Linear;
};

/// Grid values for an axis, ascending, endpoints included.
/// Throws std::invalid_argument on lo >= hi, points < 2, or a
/// non-positive lower bound with logarithmic spacing.
std::vector<double> grid_values(const AxisSpec& axis);

struct SweepRow {
  double axis_value = 0.0;
  // Indexed by scenario; absent scenarios carry present = false.
  struct PerScenario {
    bool present = false;
    double energy = 0.0;
    double latency = 0.0;
  } scenario[3];
  Scenario winner_energy = Scenario::S1GroundCentric;
  Scenario winner_latency = Scenario::S1GroundCentric;
};

struct SweepResult {
  AxisSpec axis;
  std::vector<SweepRow> rows;
  std::vector<std::string> skipped;  // grid values rejected by hard invariants
};

/// One row per grid point, everything else held fixed. Grid values that
/// violate hard type invariants are skipped and reported, so the full
/// published parameter ranges stay sweepable.
SweepResult run_sweep(const AxisSpec& axis, const Topology& topo, const WorkloadProfile& w,
                      const std::set<Scenario>& scenarios);

struct EnergyMapCell {
  double x = 0.0;  // input size, bits
  double y = 0.0;  // inference complexity, FLOP
  Scenario winner = Scenario::S1GroundCentric;
};

/// Energy feasibility map over input size (x) and inference complexity (y).
/// Cells are labeled by the energy classifier over {S1, S2}, optionally
/// including S3. Row-major in y then x, complete grid.
std::vector<EnergyMapCell> run_energy_map(const AxisSpec& x, const AxisSpec& y,
                                          const Topology& topo, const WorkloadProfile& w,
                                          bool include_s3 = false);

enum class LatencyMapLabel { S2, S3, Infeasible };

const char* latency_map_label_name(LatencyMapLabel l);

struct LatencyMapCell {
  double x = 0.0;  // ground wait time, s
  double y = 0.0;  // update deadline, s (reciprocal of required update frequency)
  LatencyMapLabel label = LatencyMapLabel::Infeasible;
};

/// Latency feasibility map over wait time (x) and update deadline (y).
/// S2 if its lifecycle latency meets the deadline, else S3 if its lifecycle
/// latency does, else Infeasible.
std::vector<LatencyMapCell> run_latency_map(const AxisSpec& wait_axis,
                                            const AxisSpec& deadline_axis,
                                            const Topology& topo, const WorkloadProfile& w);

/// Brute-force confirmation of an analytic crossover: scans the objective
/// difference on a dense grid and checks for exactly one sign change within
/// one grid step of the solver's value.
struct OracleReport {
  int sign_changes = 0;
  double grid_crossing = 0.0;  // midpoint of the sign-change interval
  double grid_step = 0.0;      // local step at the crossing
  double deviation = 0.0;      // |grid_crossing - solver value|
  bool ok = false;
  std::string detail;
};

OracleReport oracle_verify(const CrossoverResult& cross, const CrossoverRequest& req,
                           const Topology& topo, const WorkloadProfile& w,
                           int grid_points = 10000, Spacing spacing = Spacing::Linear);

/// Deterministic CSV emission (LF line endings, full-precision scientific
/// notation, canonical-unit column names).
std::string sweep_to_csv(const SweepResult& result);
std::string energy_map_to_csv(const std::vector<EnergyMapCell>& cells);
std::string latency_map_to_csv(const std::vector<LatencyMapCell>& cells);

}  // namespace splitric
