#pragma once

#include "splitric/lifecycle.hpp"
#include "splitric/profiles.hpp"

#include <map>
#include <optional>
#include <string>

namespace splitric {

enum class Objective { Energy, Latency };

const char* objective_name(Objective o);  // "energy" / "latency"

enum class BoundaryCondition { EdgeAdvantage, LinkEfficiency, ContinuityGain };

const char* boundary_condition_name(BoundaryCondition c);

/// Outcome of one dominance inequality. `holds` iff margin = rhs - lhs > 0
/// (strict; ties resolve to the simpler architecture). Units are joules for
/// the two energy conditions, seconds for the continuity condition.
struct BoundaryVerdict {
  BoundaryCondition condition;
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  const char* units = "";
};

/// S2-vs-S1 per-operation energy: on-board inference cheaper than streaming
/// the raw input over the feeder link.
BoundaryVerdict edge_advantage(const Topology& topo, const WorkloadProfile& w);

/// S3-vs-S2 training-offload energy: ISL offload plus the full GEO-side cost
/// cheaper than the RF offload to ground.
BoundaryVerdict link_efficiency(const Topology& topo, const WorkloadProfile& w);

/// S3-vs-ground latency: ground wait time exceeds the GEO overhead net of
/// the ground overhead. Uses a single wait term, matching the stated
/// inequality; the full-lifecycle forms carry 2x the wait for S2.
BoundaryVerdict continuity_gain(const Topology& topo, const WorkloadProfile& w);

/// Winner of the per-objective scenario comparison, with totals and
/// winner-vs-loser margins. Scenarios the topology cannot evaluate are
/// skipped and `partial` is set.
struct RegionLabel {
  Objective objective;
  Scenario winner;
  std::map<Scenario, double> totals;
  std::map<Scenario, double> margins;  // loser total - winner total, >= 0
  bool partial = false;
};

RegionLabel classify(const Topology& topo, const WorkloadProfile& w, Objective objective);

/// Sweepable axes for crossover solving. Each maps to one canonical
/// parameter path.
enum class Axis { InputSize, Complexity, Longevity, WaitTime, UplinkRate };

const char* axis_name(Axis a);
const char* axis_param_path(Axis a);
Axis axis_from_name(std::string_view name);

enum class SolveMethod { ClosedForm, Bisection };

struct CrossoverRequest {
  Axis axis = Axis::InputSize;
  Objective objective = Objective::Energy;
  Scenario first = Scenario::S1GroundCentric;
  Scenario second = Scenario::S2SplitRic;
  bool per_op = false;  // compare marginal per-inference cost instead of lifecycle totals
  double lo = 0.0;
  double hi = 0.0;
  SolveMethod method = SolveMethod::ClosedForm;
};

struct CrossoverResult {
  Axis axis;
  Objective objective;
  Scenario first;
  Scenario second;
  bool per_op = false;
  bool bracketed = false;
  std::optional<double> value;  // canonical units; absent when no crossover
  SolveMethod method = SolveMethod::ClosedForm;
  double residual = 0.0;     // objective difference at the solution
  int unbracketed_sign = 0;  // sign of first-second that held over [lo, hi]
};

/// Objective difference first - second at axis value x (all other
/// parameters fixed). This is the function whose root the solver locates;
/// also used by the brute-force verification grid.
double crossover_difference(const Topology& topo, const WorkloadProfile& w,
                            const CrossoverRequest& req, double x);

/// Solves for the axis value where the two scenarios' costs are equal.
/// The difference is affine in the axis (or in 1/rate for UplinkRate), so
/// the closed form is exact; bisection (rel. tol 1e-9, 200 iterations max)
/// is available as an independent route. Returns an unbracketed result when
/// the difference does not change sign over [lo, hi].
CrossoverResult solve_crossover(const Topology& topo, const WorkloadProfile& w,
                                const CrossoverRequest& req);

struct PowerBudgetVerdict {
  double average_power = 0.0;  // W, duty-cycled average
  bool unbounded = false;      // node has no power cap
  bool within_budget = true;
};

/// Average-power check for sustained inference at `inference_rate` events/s.
PowerBudgetVerdict power_budget_check(const NodeProfile& node, const WorkloadProfile& w,
                                      double inference_rate);

}  // namespace splitric
