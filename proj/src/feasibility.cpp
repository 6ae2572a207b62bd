#include "splitric/feasibility.hpp"

#include "splitric/cost_model.hpp"
#include "splitric/param_path.hpp"

#include <cmath>
#include <stdexcept>

namespace splitric {

const char* objective_name(Objective o) {
  return o == Objective::Energy ? "energy" : "latency";
}

const char* boundary_condition_name(BoundaryCondition c) {
  switch (c) {
    case BoundaryCondition::EdgeAdvantage: return "edge_advantage";
    case BoundaryCondition::LinkEfficiency: return "link_efficiency";
    case BoundaryCondition::ContinuityGain: return "continuity_gain";
  }
  return "?";
}

namespace {

BoundaryVerdict make_verdict(BoundaryCondition c, double lhs, double rhs, const char* units) {
  BoundaryVerdict v;
  v.condition = c;
  v.lhs = lhs;
  v.rhs = rhs;
  v.margin = rhs - lhs;
  v.holds = v.margin > 0.0;
  v.units = units;
  return v;
}

}  // namespace

BoundaryVerdict edge_advantage(const Topology& topo, const WorkloadProfile& w) {
  const double lhs = compute_energy(w.inference.complexity, topo.leo);
  const double rhs = comm_energy(w.inference.input_size, topo.feeder, Direction::Uplink,
                                 Role::Transmit, false);
  return make_verdict(BoundaryCondition::EdgeAdvantage, lhs, rhs, "J");
}

BoundaryVerdict link_efficiency(const Topology& topo, const WorkloadProfile& w) {
  if (!topo.isl || !topo.geo)
    throw std::invalid_argument("link_efficiency requires a GEO node and an ISL link");
  const LinkProfile& isl = *topo.isl;
  const double isl_offload =
      comm_energy(w.training.dataset_size, isl, Direction::Uplink, Role::Transmit, false);
  const double geo_side =
      compute_energy(w.training.complexity, *topo.geo) +
      comm_energy(w.training.dataset_size, isl, Direction::Uplink, Role::Receive, false) +
      comm_energy(w.model_size, isl, Direction::Downlink, Role::Transmit, false);
  const double rhs = comm_energy(w.training.dataset_size, topo.feeder, Direction::Uplink,
                                 Role::Transmit, false);
  return make_verdict(BoundaryCondition::LinkEfficiency, isl_offload + geo_side, rhs, "J");
}

BoundaryVerdict continuity_gain(const Topology& topo, const WorkloadProfile& w) {
  if (!topo.isl || !topo.geo)
    throw std::invalid_argument("continuity_gain requires a GEO node and an ISL link");
  const double geo_overhead =
      topo.isl->rtt + compute_latency(w.training.complexity, *topo.geo);
  const double ground_overhead =
      topo.feeder.rtt + compute_latency(w.training.complexity, topo.ground);
  // Condition reads T_wait > GEO overhead - Ground overhead, so the wait
  // time is the rhs and the overhead gap the lhs.
  return make_verdict(BoundaryCondition::ContinuityGain, geo_overhead - ground_overhead,
                      topo.feeder.wait_time, "s");
}

RegionLabel classify(const Topology& topo, const WorkloadProfile& w, Objective objective) {
  RegionLabel label;
  label.objective = objective;
  const bool s3_evaluable = topo.geo.has_value() && topo.isl.has_value();
  label.partial = !s3_evaluable;

  auto total = [&](Scenario s) {
    return objective == Objective::Energy ? lifecycle_energy(s, topo, w).total
                                          : lifecycle_latency(s, topo, w).total;
  };
  const Scenario all[] = {Scenario::S1GroundCentric, Scenario::S2SplitRic,
                          Scenario::S3MultiLayer};
  for (Scenario s : all) {
    if (s == Scenario::S3MultiLayer && !s3_evaluable) continue;
    label.totals[s] = total(s);
  }
  // Strict < keeps the lower-indexed (simpler) scenario on ties.
  label.winner = Scenario::S1GroundCentric;
  for (const auto& [s, t] : label.totals)
    if (t < label.totals[label.winner]) label.winner = s;
  for (const auto& [s, t] : label.totals)
    if (s != label.winner) label.margins[s] = t - label.totals[label.winner];
  return label;
}

const char* axis_name(Axis a) {
  switch (a) {
    case Axis::InputSize: return "input_size";
    case Axis::Complexity: return "complexity";
    case Axis::Longevity: return "longevity";
    case Axis::WaitTime: return "wait_time";
    case Axis::UplinkRate: return "uplink_rate";
  }
  return "?";
}

const char* axis_param_path(Axis a) {
  switch (a) {
    case Axis::InputSize: return "workload.inference.input_size";
    case Axis::Complexity: return "workload.inference.complexity";
    case Axis::Longevity: return "workload.longevity";
    case Axis::WaitTime: return "links.feeder.wait_time";
    case Axis::UplinkRate: return "links.feeder.uplink_rate";
  }
  return "?";
}

Axis axis_from_name(std::string_view name) {
  for (Axis a : {Axis::InputSize, Axis::Complexity, Axis::Longevity, Axis::WaitTime,
                 Axis::UplinkRate})
    if (name == axis_name(a)) return a;
  throw std::invalid_argument("unknown axis: " + std::string(name));
}

namespace {

double scenario_cost(Scenario s, const Topology& topo, const WorkloadProfile& w,
                     Objective objective, bool per_op) {
  if (!per_op) {
    return objective == Objective::Energy ? lifecycle_energy(s, topo, w).total
                                          : lifecycle_latency(s, topo, w).total;
  }
  // Marginal cost of one more inference event. Lifecycle totals are affine
  // in longevity, so a two-point difference recovers the per-op slope.
  WorkloadProfile w1 = w;
  w1.longevity = 1.0;
  WorkloadProfile w2 = w;
  w2.longevity = 2.0;
  return scenario_cost(s, topo, w2, objective, false) -
         scenario_cost(s, topo, w1, objective, false);
}

}  // namespace

double crossover_difference(const Topology& topo, const WorkloadProfile& w,
                            const CrossoverRequest& req, double x) {
  Topology t = topo;
  WorkloadProfile wl = w;
  set_param(t, wl, axis_param_path(req.axis), x);
  const double d = scenario_cost(req.first, t, wl, req.objective, req.per_op) -
                   scenario_cost(req.second, t, wl, req.objective, req.per_op);
  if (!std::isfinite(d))
    throw std::runtime_error("non-finite objective difference during crossover solve");
  return d;
}

CrossoverResult solve_crossover(const Topology& topo, const WorkloadProfile& w,
                                const CrossoverRequest& req) {
  if (!(req.lo < req.hi) || !std::isfinite(req.lo) || !std::isfinite(req.hi))
    throw std::invalid_argument("crossover search range must satisfy lo < hi");

  CrossoverResult res;
  res.axis = req.axis;
  res.objective = req.objective;
  res.first = req.first;
  res.second = req.second;
  res.per_op = req.per_op;
  res.method = req.method;

  const double g_lo = crossover_difference(topo, w, req, req.lo);
  const double g_hi = crossover_difference(topo, w, req, req.hi);

  if (g_lo == 0.0 || g_hi == 0.0) {
    res.bracketed = true;
    res.value = (g_lo == 0.0) ? req.lo : req.hi;
    res.residual = 0.0;
    return res;
  }
  if ((g_lo > 0) == (g_hi > 0)) {
    res.bracketed = false;
    res.unbracketed_sign = g_lo > 0 ? 1 : -1;
    return res;
  }
  res.bracketed = true;

  if (req.method == SolveMethod::ClosedForm) {
    // The difference is affine in the axis value (in 1/rate for UplinkRate),
    // so two evaluations pin the root exactly.
    const bool reciprocal = req.axis == Axis::UplinkRate;
    const double u_lo = reciprocal ? 1.0 / req.lo : req.lo;
    const double u_hi = reciprocal ? 1.0 / req.hi : req.hi;
    const double u_root = u_lo - g_lo * (u_hi - u_lo) / (g_hi - g_lo);
    res.value = reciprocal ? 1.0 / u_root : u_root;
  } else {
    double lo = req.lo, hi = req.hi;
    double f_lo = g_lo;
    constexpr int kMaxIter = 200;
    constexpr double kRelTol = 1e-9;
    for (int i = 0; i < kMaxIter; ++i) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = crossover_difference(topo, w, req, mid);
      if (f_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((f_mid > 0) == (f_lo > 0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
      if (hi - lo <= kRelTol * std::abs(mid)) break;
    }
    res.value = 0.5 * (lo + hi);
  }
  res.residual = crossover_difference(topo, w, req, *res.value);
  return res;
}

PowerBudgetVerdict power_budget_check(const NodeProfile& node, const WorkloadProfile& w,
                                      double inference_rate) {
  if (inference_rate < 0)
    throw std::invalid_argument("inference_rate must be >= 0");
  PowerBudgetVerdict v;
  v.average_power = inference_rate * compute_energy(w.inference.complexity, node);
  v.unbounded = !node.power_budget.has_value();
  v.within_budget = v.unbounded || v.average_power <= *node.power_budget;
  return v;
}

}  // namespace splitric
