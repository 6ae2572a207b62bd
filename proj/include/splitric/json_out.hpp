#pragma once

#include "splitric/feasibility.hpp"
#include "splitric/lifecycle.hpp"
#include "splitric/sweep.hpp"

#include <json.hpp>

namespace splitric {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const EnergyBreakdown& b) {
  return ordered_json{
      {"scenario", scenario_name(b.scenario)},
      {"components",
       {{"training_offload", b.training_offload},
        {"model_transfer", b.model_transfer},
        {"inference_total", b.inference_total},
        {"geo_training_compute", b.geo_training_compute},
        {"geo_dataset_rx", b.geo_dataset_rx},
        {"geo_model_tx", b.geo_model_tx}}},
      {"total", b.total},
      {"units", "J"},
  };
}

inline ordered_json to_json(const LatencyBreakdown& b) {
  return ordered_json{
      {"scenario", scenario_name(b.scenario)},
      {"components",
       {{"wait", b.wait},
        {"data_upload", b.data_upload},
        {"training_compute", b.training_compute},
        {"model_download", b.model_download},
        {"inference_total", b.inference_total},
        {"propagation", b.propagation}}},
      {"total", b.total},
      {"units", "s"},
  };
}

inline ordered_json to_json(const BoundaryVerdict& v) {
  return ordered_json{
      {"condition", boundary_condition_name(v.condition)},
      {"holds", v.holds},
      {"lhs", v.lhs},
      {"rhs", v.rhs},
      {"margin", v.margin},
      {"units", v.units},
  };
}

inline ordered_json to_json(const RegionLabel& label) {
  ordered_json totals = ordered_json::object();
  for (const auto& [s, t] : label.totals) totals[scenario_name(s)] = t;
  ordered_json margins = ordered_json::object();
  for (const auto& [s, m] : label.margins) margins[scenario_name(s)] = m;
  return ordered_json{
      {"objective", objective_name(label.objective)},
      {"winner", scenario_name(label.winner)},
      {"totals", totals},
      {"margins", margins},
      {"partial", label.partial},
  };
}

inline ordered_json to_json(const CrossoverResult& r) {
  ordered_json j{
      {"axis", axis_name(r.axis)},
      {"objective", objective_name(r.objective)},
      {"pair", std::string(scenario_name(r.first)) + ":" + scenario_name(r.second)},
      {"per_op", r.per_op},
      {"bracketed", r.bracketed},
  };
  if (r.bracketed) {
    j["value"] = r.value.value();
    j["method"] = r.method == SolveMethod::ClosedForm ? "closed_form" : "bisection";
    j["residual"] = r.residual;
  } else {
    j["status"] = "no-crossover";
    j["sign"] = r.unbracketed_sign;
  }
  return j;
}

inline ordered_json to_json(const LoopResult& r, Scenario s) {
  return ordered_json{
      {"scenario", scenario_name(s)},
      {"latency_s", r.latency},
      {"deadline_met", r.deadline_met},
  };
}

inline ordered_json to_json(const PowerBudgetVerdict& v) {
  return ordered_json{
      {"average_power_W", v.average_power},
      {"unbounded", v.unbounded},
      {"within_budget", v.within_budget},
  };
}

}  // namespace splitric
