#pragma once

#include "splitric/profiles.hpp"

namespace splitric {

/// The three deployment architectures under comparison.
enum class Scenario { S1GroundCentric, S2SplitRic, S3MultiLayer };

const char* scenario_name(Scenario s);  // "S1", "S2", "S3"

/// Per-phase lifecycle energy, joules. Components not used by a scenario are
/// reported as zero so downstream schemas are scenario-independent.
/// total is the sum of the six components in declaration order.
struct EnergyBreakdown {
  Scenario scenario;
  double training_offload = 0.0;      // dataset transmit from LEO
  double model_transfer = 0.0;        // model receive at LEO
  double inference_total = 0.0;       // N_inf inference events
  double geo_training_compute = 0.0;  // S3 only
  double geo_dataset_rx = 0.0;        // S3 only
  double geo_model_tx = 0.0;          // S3 only
  double total = 0.0;
};

/// Per-phase lifecycle latency, seconds. model_download is always zero: the
/// closed forms charge the model return path to the second wait window, not
/// to serialization time.
struct LatencyBreakdown {
  Scenario scenario;
  double wait = 0.0;
  double data_upload = 0.0;
  double training_compute = 0.0;
  double model_download = 0.0;
  double inference_total = 0.0;
  double propagation = 0.0;  // S3 ISL round trip
  double total = 0.0;
};

/// Lifecycle energy for one learning-to-inference cycle.
/// Throws std::invalid_argument if the topology lacks what the scenario
/// needs (GEO node + ISL for S3).
EnergyBreakdown lifecycle_energy(Scenario s, const Topology& topo, const WorkloadProfile& w);

/// Lifecycle latency for one learning-to-inference cycle. S1 carries one
/// ground wait, S2 two (upload pass plus model-return pass), S3 none.
LatencyBreakdown lifecycle_latency(Scenario s, const Topology& topo, const WorkloadProfile& w);

/// Lifecycle energy total divided by model longevity.
double amortized_energy_per_inference(Scenario s, const Topology& topo, const WorkloadProfile& w);

struct LoopResult {
  double latency = 0.0;  // s, one control decision
  bool deadline_met = false;
};

/// Per-decision control-loop latency. S1 closes the loop through the feeder
/// link (RTT + telemetry up + command down + ground compute); S2/S3 run
/// inference locally over the internal bus.
LoopResult control_loop_latency(Scenario s, const Topology& topo, const WorkloadProfile& w);

}  // namespace splitric
