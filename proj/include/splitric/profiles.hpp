#pragma once

#include <optional>
#include <string>
#include <vector>

namespace splitric {

enum class NodeKind { Ground, Leo, Geo };

/// A compute site: capacity F (FLOP/s), power cap P_max (W, absent means
/// unbounded), and hardware efficiency epsilon (J/FLOP).
struct NodeProfile {
  std::string id;
  NodeKind kind = NodeKind::Ground;
  double compute_capacity = 0.0;          // FLOP/s
  std::optional<double> power_budget;     // W
  double energy_per_flop = 0.0;           // J/FLOP
};

enum class LinkKind { FeederRf, OpticalIsl, InternalBus };

/// A transport between nodes. InternalBus models the on-board E2 path:
/// zero RTT, zero wait, zero comm energy.
struct LinkProfile {
  std::string id;
  LinkKind kind = LinkKind::FeederRf;
  double uplink_rate = 0.0;    // bit/s
  double downlink_rate = 0.0;  // bit/s
  double tx_power = 0.0;       // W
  double rx_power = 0.0;       // W
  double rtt = 0.0;            // s
  double wait_time = 0.0;      // s, mean delay to next visibility window
};

struct InferenceProfile {
  double input_size = 0.0;   // bits per inference event
  double output_size = 0.0;  // bits per control command
  double complexity = 0.0;   // FLOP per forward pass
  double deadline = 0.0;     // s, hard control-loop deadline
};

struct TrainingProfile {
  double dataset_size = 0.0;  // bits
  double complexity = 0.0;    // FLOP for one full training run
};

/// Composite AI task: inference profile, training profile, model artifact
/// size, and longevity (inference events served per trained model).
struct WorkloadProfile {
  InferenceProfile inference;
  TrainingProfile training;
  double model_size = 0.0;  // bits
  double longevity = 1.0;   // inference events, >= 1
};

/// Static snapshot of the Ground/LEO/GEO segments and their links.
/// geo and isl are required only when evaluating the multi-layer scenario.
struct Topology {
  NodeProfile ground;
  NodeProfile leo;
  std::optional<NodeProfile> geo;
  LinkProfile feeder;
  std::optional<LinkProfile> isl;
  LinkProfile internal_bus;
};

// Defaults reproducing the published node and link parameter tables.
NodeProfile default_ground_node();
NodeProfile default_leo_node();
NodeProfile default_geo_node();
LinkProfile default_feeder_link();
LinkProfile default_isl_link();
LinkProfile default_internal_bus();
Topology default_topology();
WorkloadProfile default_workload();

/// Checks hard invariants (throws std::invalid_argument on violation) and
/// returns soft-assumption warnings (output size vs input size, dataset size
/// vs input size) without rejecting.
std::vector<std::string> validate(const Topology& topo, const WorkloadProfile& w);

}  // namespace splitric
