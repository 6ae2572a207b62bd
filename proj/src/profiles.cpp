#include "splitric/profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace splitric {

NodeProfile default_ground_node() {
  // Cloud GPU cluster: 1 PFLOPS, 200 pJ/FLOP, no power cap (grid-powered).
  return NodeProfile{"ground", NodeKind::Ground, 1e15, std::nullopt, 200e-12};
}

NodeProfile default_leo_node() {
  // Rad-hard FPGA edge accelerator: 10 TFLOPS, 20 pJ/FLOP, 20 W budget.
  return NodeProfile{"leo", NodeKind::Leo, 1e13, 20.0, 20e-12};
}

NodeProfile default_geo_node() {
  // Space DSP hub: 200 TFLOPS, 100 pJ/FLOP, 1 kW budget.
  return NodeProfile{"geo", NodeKind::Geo, 2e14, 1000.0, 100e-12};
}

LinkProfile default_feeder_link() {
  LinkProfile l;
  l.id = "feeder";
  l.kind = LinkKind::FeederRf;
  l.uplink_rate = 500e6;
  l.downlink_rate = 500e6;
  l.tx_power = 15.0;
  l.rx_power = 5.0;
  l.rtt = 20e-3;
  l.wait_time = 600.0;  // 10 min, low end of the LEO revisit range
  return l;
}

LinkProfile default_isl_link() {
  LinkProfile l;
  l.id = "isl";
  l.kind = LinkKind::OpticalIsl;
  l.uplink_rate = 10e9;
  l.downlink_rate = 10e9;
  l.tx_power = 2.0;
  l.rx_power = 2.0;
  l.rtt = 240e-3;  // 2 x 120 ms one-way GEO relay delay
  l.wait_time = 0.0;
  return l;
}

LinkProfile default_internal_bus() {
  LinkProfile l;
  l.id = "internal";
  l.kind = LinkKind::InternalBus;
  l.uplink_rate = 1e12;
  l.downlink_rate = 1e12;
  l.tx_power = 0.0;
  l.rx_power = 0.0;
  l.rtt = 0.0;
  l.wait_time = 0.0;
  return l;
}

Topology default_topology() {
  Topology t;
  t.ground = default_ground_node();
  t.leo = default_leo_node();
  t.geo = default_geo_node();
  t.feeder = default_feeder_link();
  t.isl = default_isl_link();
  t.internal_bus = default_internal_bus();
  return t;
}

WorkloadProfile default_workload() {
  WorkloadProfile w;
  w.inference.input_size = 4e7;    // 5 MB spectrogram snapshot
  w.inference.output_size = 8e3;   // 1 kB control command
  w.inference.complexity = 1e9;    // 1 GFLOP forward pass
  w.inference.deadline = 10e-3;
  w.training.dataset_size = 1e10;  // 10 Gbit
  w.training.complexity = 1.5e14;  // calibrated training run
  w.model_size = 50e6;             // 50 Mbit compressed weights
  w.longevity = 1e5;
  return w;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("profile invariant violated: ") + what);
}

void check_node(const NodeProfile& n) {
  require(std::isfinite(n.compute_capacity) && n.compute_capacity > 0, "node compute_capacity > 0");
  require(std::isfinite(n.energy_per_flop) && n.energy_per_flop > 0, "node energy_per_flop > 0");
  if (n.power_budget) require(std::isfinite(*n.power_budget) && *n.power_budget > 0, "node power_budget > 0");
}

void check_link(const LinkProfile& l) {
  require(std::isfinite(l.uplink_rate) && l.uplink_rate > 0, "link uplink_rate > 0");
  require(std::isfinite(l.downlink_rate) && l.downlink_rate > 0, "link downlink_rate > 0");
  require(l.rtt >= 0, "link rtt >= 0");
  require(l.wait_time >= 0, "link wait_time >= 0");
  require(l.tx_power >= 0, "link tx_power >= 0");
  require(l.rx_power >= 0, "link rx_power >= 0");
  if (l.kind == LinkKind::InternalBus) {
    require(l.rtt == 0 && l.wait_time == 0, "internal bus has zero rtt and wait");
    require(l.tx_power == 0 && l.rx_power == 0, "internal bus has zero comm power");
  }
}

}  // namespace

std::vector<std::string> validate(const Topology& topo, const WorkloadProfile& w) {
  check_node(topo.ground);
  check_node(topo.leo);
  if (topo.geo) check_node(*topo.geo);
  check_link(topo.feeder);
  if (topo.isl) check_link(*topo.isl);
  check_link(topo.internal_bus);

  require(w.inference.input_size > 0, "input_size > 0");
  require(w.inference.output_size >= 0, "output_size >= 0");
  require(w.inference.complexity > 0, "inference complexity > 0");
  require(w.inference.deadline > 0, "deadline > 0");
  require(w.training.dataset_size > 0, "dataset_size > 0");
  require(w.training.complexity > 0, "training complexity > 0");
  require(w.model_size > 0, "model_size > 0");
  require(w.longevity >= 1, "longevity >= 1");

  std::vector<std::string> warnings;
  if (w.inference.output_size >= w.inference.input_size)
    warnings.push_back("output_size is not small relative to input_size");
  if (w.training.dataset_size <= w.inference.input_size)
    warnings.push_back("dataset_size is not strictly greater than input_size");
  return warnings;
}

}  // namespace splitric
