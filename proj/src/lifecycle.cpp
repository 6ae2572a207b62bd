#include "splitric/lifecycle.hpp"

#include "splitric/cost_model.hpp"

#include <stdexcept>

namespace splitric {

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::S1GroundCentric: return "S1";
    case Scenario::S2SplitRic: return "S2";
    case Scenario::S3MultiLayer: return "S3";
  }
  return "?";
}

namespace {

const LinkProfile& require_isl(const Topology& topo) {
  if (!topo.isl || !topo.geo)
    throw std::invalid_argument("scenario S3 requires a GEO node and an ISL link");
  return *topo.isl;
}

double sum_energy(EnergyBreakdown& b) {
  return b.training_offload + b.model_transfer + b.inference_total +
         b.geo_training_compute + b.geo_dataset_rx + b.geo_model_tx;
}

double sum_latency(LatencyBreakdown& b) {
  return b.wait + b.data_upload + b.training_compute + b.model_download +
         b.inference_total + b.propagation;
}

}  // namespace

EnergyBreakdown lifecycle_energy(Scenario s, const Topology& topo, const WorkloadProfile& w) {
  EnergyBreakdown b;
  b.scenario = s;
  const LinkProfile& feeder = topo.feeder;
  switch (s) {
    case Scenario::S1GroundCentric:
      // Satellite energy is pure communication: dataset offload plus raw
      // telemetry streaming for every inference event. Ground compute is
      // charged to the grid, not the battery.
      b.training_offload =
          comm_energy(w.training.dataset_size, feeder, Direction::Uplink, Role::Transmit, false);
      b.inference_total =
          w.longevity *
          comm_energy(w.inference.input_size, feeder, Direction::Uplink, Role::Transmit, false);
      break;
    case Scenario::S2SplitRic:
      b.training_offload =
          comm_energy(w.training.dataset_size, feeder, Direction::Uplink, Role::Transmit, false);
      b.model_transfer =
          comm_energy(w.model_size, feeder, Direction::Downlink, Role::Receive, false);
      b.inference_total = w.longevity * compute_energy(w.inference.complexity, topo.leo);
      break;
    case Scenario::S3MultiLayer: {
      const LinkProfile& isl = require_isl(topo);
      b.inference_total = w.longevity * compute_energy(w.inference.complexity, topo.leo);
      b.training_offload =
          comm_energy(w.training.dataset_size, isl, Direction::Uplink, Role::Transmit, false);
      b.model_transfer =
          comm_energy(w.model_size, isl, Direction::Downlink, Role::Receive, false);
      b.geo_training_compute = compute_energy(w.training.complexity, *topo.geo);
      b.geo_dataset_rx =
          comm_energy(w.training.dataset_size, isl, Direction::Uplink, Role::Receive, false);
      b.geo_model_tx =
          comm_energy(w.model_size, isl, Direction::Downlink, Role::Transmit, false);
      break;
    }
  }
  b.total = sum_energy(b);
  return b;
}

LatencyBreakdown lifecycle_latency(Scenario s, const Topology& topo, const WorkloadProfile& w) {
  LatencyBreakdown b;
  b.scenario = s;
  const LinkProfile& feeder = topo.feeder;
  switch (s) {
    case Scenario::S1GroundCentric:
      b.wait = feeder.wait_time;
      b.data_upload = w.training.dataset_size / feeder.uplink_rate;
      b.training_compute = compute_latency(w.training.complexity, topo.ground);
      b.inference_total =
          w.longevity * (feeder.rtt + w.inference.input_size / feeder.uplink_rate);
      break;
    case Scenario::S2SplitRic:
      // Double wait penalty: one pass to upload the dataset, one to get the
      // trained model back.
      b.wait = 2.0 * feeder.wait_time;
      b.data_upload = w.training.dataset_size / feeder.uplink_rate;
      b.training_compute = compute_latency(w.training.complexity, topo.ground);
      b.inference_total = w.longevity * compute_latency(w.inference.complexity, topo.leo);
      break;
    case Scenario::S3MultiLayer: {
      const LinkProfile& isl = require_isl(topo);
      b.wait = 0.0;
      b.propagation = isl.rtt;
      b.data_upload = w.training.dataset_size / isl.uplink_rate;
      b.training_compute = compute_latency(w.training.complexity, *topo.geo);
      b.inference_total = w.longevity * compute_latency(w.inference.complexity, topo.leo);
      break;
    }
  }
  b.total = sum_latency(b);
  return b;
}

double amortized_energy_per_inference(Scenario s, const Topology& topo, const WorkloadProfile& w) {
  return lifecycle_energy(s, topo, w).total / w.longevity;
}

LoopResult control_loop_latency(Scenario s, const Topology& topo, const WorkloadProfile& w) {
  double latency = 0.0;
  switch (s) {
    case Scenario::S1GroundCentric:
      latency = topo.feeder.rtt +
                w.inference.input_size / topo.feeder.uplink_rate +
                w.inference.output_size / topo.feeder.downlink_rate +
                compute_latency(w.inference.complexity, topo.ground);
      break;
    case Scenario::S2SplitRic:
    case Scenario::S3MultiLayer:
      // Inference is local to the LEO node; E2 is the internal bus.
      latency = compute_latency(w.inference.complexity, topo.leo);
      break;
  }
  return LoopResult{latency, latency <= w.inference.deadline};
}

}  // namespace splitric
