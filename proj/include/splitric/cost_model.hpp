#pragma once

#include "splitric/profiles.hpp"

#include <cmath>

namespace splitric {

enum class Direction { Uplink, Downlink };
enum class Role { Transmit, Receive };

/// Energy (J) to execute a workload of `flops` FLOP on `node`.
inline double compute_energy(double flops, const NodeProfile& node) {
  return flops * node.energy_per_flop;
}

/// Time (s) to execute a workload of `flops` FLOP on `node`.
inline double compute_latency(double flops, const NodeProfile& node) {
  return flops / node.compute_capacity;
}

/// Energy (J) to move `bits` over `link`. Zero when source and processing
/// node coincide or the link is the on-board internal bus.
inline double comm_energy(double bits, const LinkProfile& link, Direction dir,
                          Role role, bool co_located) {
  if (co_located || link.kind == LinkKind::InternalBus) return 0.0;
  const double power = (role == Role::Transmit) ? link.tx_power : link.rx_power;
  const double rate = (dir == Direction::Uplink) ? link.uplink_rate : link.downlink_rate;
  return power * bits / rate;
}

/// Serialization plus one-way propagation delay (s) for `bits` over `link`.
inline double comm_latency(double bits, const LinkProfile& link, Direction dir,
                           bool co_located) {
  if (co_located || link.kind == LinkKind::InternalBus) return 0.0;
  const double rate = (dir == Direction::Uplink) ? link.uplink_rate : link.downlink_rate;
  return bits / rate + link.rtt / 2.0;
}

/// Shannon capacity: achievable rate (bit/s) for a given bandwidth and
/// linear SNR.
inline double shannon_rate(double bandwidth_hz, double snr_linear) {
  return bandwidth_hz * std::log2(1.0 + snr_linear);
}

}  // namespace splitric
