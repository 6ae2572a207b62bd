#pragma once

#include "splitric/profiles.hpp"
#include "splitric/quantity.hpp"

#include <string_view>
#include <vector>

namespace splitric {

/// Dot-separated addresses for every numeric model parameter, e.g.
/// "workload.inference.input_size" or "links.feeder.uplink_rate".
/// Used by config overrides and sweep axes.

/// Expected dimension of the value at `path`. Throws std::invalid_argument
/// for unknown paths.
Dimension param_dimension(std::string_view path);

/// Writes `value` (canonical units) into the addressed field.
/// Throws std::invalid_argument for unknown paths or when the path targets
/// an absent optional (GEO node / ISL link not present).
void set_param(Topology& topo, WorkloadProfile& w, std::string_view path, double value);

/// Reads the addressed field. "unbounded" power budgets read as infinity.
double get_param(const Topology& topo, const WorkloadProfile& w, std::string_view path);

/// All recognized paths, for diagnostics.
std::vector<std::string> known_params();

}  // namespace splitric
