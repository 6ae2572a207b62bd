#pragma once

#include "splitric/profiles.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace splitric {

struct RunConfig {
  Topology topology;
  WorkloadProfile workload;
  std::vector<std::string> warnings;  // soft-assumption warnings from validation
};

/// Built-in preset reproducing the published node and simulation parameter
/// tables, as TOML text.
std::string paper_defaults_toml();

/// Parses scenario configuration text: [nodes.*], [links.*], [workload.*]
/// sections with quantity-string values ("15 W", "500 Mbit/s"). Unlisted
/// keys keep their paper-default values; unknown keys are rejected.
/// Throws std::invalid_argument with a line-numbered message on errors.
RunConfig parse_config_text(std::string_view text);

/// Loads and parses a configuration file.
RunConfig load_config(const std::string& path);

/// Applies one "parameter.path=quantity" override (value parsed with the
/// quantity parser; dimension must match the target field).
void apply_override(RunConfig& cfg, std::string_view assignment);

}  // namespace splitric
