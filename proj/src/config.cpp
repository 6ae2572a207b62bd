#include "splitric/config.hpp"

#include "splitric/param_path.hpp"
#include "splitric/quantity.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace splitric {

std::string paper_defaults_toml() {
  return R"(# Scenario configuration: split-RIC NTN deployment defaults.
# Values are quantity strings in the units shown; all fields are optional
# and fall back to these defaults when omitted.

[nodes.ground]
compute_capacity = "1 PFLOPS"
energy_per_flop = "200 pJ/FLOP"
power_budget = "unbounded"

[nodes.leo]
compute_capacity = "10 TFLOPS"
energy_per_flop = "20 pJ/FLOP"
power_budget = "20 W"

[nodes.geo]
compute_capacity = "200 TFLOPS"
energy_per_flop = "100 pJ/FLOP"
power_budget = "1000 W"

[links.feeder]
uplink_rate = "500 Mbit/s"
downlink_rate = "500 Mbit/s"
tx_power = "15 W"
rx_power = "5 W"
rtt = "20 ms"
wait_time = "10 min"

[links.isl]
uplink_rate = "10 Gbit/s"
downlink_rate = "10 Gbit/s"
tx_power = "2 W"
rx_power = "2 W"
rtt = "240 ms"
wait_time = "0 s"

[workload]
model_size = "50 Mbit"
longevity = "100000"

[workload.inference]
input_size = "5 MB"
output_size = "1 kB"
complexity = "1 GFLOP"
deadline = "10 ms"

[workload.training]
dataset_size = "10 Gbit"
complexity = "150 TFLOP"
)";
}

namespace {

[[noreturn]] void config_fail(int line, const std::string& what) {
  throw std::invalid_argument("config error (line " + std::to_string(line) + "): " + what);
}

std::string trim(std::string s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Assigns a parsed quantity to the addressed field, checking dimensions.
// power_budget is handled out of band (optional field, "unbounded" allowed).
void assign(RunConfig& cfg, const std::string& path, const std::string& raw, int line) {
  if (path.rfind("nodes.", 0) == 0 && path.size() > 13 &&
      path.compare(path.size() - 13, 13, ".power_budget") == 0) {
    NodeProfile* node = nullptr;
    if (path == "nodes.ground.power_budget") node = &cfg.topology.ground;
    else if (path == "nodes.leo.power_budget") node = &cfg.topology.leo;
    else if (path == "nodes.geo.power_budget" && cfg.topology.geo) node = &*cfg.topology.geo;
    if (!node) config_fail(line, "unknown parameter '" + path + "'");
    if (raw == "unbounded") {
      node->power_budget.reset();
      return;
    }
    Quantity q = parse_quantity(raw);
    if (q.dim != Dimension::Watts)
      config_fail(line, "power_budget expects watts, got \"" + raw + "\"");
    node->power_budget = q.value;
    return;
  }

  Dimension expected;
  try {
    expected = param_dimension(path);
  } catch (const std::invalid_argument&) {
    config_fail(line, "unknown parameter '" + path + "'");
  }
  Quantity q;
  try {
    q = parse_quantity(raw);
  } catch (const std::invalid_argument& e) {
    config_fail(line, e.what());
  }
  if (q.dim != expected)
    config_fail(line, "'" + path + "' expects " +
                          (unit_symbol(expected)[0] ? unit_symbol(expected) : "a bare number") +
                          ", got \"" + raw + "\"");
  set_param(cfg.topology, cfg.workload, path, q.value);
}

}  // namespace

RunConfig parse_config_text(std::string_view text) {
  RunConfig cfg;
  cfg.topology = default_topology();
  cfg.workload = default_workload();

  std::istringstream in{std::string(text)};
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') config_fail(lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) config_fail(lineno, "empty section name");
      continue;
    }

    const size_t eq = line.find('=');
    if (eq == std::string::npos) config_fail(lineno, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) config_fail(lineno, "empty key");
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    if (value.empty()) config_fail(lineno, "empty value for '" + key + "'");
    if (section.empty()) config_fail(lineno, "key outside any section");

    assign(cfg, section + "." + key, value, lineno);
  }

  cfg.warnings = validate(cfg.topology, cfg.workload);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void apply_override(RunConfig& cfg, std::string_view assignment) {
  const size_t eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw std::invalid_argument("override must be parameter.path=quantity: " +
                                std::string(assignment));
  const std::string path = trim(std::string(assignment.substr(0, eq)));
  const std::string raw = trim(std::string(assignment.substr(eq + 1)));
  assign(cfg, path, raw, 0);
  cfg.warnings = validate(cfg.topology, cfg.workload);
}

}  // namespace splitric
