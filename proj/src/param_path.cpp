#include "splitric/param_path.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace splitric {

namespace {

struct ParamEntry {
  std::string path;
  Dimension dim;
  // Returns nullptr when the addressed optional component is absent.
  std::function<double*(Topology&, WorkloadProfile&)> field;
};

const std::vector<ParamEntry>& registry() {
  static const std::vector<ParamEntry> entries = [] {
    std::vector<ParamEntry> v;
    auto add = [&v](std::string path, Dimension dim,
                    std::function<double*(Topology&, WorkloadProfile&)> f) {
      v.push_back(ParamEntry{std::move(path), dim, std::move(f)});
    };

    auto node = [&add](const std::string& name,
                       std::function<NodeProfile*(Topology&)> get) {
      add("nodes." + name + ".compute_capacity", Dimension::FlopPerSecond,
          [get](Topology& t, WorkloadProfile&) -> double* {
            NodeProfile* n = get(t);
            return n ? &n->compute_capacity : nullptr;
          });
      add("nodes." + name + ".energy_per_flop", Dimension::JoulesPerFlop,
          [get](Topology& t, WorkloadProfile&) -> double* {
            NodeProfile* n = get(t);
            return n ? &n->energy_per_flop : nullptr;
          });
    };
    node("ground", [](Topology& t) { return &t.ground; });
    node("leo", [](Topology& t) { return &t.leo; });
    node("geo", [](Topology& t) { return t.geo ? &*t.geo : nullptr; });

    auto link = [&add](const std::string& name,
                       std::function<LinkProfile*(Topology&)> get) {
      struct Field { const char* suffix; Dimension dim; double LinkProfile::*member; };
      static const Field fields[] = {
          {"uplink_rate", Dimension::BitsPerSecond, &LinkProfile::uplink_rate},
          {"downlink_rate", Dimension::BitsPerSecond, &LinkProfile::downlink_rate},
          {"tx_power", Dimension::Watts, &LinkProfile::tx_power},
          {"rx_power", Dimension::Watts, &LinkProfile::rx_power},
          {"rtt", Dimension::Seconds, &LinkProfile::rtt},
          {"wait_time", Dimension::Seconds, &LinkProfile::wait_time},
      };
      for (const Field& f : fields) {
        add("links." + name + "." + f.suffix, f.dim,
            [get, m = f.member](Topology& t, WorkloadProfile&) -> double* {
              LinkProfile* l = get(t);
              return l ? &(l->*m) : nullptr;
            });
      }
    };
    link("feeder", [](Topology& t) { return &t.feeder; });
    link("isl", [](Topology& t) { return t.isl ? &*t.isl : nullptr; });

    add("workload.inference.input_size", Dimension::Bits,
        [](Topology&, WorkloadProfile& w) { return &w.inference.input_size; });
    add("workload.inference.output_size", Dimension::Bits,
        [](Topology&, WorkloadProfile& w) { return &w.inference.output_size; });
    add("workload.inference.complexity", Dimension::Flop,
        [](Topology&, WorkloadProfile& w) { return &w.inference.complexity; });
    add("workload.inference.deadline", Dimension::Seconds,
        [](Topology&, WorkloadProfile& w) { return &w.inference.deadline; });
    add("workload.training.dataset_size", Dimension::Bits,
        [](Topology&, WorkloadProfile& w) { return &w.training.dataset_size; });
    add("workload.training.complexity", Dimension::Flop,
        [](Topology&, WorkloadProfile& w) { return &w.training.complexity; });
    add("workload.model_size", Dimension::Bits,
        [](Topology&, WorkloadProfile& w) { return &w.model_size; });
    add("workload.longevity", Dimension::Scalar,
        [](Topology&, WorkloadProfile& w) { return &w.longevity; });
    return v;
  }();
  return entries;
}

const ParamEntry& find_entry(std::string_view path) {
  for (const ParamEntry& e : registry())
    if (path == e.path) return e;
  throw std::invalid_argument("unknown parameter path: " + std::string(path));
}

}  // namespace

Dimension param_dimension(std::string_view path) { return find_entry(path).dim; }

void set_param(Topology& topo, WorkloadProfile& w, std::string_view path, double value) {
  const ParamEntry& e = find_entry(path);
  double* field = e.field(topo, w);
  if (!field)
    throw std::invalid_argument("parameter path targets an absent component: " +
                                std::string(path));
  *field = value;
}

double get_param(const Topology& topo, const WorkloadProfile& w, std::string_view path) {
  const ParamEntry& e = find_entry(path);
  double* field = e.field(const_cast<Topology&>(topo), const_cast<WorkloadProfile&>(w));
  if (!field)
    throw std::invalid_argument("parameter path targets an absent component: " +
                                std::string(path));
  return *field;
}

std::vector<std::string> known_params() {
  std::vector<std::string> out;
  for (const ParamEntry& e : registry()) out.emplace_back(e.path);
  return out;
}

}  // namespace splitric
