#include "splitric/sweep.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace splitric;

namespace {

Topology topo() { return default_topology(); }

WorkloadProfile workload() { return default_workload(); }

const std::set<Scenario> kS1S2 = {Scenario::S1GroundCentric, Scenario::S2SplitRic};

}  // namespace

TEST_CASE("grid values: endpoints, count, spacing") {
  const AxisSpec lin{"links.feeder.wait_time", 0.0, 10.0, 2, Spacing::Linear};
  const auto two = grid_values(lin);
  REQUIRE(two.size() == 2);
  CHECK(two.front() == 0.0);
  CHECK(two.back() == 10.0);

  const AxisSpec log{"workload.inference.input_size", 1e4, 1e8, 5, Spacing::Logarithmic};
  const auto vals = grid_values(log);
  REQUIRE(vals.size() == 5);
  CHECK(vals[1] / vals[0] == doctest::Approx(10.0));
  CHECK(vals[4] == 1e8);

  CHECK_THROWS_AS(grid_values(AxisSpec{"x", 1.0, 1.0, 3, Spacing::Linear}),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_values(AxisSpec{"x", 0.0, 1.0, 3, Spacing::Logarithmic}),
                  std::invalid_argument);
}

TEST_CASE("sweep over input size crosses once between 80 and 90 kB") {
  const AxisSpec axis{"workload.inference.input_size", 8e4, 4e8, 200, Spacing::Logarithmic};
  WorkloadProfile w = workload();
  w.longevity = 1e7;  // large enough that the update overhead is negligible
  const SweepResult result = run_sweep(axis, topo(), w, kS1S2);
  REQUIRE(result.rows.size() == 200);
  int flips = 0;
  double flip_at = 0.0;
  for (size_t i = 1; i < result.rows.size(); ++i) {
    if (result.rows[i].winner_energy != result.rows[i - 1].winner_energy) {
      ++flips;
      flip_at = result.rows[i].axis_value;
    }
  }
  CHECK(flips == 1);
  CHECK(flip_at / 8.0 > 80e3);
  CHECK(flip_at / 8.0 < 90e3);
}

TEST_CASE("sweep: S1 energy scales inversely with uplink rate") {
  const AxisSpec axis{"links.feeder.uplink_rate", 5e7, 1e9, 20, Spacing::Logarithmic};
  WorkloadProfile w = workload();
  w.inference.input_size = 4e7;  // 5 MB
  const SweepResult result = run_sweep(axis, topo(), w, kS1S2);
  const SweepRow& slow = result.rows.front();   // 50 Mbit/s
  const SweepRow& fast = result.rows.back();    // 1 Gbit/s
  const int s1 = static_cast<int>(Scenario::S1GroundCentric);
  CHECK(slow.scenario[s1].energy / fast.scenario[s1].energy ==
        doctest::Approx(1e9 / 5e7).epsilon(1e-9));
}

TEST_CASE("sweep rejects bad inputs and skips invariant-violating points") {
  CHECK_THROWS_AS(run_sweep(AxisSpec{"workload.inference.input_size", 1.0, 2.0, 2,
                                     Spacing::Linear},
                            topo(), workload(), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(AxisSpec{"no.such.param", 1.0, 2.0, 2, Spacing::Linear},
                            topo(), workload(), kS1S2),
                  std::invalid_argument);

  // input_size = 0 violates a hard invariant and must be skipped, not fatal
  const AxisSpec axis{"workload.inference.input_size", 0.0, 1e6, 3, Spacing::Linear};
  const SweepResult result = run_sweep(axis, topo(), workload(), kS1S2);
  CHECK(result.rows.size() == 2);
  CHECK(result.skipped.size() == 1);
}

TEST_CASE("sweep output is deterministic") {
  const AxisSpec axis{"workload.inference.input_size", 8e4, 4e8, 50, Spacing::Logarithmic};
  const std::string a = sweep_to_csv(run_sweep(axis, topo(), workload(), kS1S2));
  const std::string b = sweep_to_csv(run_sweep(axis, topo(), workload(), kS1S2));
  CHECK(a == b);
  CHECK(a.substr(0, a.find('\n')) ==
        "input_size_bits,s1_energy_J,s1_latency_s,s2_energy_J,s2_latency_s,"
        "winner_energy,winner_latency");
  CHECK(a.find('\r') == std::string::npos);
}

TEST_CASE("energy map: regions match the published placements") {
  const AxisSpec x{"workload.inference.input_size", 8e4, 4e8, 40, Spacing::Logarithmic};
  const AxisSpec y{"workload.inference.complexity", 1e8, 5e11, 40, Spacing::Logarithmic};
  const auto cells = run_energy_map(x, y, topo(), workload());
  REQUIRE(cells.size() == 40u * 40u);

  auto nearest = [&](double xi, double yi) {
    const EnergyMapCell* best = &cells.front();
    double best_d = 1e300;
    for (const EnergyMapCell& c : cells) {
      const double d = std::abs(std::log(c.x / xi)) + std::abs(std::log(c.y / yi));
      if (d < best_d) {
        best_d = d;
        best = &c;
      }
    }
    return best->winner;
  };
  CHECK(nearest(8e4, 1e10) == Scenario::S1GroundCentric);   // 10 kB, 10 GFLOP
  CHECK(nearest(1.6e8, 1e9) == Scenario::S2SplitRic);       // 20 MB, 1 GFLOP
}

TEST_CASE("energy map: each constant-complexity row flips at most once") {
  const AxisSpec x{"workload.inference.input_size", 8e4, 4e8, 60, Spacing::Logarithmic};
  const AxisSpec y{"workload.inference.complexity", 1e8, 5e11, 20, Spacing::Logarithmic};
  const auto cells = run_energy_map(x, y, topo(), workload());
  for (int row = 0; row < 20; ++row) {
    int flips = 0;
    for (int col = 1; col < 60; ++col) {
      const auto& prev = cells[row * 60 + col - 1];
      const auto& cur = cells[row * 60 + col];
      if (prev.winner != cur.winner) ++flips;
    }
    CHECK(flips <= 1);
  }
}

TEST_CASE("latency map: labels and monotone structure") {
  const AxisSpec x{"links.feeder.wait_time", 0.0, 3600.0, 30, Spacing::Linear};
  const AxisSpec y{"update_deadline", 1.0, 1e5, 30, Spacing::Logarithmic};
  const auto cells = run_latency_map(x, y, topo(), workload());
  REQUIRE(cells.size() == 30u * 30u);

  // sparse deployment with a 60 s deadline forces S3
  {
    Topology t = topo();
    t.feeder.wait_time = 2700.0;
    const double t_s2 = lifecycle_latency(Scenario::S2SplitRic, t, workload()).total;
    CHECK(t_s2 > 60.0);
  }
  for (const LatencyMapCell& c : cells) {
    if (c.x >= 2700.0 && c.y >= 50.0 && c.y <= 100.0)
      CHECK(c.label == LatencyMapLabel::S3);
    // a deadline below the S3 floor is infeasible everywhere
    if (c.y < lifecycle_latency(Scenario::S3MultiLayer, topo(), workload()).total &&
        c.label != LatencyMapLabel::S2)
      CHECK(c.label == LatencyMapLabel::Infeasible);
  }

  // monotone in wait for fixed deadline, and in deadline for fixed wait
  for (int row = 0; row < 30; ++row)
    for (int col = 1; col < 30; ++col)
      if (cells[row * 30 + col].label == LatencyMapLabel::S2)
        CHECK(cells[row * 30 + col - 1].label == LatencyMapLabel::S2);
  for (int row = 1; row < 30; ++row)
    for (int col = 0; col < 30; ++col)
      if (cells[row * 30 + col].label == LatencyMapLabel::Infeasible)
        CHECK(cells[(row - 1) * 30 + col].label == LatencyMapLabel::Infeasible);
}

TEST_CASE("oracle verify: confirms crossings and their absence") {
  CrossoverRequest req;
  req.axis = Axis::InputSize;
  req.objective = Objective::Energy;
  req.per_op = true;
  req.lo = 8e4;
  req.hi = 4e8;
  const CrossoverResult cross = solve_crossover(topo(), workload(), req);
  const OracleReport report = oracle_verify(cross, req, topo(), workload());
  CHECK(report.sign_changes == 1);
  CHECK(report.ok);
  CHECK(report.deviation <= report.grid_step);

  // constant difference: no crossing, oracle agrees with the solver
  CrossoverRequest flat = req;
  flat.first = Scenario::S2SplitRic;
  flat.second = Scenario::S3MultiLayer;
  flat.per_op = false;
  const CrossoverResult none = solve_crossover(topo(), workload(), flat);
  const OracleReport flat_report = oracle_verify(none, flat, topo(), workload());
  CHECK(flat_report.sign_changes == 0);
  CHECK(flat_report.ok);
}

TEST_CASE("map CSV headers") {
  CHECK(energy_map_to_csv({}).substr(0, 31) == "input_size_bits,complexity_flop");
  CHECK(latency_map_to_csv({}).substr(0, 29) == "wait_time_s,update_deadline_s");
}
