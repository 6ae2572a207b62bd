#include "splitric/feasibility.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

using namespace splitric;

namespace {

Topology topo() { return default_topology(); }

WorkloadProfile workload() { return default_workload(); }

}  // namespace

TEST_CASE("edge advantage at the reported break-even input size") {
  WorkloadProfile w = workload();
  w.inference.input_size = 680000.0;  // 85 kB
  const BoundaryVerdict v = edge_advantage(topo(), w);
  CHECK(v.lhs == doctest::Approx(0.02));
  CHECK(v.rhs == doctest::Approx(0.0204));
  CHECK(v.holds);

  w.inference.input_size = 8e4;  // 10 kB scalar-report regime
  CHECK_FALSE(edge_advantage(topo(), w).holds);

  w.inference.complexity = 0.0;
  CHECK(edge_advantage(topo(), w).holds);
}

TEST_CASE("link efficiency: GEO training cost usually loses to RF offload") {
  WorkloadProfile w = workload();
  const BoundaryVerdict heavy = link_efficiency(topo(), w);
  CHECK(heavy.lhs == doctest::Approx(15004.01));
  CHECK(heavy.rhs == doctest::Approx(300.0));
  CHECK_FALSE(heavy.holds);

  w.training.complexity = 1e12;  // light training flips the boundary
  const BoundaryVerdict light = link_efficiency(topo(), w);
  CHECK(light.lhs == doctest::Approx(104.01));
  CHECK(light.holds);

  // degenerate tie resolves against the more complex architecture
  WorkloadProfile zero = workload();
  zero.training.dataset_size = 0.0;
  zero.model_size = 0.0;
  zero.training.complexity = 0.0;
  const BoundaryVerdict tie = link_efficiency(topo(), zero);
  CHECK(tie.margin == doctest::Approx(0.0));
  CHECK_FALSE(tie.holds);
}

TEST_CASE("continuity gain threshold") {
  Topology t = topo();
  const WorkloadProfile w = workload();

  t.feeder.wait_time = 600.0;
  const BoundaryVerdict v = continuity_gain(t, w);
  CHECK(v.lhs == doctest::Approx(0.82));
  CHECK(v.holds);

  t.feeder.wait_time = 0.0;
  CHECK_FALSE(continuity_gain(t, w).holds);

  t.feeder.wait_time = 0.82;  // exact tie, strict inequality
  CHECK_FALSE(continuity_gain(t, w).holds);
}

TEST_CASE("boundary checks require the components they compare") {
  Topology t = topo();
  t.geo.reset();
  CHECK_THROWS_AS(link_efficiency(t, workload()), std::invalid_argument);
  CHECK_THROWS_AS(continuity_gain(t, workload()), std::invalid_argument);
}

TEST_CASE("crossover: per-op input size matches the closed form") {
  CrossoverRequest req;
  req.axis = Axis::InputSize;
  req.objective = Objective::Energy;
  req.per_op = true;
  req.lo = 8e4;
  req.hi = 4e8;
  const CrossoverResult res = solve_crossover(topo(), workload(), req);
  REQUIRE(res.bracketed);
  CHECK(*res.value / 8.0 == doctest::Approx(83333.33).epsilon(1e-4));

  // the amortized 85 kB claim is met within 5%
  CHECK(std::abs(*res.value / 8.0 / 85000.0 - 1.0) < 0.05);
}

TEST_CASE("crossover: complexity ceiling at 5 MB inputs") {
  WorkloadProfile w = workload();
  w.inference.input_size = 4e7;
  CrossoverRequest req;
  req.axis = Axis::Complexity;
  req.objective = Objective::Energy;
  req.per_op = true;
  req.lo = 1e8;
  req.hi = 5e11;
  const CrossoverResult res = solve_crossover(topo(), w, req);
  REQUIRE(res.bracketed);
  CHECK(*res.value == doctest::Approx(60e9).epsilon(1e-9));
}

TEST_CASE("crossover: closed form and bisection agree to 1e-9 relative") {
  for (Axis axis : {Axis::InputSize, Axis::Complexity, Axis::UplinkRate}) {
    WorkloadProfile w = workload();
    if (axis != Axis::InputSize) w.inference.input_size = 680000.0;
    CrossoverRequest req;
    req.axis = axis;
    req.objective = Objective::Energy;
    req.per_op = true;
    req.lo = axis == Axis::UplinkRate ? 5e7 : (axis == Axis::InputSize ? 8e4 : 1e8);
    req.hi = axis == Axis::UplinkRate ? 1e9 : (axis == Axis::InputSize ? 4e8 : 5e11);
    const CrossoverResult closed = solve_crossover(topo(), w, req);
    req.method = SolveMethod::Bisection;
    const CrossoverResult bisected = solve_crossover(topo(), w, req);
    REQUIRE(closed.bracketed);
    REQUIRE(bisected.bracketed);
    CHECK(*bisected.value == doctest::Approx(*closed.value).epsilon(1e-9));
  }
}

TEST_CASE("crossover: no sign change reports no-crossover with the held sign") {
  CrossoverRequest req;
  req.axis = Axis::InputSize;
  req.objective = Objective::Energy;
  // both sides constant in input size, so the difference never crosses zero
  req.first = Scenario::S2SplitRic;
  req.second = Scenario::S3MultiLayer;
  req.lo = 8e4;
  req.hi = 4e8;
  const CrossoverResult res = solve_crossover(topo(), workload(), req);
  CHECK_FALSE(res.bracketed);
  CHECK_FALSE(res.value.has_value());
  CHECK(res.unbracketed_sign != 0);
}

TEST_CASE("crossover: invalid ranges are rejected") {
  CrossoverRequest req;
  req.lo = 10.0;
  req.hi = 10.0;
  CHECK_THROWS_AS(solve_crossover(topo(), workload(), req), std::invalid_argument);
}

TEST_CASE("classify: region examples") {
  WorkloadProfile w = workload();

  w.inference.input_size = 8e4;  // 10 kB
  CHECK(classify(topo(), w, Objective::Energy).winner == Scenario::S1GroundCentric);

  w.inference.input_size = 4e7;  // 5 MB
  CHECK(classify(topo(), w, Objective::Energy).winner == Scenario::S2SplitRic);

  Topology t = topo();
  t.feeder.wait_time = 2700.0;  // 45 min
  CHECK(classify(t, w, Objective::Latency).winner == Scenario::S3MultiLayer);
}

TEST_CASE("classify: partial topology evaluates the remaining scenarios") {
  Topology t = topo();
  t.geo.reset();
  t.isl.reset();
  const RegionLabel label = classify(t, workload(), Objective::Energy);
  CHECK(label.partial);
  CHECK(label.totals.size() == 2);
  CHECK(label.totals.count(Scenario::S3MultiLayer) == 0);
}

TEST_CASE("classify: winner margins are nonnegative and winner attains the minimum") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 500; ++i) {
    Topology t = topo();
    WorkloadProfile w = workload();
    w.inference.input_size *= u(rng);
    w.inference.complexity *= u(rng);
    t.feeder.wait_time = u(rng) * 600.0;
    for (Objective obj : {Objective::Energy, Objective::Latency}) {
      const RegionLabel label = classify(t, w, obj);
      for (const auto& [s, total] : label.totals)
        CHECK(total >= label.totals.at(label.winner));
      for (const auto& [s, m] : label.margins) CHECK(m >= 0.0);
    }
  }
}

TEST_CASE("classifier consistency with a decisive edge advantage") {
  // When per-op compute undercuts per-op streaming by more than the
  // amortized update overhead, S1 cannot win on energy.
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.5, 50.0);
  for (int i = 0; i < 500; ++i) {
    WorkloadProfile w = workload();
    w.inference.input_size = 680000.0 * u(rng);
    const BoundaryVerdict v = edge_advantage(topo(), w);
    const double update_overhead_per_op =
        (lifecycle_energy(Scenario::S2SplitRic, topo(), w).total -
         w.longevity * v.lhs) /
        w.longevity;
    if (v.holds && v.margin > update_overhead_per_op)
      CHECK(classify(topo(), w, Objective::Energy).winner != Scenario::S1GroundCentric);
  }
}

TEST_CASE("scale invariance of the argmin under common total scaling") {
  // Scaling all totals by one positive constant cannot move the argmin.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 500; ++i) {
    WorkloadProfile w = workload();
    w.inference.input_size *= u(rng);
    const RegionLabel label = classify(topo(), w, Objective::Energy);
    const double k = u(rng);
    Scenario winner = Scenario::S1GroundCentric;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [s, t] : label.totals)
      if (k * t < best) {
        best = k * t;
        winner = s;
      }
    CHECK(winner == label.winner);
  }
}

TEST_CASE("power budget check") {
  const NodeProfile leo = default_leo_node();
  WorkloadProfile w = workload();

  w.inference.complexity = 1e9;
  PowerBudgetVerdict v = power_budget_check(leo, w, 100.0);
  CHECK(v.average_power == doctest::Approx(2.0));
  CHECK(v.within_budget);

  w.inference.complexity = 500e9;
  v = power_budget_check(leo, w, 100.0);
  CHECK(v.average_power == doctest::Approx(1000.0));
  CHECK_FALSE(v.within_budget);

  CHECK(power_budget_check(leo, w, 0.0).within_budget);
  CHECK(power_budget_check(default_ground_node(), w, 1e9).unbounded);
  CHECK(power_budget_check(default_ground_node(), w, 1e9).within_budget);
}
