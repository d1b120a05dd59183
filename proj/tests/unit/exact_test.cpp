#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tempreach/exact.hpp"
#include "tempreach/gadgets.hpp"
#include "tempreach/random_instances.hpp"

using namespace tempreach;

namespace {

// New time of every label in edge/label order, as the brute-force oracle reports it.
std::vector<Time> flat_times(const TemporalGraph& g, const DelaySchedule& schedule) {
  std::vector<Time> out;
  for (const auto& e : g.edges())
    for (Time t : e.labels) {
      Time now = t;
      for (const ScheduleEntry& s : schedule.entries())
        if (s.original == t && ((s.u == g.name(e.u) && s.v == g.name(e.v)) ||
                                (s.u == g.name(e.v) && s.v == g.name(e.u))))
          now = s.target;
      out.push_back(now);
    }
  return out;
}

Instance tiny_random(std::uint64_t seed) {
  RandomParams p;
  p.n = 2 + seed % 3;
  p.lifetime = 3;
  p.labels_per_edge = 2;
  p.vary_labels = true;
  p.source_count = 1 + seed % 2;
  p.extra_edges = p.n == 4 ? seed % 2 : 0;
  return gen_random(seed % 2 ? RandomKind::kGeneral : RandomKind::kTree, p, seed);
}

const Budget kBudgets[] = {Budget::unbounded(), Budget::max_delayed_labels(0),
                           Budget::max_delayed_labels(1), Budget::max_total_delay(1),
                           Budget::max_total_delay(3)};

}  // namespace

TEST_SUITE("solve_exact") {
  TEST_CASE("figure one") {
    Instance inst = fixtures::with_sources(fixtures::fig1(), {"A"});
    ExactResult r = solve_exact(inst, {}, {22});
    CHECK(r.solution.value == 10);
    CHECK(r.horizon == 22);
    REQUIRE(r.solution.schedule.size() == 1);
    CHECK(r.solution.schedule.entries()[0] == ScheduleEntry{"B", "C", 9, 10});
  }

  TEST_CASE("path of three from both ends needs no delay") {
    Instance inst = fixtures::with_sources(fixtures::p3(), {"a", "c"});
    ExactResult r = solve_exact(inst, {}, {4});
    CHECK(r.solution.value == 2);
    CHECK(r.solution.schedule.empty());
    CHECK(solve_exact(inst, Budget::max_total_delay(0)).solution.value == 2);
  }

  TEST_CASE("default horizon and its validation") {
    Instance inst = fixtures::with_sources(fixtures::fig1(), {"A"});
    CHECK(solve_exact(inst).horizon == 20 + 3);
    CHECK_THROWS_AS(solve_exact(inst, {}, {19}), Error);
  }

  TEST_CASE("zero budget evaluates the graph as given") {
    Instance inst = fixtures::with_sources(fixtures::fig1(), {"A"});
    CHECK(solve_exact(inst, Budget::max_delayed_labels(0)).solution.value == 20);
    CHECK(solve_exact(inst, Budget::max_total_delay(0)).solution.value == 20);
  }

  TEST_CASE("unreachable within the horizon") {
    TemporalGraph::Builder b;
    b.add_edge("a", "b", {1});
    b.add_vertex("c");
    Instance inst{std::move(b).build(), {0}};
    ExactResult r = solve_exact(inst);
    CHECK(r.solution.value == kUnreachable);
    CHECK_FALSE(r.node_limit_hit);
  }

  TEST_CASE("node limit is reported") {
    Instance inst = fixtures::corpus("kite.tg");
    ExactResult r = solve_exact(inst, {}, {std::nullopt, 3});
    CHECK(r.node_limit_hit);
  }

  TEST_CASE("matches exhaustive search including the tie-break") {
    std::size_t compared = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      Instance inst = tiny_random(seed);
      if (inst.graph.label_count() > 5) continue;
      Time horizon = inst.graph.lifetime() + Time(inst.graph.vertex_count());
      for (const Budget& budget : kBudgets) {
        INFO("seed " << seed << " budget " << int(budget.kind) << "/" << budget.k);
        oracle::BruteResult brute = oracle::brute_force(inst, horizon, budget);
        ExactResult r = solve_exact(inst, budget, {horizon});
        CHECK(r.solution.value == brute.value);
        if (brute.value == kUnreachable) continue;
        ScheduleCost cost = schedule_cost(r.solution.schedule);
        CHECK(cost.delayed_count == brute.count);
        CHECK(cost.total_delay == brute.total);
        CHECK(flat_times(inst.graph, r.solution.schedule) == brute.times);
        ++compared;
      }
    }
    CHECK(compared > 50);
  }
}

TEST_SUITE("decide_deadline") {
  SetSystem hs1() { return {2, {{1}, {2}}, 0}; }

  TEST_CASE("two singleton sets need two delays") {
    Instance inst = gen_hitting_set_gadget(hs1());
    CHECK_FALSE(decide_deadline(inst, 3, Budget::max_delayed_labels(1)).schedule);
    CHECK_FALSE(oracle::brute_deadline(inst, 3, Budget::max_delayed_labels(1)));
    DeadlineResult r = decide_deadline(inst, 3, Budget::max_delayed_labels(2));
    REQUIRE(r.schedule);
    CHECK(*r.schedule == [] {
      DelaySchedule s;
      s.add({"x1", "y1", 1, 2});
      s.add({"x2", "y2", 1, 2});
      return s;
    }());
  }

  TEST_CASE("one set, one delay") {
    Instance inst = gen_hitting_set_gadget({1, {{1}}, 1});
    DeadlineResult r = decide_deadline(inst, 3, Budget::max_delayed_labels(1));
    REQUIRE(r.schedule);
    REQUIRE(r.schedule->size() == 1);
    CHECK(r.schedule->entries()[0] == ScheduleEntry{"x1", "y1", 1, 2});
    CHECK(oracle::brute_deadline(inst, 3, Budget::max_delayed_labels(1)));
  }

  TEST_CASE("deadline at the optimum succeeds, below it fails") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      Instance inst = tiny_random(seed);
      if (inst.graph.label_count() > 5) continue;
      for (const Budget& budget : kBudgets) {
        INFO("seed " << seed << " budget " << int(budget.kind) << "/" << budget.k);
        Time best = solve_exact(inst, budget).solution.value;
        for (Time d = 1; d <= 7; ++d) {
          DeadlineResult r = decide_deadline(inst, d, budget);
          bool expected = best != kUnreachable && best <= d;
          CHECK(r.schedule.has_value() == oracle::brute_deadline(inst, d, budget));
          if (d <= inst.graph.lifetime() + Time(inst.graph.vertex_count()))
            CHECK(r.schedule.has_value() == expected);
          if (r.schedule) {
            CHECK(evaluate_solution(inst.graph, inst.sources, *r.schedule).value <= d);
          }
        }
      }
    }
  }
}

TEST_SUITE("exact properties") {
  TEST_CASE("larger horizons never hurt") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      Instance inst = tiny_random(seed);
      Time base = inst.graph.lifetime() + Time(inst.graph.vertex_count());
      Time v1 = solve_exact(inst, {}, {base}).solution.value;
      Time v2 = solve_exact(inst, {}, {base + 3}).solution.value;
      CHECK(v2 <= v1);
    }
  }

  TEST_CASE("looser budgets never hurt") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      Instance inst = tiny_random(seed);
      Time previous_labels = kUnreachable, previous_total = kUnreachable;
      for (Time k = 0; k <= 3; ++k) {
        Time by_labels = solve_exact(inst, Budget::max_delayed_labels(k)).solution.value;
        Time by_total = solve_exact(inst, Budget::max_total_delay(k)).solution.value;
        CHECK(by_labels <= previous_labels);
        CHECK(by_total <= previous_total);
        CHECK(by_labels >= solve_exact(inst).solution.value);
        previous_labels = by_labels;
        previous_total = by_total;
      }
    }
  }

  TEST_CASE("schedules respect their budget and verify") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      Instance inst = tiny_random(seed);
      for (const Budget& budget : kBudgets) {
        ExactResult r = solve_exact(inst, budget);
        if (r.solution.value == kUnreachable) continue;
        ScheduleCost cost = schedule_cost(r.solution.schedule);
        if (budget.kind == Budget::Kind::kMaxDelayedLabels)
          CHECK(Time(cost.delayed_count) <= budget.k);
        if (budget.kind == Budget::Kind::kMaxTotalDelay) CHECK(cost.total_delay <= budget.k);
        CHECK(evaluate_solution(inst.graph, inst.sources, r.solution.schedule).value ==
              r.solution.value);
        CHECK(r.solution.value >= lower_bound(inst));
      }
    }
  }
}

TEST_SUITE("lower_bound") {
  TEST_CASE("figure one from both ends") {
    // C reaches B at 9, and moving A-B's label 9 to 10 lands at A by 10.
    TemporalGraph g = fixtures::fig1();
    auto from_c = oracle::brute_min_arrivals(g, g.vertex("C"), 22);
    CHECK(from_c[g.vertex("A")] == 10);
    CHECK(lower_bound(fixtures::with_sources(g, {"A", "C"})) == 10);
  }

  TEST_CASE("single vertex") {
    TemporalGraph::Builder b;
    b.add_vertex("x");
    CHECK(lower_bound(Instance{std::move(b).build(), {0}}) == 0);
  }
}
