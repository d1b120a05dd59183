#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tempreach/exact.hpp"
#include "tempreach/random_instances.hpp"
#include "tempreach/single_source.hpp"
#include "tempreach/tree_solver.hpp"

using namespace tempreach;

TEST_SUITE("fast_converge") {
  TEST_CASE("path of three towards edge a-b") {
    TemporalGraph g = fixtures::p3();
    VertexId a = g.vertex("a"), b = g.vertex("b"), c = g.vertex("c");
    ColorRelease releases[] = {{a, 0}, {c, 0}};
    ConvergeResult r = fast_converge(g, releases, a, b);
    REQUIRE(r.colors.size() == 2);
    CHECK(r.colors[0].endpoint == a);
    CHECK(r.colors[0].time == 0);
    CHECK(r.colors[1].endpoint == b);
    CHECK(r.colors[1].time == 1);
    // Cross-check: each colour's time equals its own earliest arrival there.
    CHECK(oracle::walk_arrivals(g, oracle::original_times(g), c)[b] == 1);
    CHECK(r.schedule.empty());
  }

  TEST_CASE("colours released at wi stay put") {
    TemporalGraph g = fixtures::p3();
    ColorRelease releases[] = {{0, 0}, {0, 0}};
    ConvergeResult r = fast_converge(g, releases, 0, 1);
    for (const ColorArrival& c : r.colors) {
      CHECK(c.endpoint == 0);
      CHECK(c.time == 0);
    }
    CHECK(r.schedule.empty());
  }

  TEST_CASE("star: two leaves converge on the centre") {
    TemporalGraph g = fixtures::star3();
    VertexId m = g.vertex("m");
    ColorRelease releases[] = {{g.vertex("a"), 0}, {g.vertex("b"), 0}};
    ConvergeResult r = fast_converge(g, releases, g.vertex("c"), m);
    for (const ColorArrival& c : r.colors) {
      CHECK(c.endpoint == m);
      CHECK(c.time == 1);
    }
    // Exhaustive: no schedule gets either leaf to m before 1.
    for (const char* leaf : {"a", "b"})
      CHECK(oracle::brute_min_arrivals(g, g.vertex(leaf), 5)[m] == 1);
  }

  TEST_CASE("a colour waits for the colours behind it") {
    // x - y - w_i - w_j with colours at x and y; y forwards only after x arrives.
    TemporalGraph::Builder b;
    b.add_edge("x", "y", {3});
    b.add_edge("y", "wi", {1});
    b.add_edge("wi", "wj", {1});
    TemporalGraph g = std::move(b).build();
    ColorRelease releases[] = {{0, 0}, {1, 0}};
    ConvergeResult r = fast_converge(g, releases, 2, 3);
    CHECK(r.colors[0].time == 4);
    CHECK(r.colors[1].time == 4);
    CHECK(r.schedule.size() == 1);
    CHECK(r.all_colors_at[1] == 3);
  }

  TEST_CASE("rejects non-trees and non-adjacent pairs") {
    ColorRelease releases[] = {{0, 0}};
    CHECK_THROWS_AS(fast_converge(fixtures::pp2(), releases, 0, 1), Error);
    TemporalGraph g = fixtures::p3();
    CHECK_THROWS_AS(fast_converge(g, releases, g.vertex("a"), g.vertex("c")), Error);
  }
}

TEST_SUITE("solve_tree") {
  TEST_CASE("both ends of a path of three: the documented divergence") {
    Instance inst = fixtures::with_sources(fixtures::p3(), {"a", "c"});
    TreeSolution r = solve_tree(inst);
    CHECK(r.solution.value == 3);
    CHECK(r.trials.size() == 2);
    CHECK(r.trials[0].crossing == 2);
    CHECK(r.trials[0].completion == 3);
    CHECK(solve_exact(inst, {}, {4}).solution.value == 2);
    CHECK(oracle::brute_force(inst, 4).value == 2);
  }

  TEST_CASE("one source matches the single-source solver") {
    Instance inst = fixtures::with_sources(fixtures::p3(), {"a"});
    CHECK(solve_tree(inst).solution.value == 2);
    CHECK(oracle::brute_force(inst, 4).value == 2);
  }

  TEST_CASE("one shared label crossed both ways") {
    TemporalGraph::Builder b;
    b.add_edge("a", "b", {1});
    Instance inst = fixtures::with_sources(std::move(b).build(), {"a", "b"});
    CHECK(solve_tree(inst).solution.value == 1);
    CHECK(oracle::brute_force(inst, 3).value == 1);
  }

  TEST_CASE("a source at the centre of a star needs no crossing first") {
    TemporalGraph::Builder b;
    for (const char* leaf : {"x", "y", "z"}) b.add_edge("s", leaf, {1});
    Instance inst = fixtures::with_sources(std::move(b).build(), {"s"});
    CHECK(solve_tree(inst).solution.value == 1);
    CHECK(solve_single_source(inst.graph, 0).solution.value == 1);
  }

  TEST_CASE("single vertex") {
    TemporalGraph::Builder b;
    b.add_vertex("only");
    Instance inst{std::move(b).build(), {0}};
    TreeSolution r = solve_tree(inst);
    CHECK(r.solution.value == 0);
    CHECK(r.solution.schedule.empty());
  }

  TEST_CASE("rejects cycles") {
    Instance inst = fixtures::with_sources(fixtures::pp2(), {"A"});
    CHECK_THROWS_AS(solve_tree(inst), Error);
  }
}

TEST_SUITE("tree properties") {
  TEST_CASE("verifies, respects bounds, exact when there is one source") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      RandomParams p;
      p.n = 2 + seed % 5;
      p.lifetime = 4;
      p.labels_per_edge = 2;
      p.vary_labels = true;
      p.source_count = 1 + seed % std::min<std::size_t>(3, p.n);
      Instance inst = gen_random(RandomKind::kTree, p, seed);
      INFO("seed " << seed);
      TreeSolution r = solve_tree(inst);
      CHECK(validate_schedule(inst.graph, r.solution.schedule).empty());
      CHECK(solution_value(apply_schedule(inst.graph, r.solution.schedule), inst.sources) ==
            r.solution.value);
      CHECK(r.solution.value >= lower_bound(inst));
      Time horizon = inst.graph.lifetime() + Time(inst.graph.vertex_count());
      for (const ScheduleEntry& e : r.solution.schedule.entries())
        horizon = std::max(horizon, e.target);
      Time exact = solve_exact(inst, {}, {horizon}).solution.value;
      CHECK(r.solution.value >= exact);
      if (inst.sources.size() == 1) CHECK(r.solution.value == exact);
    }
  }
}
