#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tempreach/exact.hpp"
#include "tempreach/parallel_paths.hpp"
#include "tempreach/random_instances.hpp"

using namespace tempreach;

namespace {

TemporalGraph single_path(std::vector<Time> labels) {
  TemporalGraph::Builder b;
  b.add_edge("A", "u", labels);
  b.add_edge("u", "B", labels);
  return std::move(b).build();
}

std::vector<VertexId> ids(const TemporalGraph& g, std::initializer_list<const char*> names) {
  std::vector<VertexId> out;
  for (const char* n : names) out.push_back(g.vertex(n));
  return out;
}

}  // namespace

TEST_SUITE("decompose_parallel_paths") {
  TEST_CASE("two paths of length two") {
    TemporalGraph g = fixtures::pp2();
    ParallelDecomposition d = decompose_parallel_paths(g, g.vertex("A"), g.vertex("B"));
    CHECK(d.a == g.vertex("A"));
    CHECK(d.b == g.vertex("B"));
    REQUIRE(d.paths.size() == 2);
    CHECK(d.paths[0] == ids(g, {"A", "u", "B"}));
    CHECK(d.paths[1] == ids(g, {"A", "v", "B"}));
  }

  TEST_CASE("a direct edge is a path of two vertices") {
    TemporalGraph::Builder b;
    b.add_edge("A", "B", {1});
    b.add_edge("A", "u", {1});
    b.add_edge("u", "B", {1});
    TemporalGraph g = std::move(b).build();
    ParallelDecomposition d = decompose_parallel_paths(g, 0, 1);
    REQUIRE(d.paths.size() == 2);
    CHECK(d.paths[0] == ids(g, {"A", "B"}));
    CHECK(d.paths[1] == ids(g, {"A", "u", "B"}));
  }

  TEST_CASE("shapes that are not parallel paths") {
    TemporalGraph star = fixtures::star3();
    CHECK_THROWS_AS(decompose_parallel_paths(star, star.vertex("a"), star.vertex("b")), Error);
    TemporalGraph g = fixtures::pp2();
    CHECK_THROWS_AS(decompose_parallel_paths(g, g.vertex("A"), g.vertex("A")), Error);
  }
}

TEST_SUITE("feasible_pair") {
  TEST_CASE("two disjoint paths with labels {1,2}") {
    TemporalGraph g = fixtures::pp2();
    ParallelDecomposition d = decompose_parallel_paths(g, g.vertex("A"), g.vertex("B"));
    LabelState state(g);
    auto accepted = feasible_pair(g, d, 0, 1, 2, 2, state);
    REQUIRE(accepted);
    CHECK(accepted->a_to_b <= 2);
    CHECK(accepted->b_to_a <= 2);
    CHECK(accepted->state.to_schedule(g).empty());
    CHECK(oracle::brute_pair(g, d.paths[0], d.paths[1], 2, 2, 4));

    CHECK_FALSE(feasible_pair(g, d, 0, 1, 1, 2, state));
    CHECK_FALSE(oracle::brute_pair(g, d.paths[0], d.paths[1], 1, 2, 4));
  }

  TEST_CASE("a single label per edge cannot carry both directions on one path") {
    TemporalGraph g = single_path({1});
    ParallelDecomposition d = decompose_parallel_paths(g, g.vertex("A"), g.vertex("B"));
    LabelState state(g);
    CHECK_FALSE(oracle::brute_pair(g, d.paths[0], d.paths[0], 3, 3, 4));
    CHECK_FALSE(feasible_pair(g, d, 0, 0, 3, 3, state));
  }

  TEST_CASE("one path used both ways when the labels allow it") {
    TemporalGraph g = single_path({1, 2});
    ParallelDecomposition d = decompose_parallel_paths(g, g.vertex("A"), g.vertex("B"));
    LabelState state(g);
    REQUIRE(oracle::brute_pair(g, d.paths[0], d.paths[0], 2, 3, 4));
    auto outcome = feasible_pair(g, d, 0, 0, 2, 3, state);
    REQUIRE(outcome);
    CHECK(outcome->a_to_b <= 2);
    CHECK(outcome->b_to_a <= 3);
  }
}

TEST_SUITE("solve_path_with_releases") {
  TEST_CASE("both colours at both ends") {
    TemporalGraph g = single_path({1, 2});
    auto path = ids(g, {"A", "u", "B"});
    EndReleases colors[] = {{0, 0}, {0, 0}};
    PathCoverage c = solve_path_with_releases(g, path, colors, LabelState(g));
    CHECK(c.completion == 1);
  }

  TEST_CASE("nothing to cover on a direct edge") {
    TemporalGraph::Builder b;
    b.add_edge("A", "B", {3});
    TemporalGraph g = std::move(b).build();
    auto path = ids(g, {"A", "B"});
    EndReleases colors[] = {{0, std::nullopt}, {std::nullopt, 0}};
    PathCoverage c = solve_path_with_releases(g, path, colors, LabelState(g));
    CHECK(c.completion == 0);
    CHECK(c.state.to_schedule(g).empty());
  }

  TEST_CASE("each colour only at its own end") {
    TemporalGraph g = single_path({1});
    auto path = ids(g, {"A", "u", "B"});
    EndReleases colors[] = {{0, std::nullopt}, {std::nullopt, 0}};
    PathCoverage c = solve_path_with_releases(g, path, colors, LabelState(g));
    CHECK(c.completion == 1);
  }

  TEST_CASE("a colour absent from both ends leaves the path uncovered") {
    TemporalGraph g = single_path({1});
    auto path = ids(g, {"A", "u", "B"});
    EndReleases colors[] = {{std::nullopt, std::nullopt}};
    PathCoverage c = solve_path_with_releases(g, path, colors, LabelState(g));
    CHECK(c.completion == kUnreachable);
  }
}

TEST_SUITE("solve_parallel_paths") {
  TEST_CASE("two paths with labels {1,2}") {
    Instance inst = fixtures::with_sources(fixtures::pp2(), {"A", "B"});
    ParallelSolution r = solve_parallel_paths(inst);
    oracle::BruteResult brute = oracle::brute_force(inst, 4);
    CHECK(brute.value == 2);
    CHECK(r.solution.value == brute.value);
    CHECK(validate_schedule(inst.graph, r.solution.schedule).empty());
  }

  TEST_CASE("direct edge beside a path of length two") {
    Instance inst = fixtures::corpus("pp_direct.tg");
    ParallelSolution r = solve_parallel_paths(inst);
    oracle::BruteResult brute = oracle::brute_force(inst, 5);
    CHECK(r.solution.value >= brute.value);
    CHECK(r.solution.value == solution_value(apply_schedule(inst.graph, r.solution.schedule),
                                             inst.sources));
  }

  TEST_CASE("one path with late labels") {
    TemporalGraph::Builder b;
    b.add_edge("A", "u", {1, 2});
    b.add_edge("u", "B", {1, 2});
    b.add_edge("A", "v", {5, 6});
    b.add_edge("v", "B", {5, 6});
    Instance inst = fixtures::with_sources(std::move(b).build(), {"A", "B"});
    ParallelSolution r = solve_parallel_paths(inst);
    Time exact = solve_exact(inst, {}, {8}).solution.value;
    CHECK(exact == oracle::brute_force(inst, 8).value);
    CHECK(r.solution.value >= exact);
    CHECK(r.solution.value >= lower_bound(inst));
  }

  TEST_CASE("sources must be the endpoints") {
    Instance inst = fixtures::with_sources(fixtures::pp2(), {"A", "B", "u"});
    CHECK_THROWS_AS(solve_parallel_paths(inst), Error);
    inst = fixtures::with_sources(fixtures::pp2(), {"A"});
    CHECK_THROWS_AS(solve_parallel_paths(inst), Error);
  }
}

TEST_SUITE("parallel paths properties") {
  TEST_CASE("greedy pair check agrees with exhaustive search") {
    std::size_t compared = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      RandomParams p;
      p.n = 3 + seed % 3;
      p.lifetime = 3;
      p.labels_per_edge = 2;
      p.vary_labels = true;
      Instance inst = gen_random(RandomKind::kParallelPaths, p, seed);
      if (inst.graph.label_count() > 7) continue;
      auto d = decompose_parallel_paths(inst.graph, inst.sources[0], inst.sources[1]);
      LabelState state(inst.graph);
      for (std::size_t x = 0; x < d.paths.size(); ++x)
        for (std::size_t y = 0; y < d.paths.size(); ++y)
          for (Time r1 = 1; r1 <= 4; ++r1)
            for (Time r2 = 1; r2 <= 4; ++r2) {
              INFO("seed " << seed << " x " << x << " y " << y << " r " << r1 << "," << r2);
              bool greedy = feasible_pair(inst.graph, d, x, y, r1, r2, state).has_value();
              CHECK(greedy == oracle::brute_pair(inst.graph, d.paths[x], d.paths[y], r1, r2,
                                                 std::max(r1, r2)));
              ++compared;
            }
    }
    CHECK(compared > 100);
  }

  TEST_CASE("one path both ways: every label pattern on three edges") {
    const std::vector<std::vector<Time>> sets = {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}};
    for (std::size_t code = 0; code < 216; ++code) {
      TemporalGraph::Builder b;
      b.add_edge("A", "u", sets[code % 6]);
      b.add_edge("u", "v", sets[code / 6 % 6]);
      b.add_edge("v", "B", sets[code / 36]);
      TemporalGraph g = std::move(b).build();
      auto d = decompose_parallel_paths(g, g.vertex("A"), g.vertex("B"));
      LabelState state(g);
      for (Time r1 = 1; r1 <= 6; ++r1)
        for (Time r2 = 1; r2 <= 6; ++r2) {
          INFO("code " << code << " r " << r1 << "," << r2);
          auto got = feasible_pair(g, d, 0, 0, r1, r2, state);
          CHECK(got.has_value() ==
                oracle::brute_pair(g, d.paths[0], d.paths[0], r1, r2, std::max(r1, r2)));
          if (got) {
            CHECK(got->a_to_b <= r1);
            CHECK(got->b_to_a <= r2);
          }
        }
    }
  }

  TEST_CASE("solutions verify and never beat the exact optimum") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      RandomParams p;
      p.n = 3 + seed % 3;
      p.lifetime = 3;
      p.labels_per_edge = 2;
      p.vary_labels = true;
      Instance inst = gen_random(RandomKind::kParallelPaths, p, seed);
      INFO("seed " << seed);
      ParallelSolution r = solve_parallel_paths(inst);
      CHECK(validate_schedule(inst.graph, r.solution.schedule).empty());
      CHECK(r.solution.value == solution_value(apply_schedule(inst.graph, r.solution.schedule),
                                               inst.sources));
      Time horizon = inst.graph.lifetime() + Time(inst.graph.vertex_count());
      for (const ScheduleEntry& e : r.solution.schedule.entries())
        horizon = std::max(horizon, e.target);
      CHECK(r.solution.value >= solve_exact(inst, {}, {horizon}).solution.value);
    }
  }
}
