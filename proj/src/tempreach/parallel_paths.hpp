#pragma once

#include <optional>
#include <vector>

#include "tempreach/label_state.hpp"
#include "tempreach/reach.hpp"

namespace tempreach {

/// Internally disjoint paths between two endpoints. Every path starts at `a`
/// and ends at `b`; a direct a-b edge is a path of two vertices.
struct ParallelDecomposition {
  VertexId a = 0;
  VertexId b = 0;
  std::vector<std::vector<VertexId>> paths;  // in the order of a's incident edges
};

/// Throws Error(kNotParallelPaths) naming the first vertex that breaks the shape.
ParallelDecomposition decompose_parallel_paths(const TemporalGraph& graph, VertexId a,
                                               VertexId b);

struct PairOutcome {
  LabelState state;
  Time a_to_b = kUnreachable;
  Time b_to_a = kUnreachable;
};

/// Whether a walk a->b along path `x` can arrive by r1 and a walk b->a along
/// path `y` by r2, given the labels in `state`. Distinct paths are walked
/// greedily. When x == y a dynamic program over crossing times decides it,
/// allowing one label to carry both walks at the same time; the returned
/// state pins the earliest times for the chosen labels. std::nullopt means
/// reject.
std::optional<PairOutcome> feasible_pair(const TemporalGraph& graph,
                                         const ParallelDecomposition& decomposition,
                                         std::size_t x, std::size_t y, Time r1, Time r2,
                                         const LabelState& state);

/// Arrival times (not departure times) at which a colour is present at each
/// end of a path; a missing value means the colour never appears there.
struct EndReleases {
  std::optional<Time> at_a;
  std::optional<Time> at_b;
};

struct PathCoverage {
  Time completion = kUnreachable;  // all colours at every internal vertex
  LabelState state;
};

/// Covers the internal vertices of one path with every colour. For each colour
/// a split point is chosen: the internal prefix is reached from the `a` end and
/// the suffix from the `b` end (a colour available at only one end covers the
/// whole path from there). Waves are scheduled greedily over a copy of `state`;
/// every split combination and colour order is tried and the earliest
/// completion wins.
PathCoverage solve_path_with_releases(const TemporalGraph& graph,
                                      std::span<const VertexId> path,
                                      std::span<const EndReleases> colors,
                                      const LabelState& state);

struct ParallelSolution {
  Solution solution;
  Time candidate = kUnreachable;  // max(r1, r2, per-path completions) of the choice
  Time r1 = 0;
  Time r2 = 0;
  std::size_t x = 0;
  std::size_t y = 0;
};

/// Two-source solver for parallel-path graphs whose endpoints are the sources.
/// Sweeps the guessed mutual reaching times (r1, r2) lexicographically over
/// [1, lifetime + n - 1]^2 and every ordered path pair.
ParallelSolution solve_parallel_paths(const Instance& instance);

}  // namespace tempreach
