#pragma once

#include <vector>

#include "tempreach/label_state.hpp"
#include "tempreach/reach.hpp"

namespace tempreach {

/// Where and when a colour (one per source) becomes available.
struct ColorRelease {
  VertexId vertex;
  Time time = 0;
};

struct ColorArrival {
  VertexId endpoint;  // wi or wj
  Time time;          // kUnreachable if the colour got stuck
};

struct ConvergeResult {
  LabelState state;
  DelaySchedule schedule;
  std::vector<ColorArrival> colors;  // parallel to the releases
  /// Per vertex: latest arrival among colours if every colour passed through
  /// it, kUnreachable otherwise.
  std::vector<Time> all_colors_at;
};

/// Inward phase on a tree: every colour walks its unique path to the nearer of
/// the adjacent vertices wi, wj. A vertex forwards the colours it hosts once
/// every colour released behind it has arrived; all of them cross together at
/// the earliest traversal after the latest of their arrivals.
ConvergeResult fast_converge(const TemporalGraph& tree, std::span<const ColorRelease> releases,
                             VertexId wi, VertexId wj);

struct TreeEdgeTrial {
  EdgeId edge;
  Time crossing = kUnreachable;    // t1
  Time completion = kUnreachable;  // t2
  DelaySchedule schedule;
};

struct TreeSolution {
  Solution solution;
  std::vector<TreeEdgeTrial> trials;  // one per edge, in edge order
  std::size_t chosen = 0;             // index into trials
};

/// Multi-source solver for trees: for every edge run the inward phase, a
/// synchronized crossing of the edge, then greedy outward waves on both
/// sides; keep the edge with the smallest completion time.
TreeSolution solve_tree(const Instance& instance);

}  // namespace tempreach
