#pragma once

#include <cstdint>

#include "tempreach/temporal_graph.hpp"

namespace tempreach {

enum class RandomKind { kTree, kParallelPaths, kGeneral };

struct RandomParams {
  std::size_t n = 6;
  Time lifetime = 4;
  std::size_t labels_per_edge = 1;  // capped at lifetime
  bool vary_labels = false;         // draw each edge's label count from [1, labels_per_edge]
  std::size_t source_count = 1;     // ignored for parallel paths (always the two endpoints)
  std::size_t extra_edges = 0;      // general kind: edges added on top of a spanning tree
};

/// Deterministic per (kind, params, seed). Tree: uniform labelled tree via a
/// Prüfer sequence. Parallel paths: endpoints A and B joined by random
/// internally disjoint paths, at most one of them a direct edge. General: a
/// uniform spanning tree plus `extra_edges` distinct random chords, so always
/// connected. Labels are drawn uniformly without replacement from [1, lifetime].
/// Throws Error(kInvalidParams) on impossible parameters.
Instance gen_random(RandomKind kind, const RandomParams& params, std::uint64_t seed);

}  // namespace tempreach
