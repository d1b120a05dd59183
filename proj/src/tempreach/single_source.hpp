#pragma once

#include <optional>
#include <span>

#include "tempreach/label_state.hpp"
#include "tempreach/reach.hpp"

namespace tempreach {

struct WaveSeed {
  VertexId vertex;
  Time arrival;  // the seed may depart from arrival + 1 on
};

/// Greedy reachability wave over a shared LabelState.
///
/// Round r reaches every unreached neighbour w of a reached vertex u whose
/// earliest traversal (after arrival(u)) is at most r; the single chosen label
/// is pinned. When several reached vertices can deliver w in the same round
/// the one with the smallest vertex id wins. Implemented as time-ordered label
/// setting, which visits vertices in exactly the round order.
///
/// `blocked` is treated as absent. Returns per-vertex arrivals, kUnreachable
/// for vertices the wave cannot reach.
ArrivalMap run_wave(const TemporalGraph& graph, LabelState& state,
                    std::span<const WaveSeed> seeds, std::optional<EdgeId> blocked = {});

struct SingleSourceResult {
  Solution solution;
  ArrivalMap arrival;  // arrivals of the greedy wave
};

/// Optimal unconstrained schedule for one source. `start_round` is the first
/// round in which the source may depart (the source counts as reached at
/// start_round - 1). A source that cannot reach everything yields value
/// kUnreachable and the reached subset in `arrival`.
SingleSourceResult solve_single_source(const TemporalGraph& graph, VertexId source,
                                       Time start_round = 1);

/// Closed-form optimum per vertex: arrive(w) = min over edges uw of
/// max(arrive(u) + 1, min label(uw)). No schedule lets any vertex be reached
/// earlier than this.
ArrivalMap oracle_single_source(const TemporalGraph& graph, VertexId source, Time start_time = 0);

}  // namespace tempreach
