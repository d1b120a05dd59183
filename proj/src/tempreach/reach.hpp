#pragma once

#include <vector>

#include "tempreach/schedule.hpp"
#include "tempreach/temporal_graph.hpp"

namespace tempreach {

/// Per-vertex earliest arrival time, kUnreachable where no temporal path exists.
using ArrivalMap = std::vector<Time>;

/// Earliest arrival over strictly increasing temporal paths leaving `source`
/// no earlier than `start_time + 1`. arrival(source) == start_time.
ArrivalMap earliest_arrival(const TemporalGraph& graph, VertexId source, Time start_time = 0);

/// Largest finite arrival, or kUnreachable if some vertex cannot be reached.
Time max_arrival(const ArrivalMap& arrivals);

Time reachtime(const TemporalGraph& graph, VertexId source);

/// max over sources of reachtime; kUnreachable dominates.
Time solution_value(const TemporalGraph& graph, std::span<const VertexId> sources);

struct Solution {
  DelaySchedule schedule;
  std::vector<ArrivalMap> arrivals;  // one map per source, in source order
  Time value = kUnreachable;
};

/// The verifier: applies `schedule` and recomputes arrivals and value from scratch.
Solution evaluate_solution(const TemporalGraph& graph, std::span<const VertexId> sources,
                           DelaySchedule schedule);

}  // namespace tempreach
