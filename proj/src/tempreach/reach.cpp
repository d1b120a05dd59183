#include "tempreach/reach.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace tempreach {

ArrivalMap earliest_arrival(const TemporalGraph& graph, VertexId source, Time start_time) {
  if (source >= graph.vertex_count())
    throw Error(ErrorCode::kUnknownVertex, "source out of range");

  // Arrival-ordered label setting. Traversing edge uw after arriving at u at
  // time a uses the first label strictly greater than a, which is monotone in
  // a, so the first time a vertex is settled is its earliest arrival.
  ArrivalMap arrival(graph.vertex_count(), kUnreachable);
  using Item = std::pair<Time, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  arrival[source] = start_time;
  queue.emplace(start_time, source);
  while (!queue.empty()) {
    auto [t, u] = queue.top();
    queue.pop();
    if (t != arrival[u]) continue;
    for (const Incidence& inc : graph.incidences(u)) {
      const auto& labels = graph.edge(inc.edge).labels;
      auto it = std::upper_bound(labels.begin(), labels.end(), t);
      if (it == labels.end()) continue;
      if (*it < arrival[inc.neighbor]) {
        arrival[inc.neighbor] = *it;
        queue.emplace(*it, inc.neighbor);
      }
    }
  }
  return arrival;
}

Time max_arrival(const ArrivalMap& arrivals) {
  Time best = 0;
  for (Time t : arrivals) best = std::max(best, t);
  return best;
}

Time reachtime(const TemporalGraph& graph, VertexId source) {
  return max_arrival(earliest_arrival(graph, source));
}

Time solution_value(const TemporalGraph& graph, std::span<const VertexId> sources) {
  Time value = 0;
  for (VertexId s : sources) value = std::max(value, reachtime(graph, s));
  return value;
}

Solution evaluate_solution(const TemporalGraph& graph, std::span<const VertexId> sources,
                           DelaySchedule schedule) {
  Solution out;
  TemporalGraph delayed = apply_schedule(graph, schedule);
  out.schedule = std::move(schedule);
  out.value = 0;
  for (VertexId s : sources) {
    out.arrivals.push_back(earliest_arrival(delayed, s));
    out.value = std::max(out.value, max_arrival(out.arrivals.back()));
  }
  return out;
}

}  // namespace tempreach
