#include "tempreach/single_source.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

namespace tempreach {

namespace {

struct Candidate {
  Time time = kUnreachable;
  VertexId parent = 0;
  EdgeId edge = 0;
  Traversal traversal;
  bool seeded = false;
};

}  // namespace

ArrivalMap run_wave(const TemporalGraph& graph, LabelState& state,
                    std::span<const WaveSeed> seeds, std::optional<EdgeId> blocked) {
  const std::size_t n = graph.vertex_count();
  ArrivalMap arrival(n, kUnreachable);
  std::vector<Candidate> best(n);
  std::vector<bool> done(n, false);

  using Item = std::pair<Time, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;

  // Seeds are settled without committing anything; a relaxation that beats a
  // seed's own time replaces it.
  for (const WaveSeed& s : seeds) {
    if (s.vertex >= n) throw Error(ErrorCode::kUnknownVertex, "wave seed out of range");
    if (s.arrival < best[s.vertex].time) {
      best[s.vertex] = {s.arrival, 0, 0, {}, true};
      queue.emplace(s.arrival, s.vertex);
    }
  }

  while (!queue.empty()) {
    auto [t, u] = queue.top();
    queue.pop();
    if (done[u] || t != best[u].time) continue;
    done[u] = true;
    arrival[u] = t;
    if (!best[u].seeded) state.commit(best[u].edge, best[u].traversal);
    for (const Incidence& inc : graph.incidences(u)) {
      VertexId w = inc.neighbor;
      if (done[w] || (blocked && inc.edge == *blocked)) continue;
      auto tr = state.earliest_traversal(inc.edge, t);
      if (!tr) continue;
      Candidate& c = best[w];
      if (std::tie(tr->time, u) < std::tie(c.time, c.parent)) {
        bool improves_time = tr->time < c.time;
        c = {tr->time, u, inc.edge, *tr, false};
        if (improves_time) queue.emplace(tr->time, w);
      }
    }
  }
  return arrival;
}

SingleSourceResult solve_single_source(const TemporalGraph& graph, VertexId source,
                                       Time start_round) {
  if (source >= graph.vertex_count())
    throw Error(ErrorCode::kUnknownVertex, "source out of range");
  if (start_round < 1) throw Error(ErrorCode::kInvalidArgument, "start_round must be >= 1");
  LabelState state(graph);
  WaveSeed seed{source, start_round - 1};
  SingleSourceResult out;
  out.arrival = run_wave(graph, state, std::span<const WaveSeed>(&seed, 1));
  VertexId sources[] = {source};
  out.solution = evaluate_solution(graph, sources, state.to_schedule(graph));
  return out;
}

ArrivalMap oracle_single_source(const TemporalGraph& graph, VertexId source, Time start_time) {
  if (source >= graph.vertex_count())
    throw Error(ErrorCode::kUnknownVertex, "source out of range");
  ArrivalMap arrive(graph.vertex_count(), kUnreachable);
  using Item = std::pair<Time, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  arrive[source] = start_time;
  queue.emplace(start_time, source);
  while (!queue.empty()) {
    auto [a, u] = queue.top();
    queue.pop();
    if (a != arrive[u]) continue;
    for (const Incidence& inc : graph.incidences(u)) {
      Time t = std::max(a + 1, graph.edge(inc.edge).labels.front());
      if (t < arrive[inc.neighbor]) {
        arrive[inc.neighbor] = t;
        queue.emplace(t, inc.neighbor);
      }
    }
  }
  return arrive;
}

}  // namespace tempreach
