#include "tempreach/parallel_paths.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tempreach/single_source.hpp"

namespace tempreach {

namespace {

[[noreturn]] void not_parallel(const TemporalGraph& graph, VertexId v, const std::string& why) {
  throw Error(ErrorCode::kNotParallelPaths,
              "not a parallel-paths graph at '" + graph.name(v) + "': " + why);
}

EdgeId edge_between(const TemporalGraph& graph, VertexId a, VertexId b) {
  return *graph.find_edge(a, b);
}

// Greedy walk along `path` from index `from` towards index `to` (inclusive),
// starting at `start`. Returns the arrival at each visited vertex in walk
// order (excluding the start); stops with kUnreachable once a crossing fails.
std::vector<Time> walk(const TemporalGraph& graph, std::span<const VertexId> path,
                       std::size_t from, std::size_t to, Time start, LabelState& state) {
  std::vector<Time> arrivals;
  Time now = start;
  int step = to >= from ? 1 : -1;
  for (std::size_t i = from; i != to; i += step) {
    if (now == kUnreachable) {
      arrivals.push_back(kUnreachable);
      continue;
    }
    EdgeId e = edge_between(graph, path[i], path[i + step]);
    auto tr = state.earliest_traversal(e, now);
    if (!tr) {
      now = kUnreachable;
    } else {
      state.commit(e, *tr);
      now = tr->time;
    }
    arrivals.push_back(now);
  }
  return arrivals;
}

Time walk_arrival(const TemporalGraph& graph, std::span<const VertexId> path, bool forward,
                  Time start, LabelState& state) {
  std::size_t last = path.size() - 1;
  auto arrivals = forward ? walk(graph, path, 0, last, start, state)
                          : walk(graph, path, last, 0, start, state);
  return arrivals.empty() ? start : arrivals.back();
}


// Crossing times of both walks on one path. Edge i joins path[i] and path[i+1];
// A crosses the edges in increasing order, B in decreasing order, so A's times
// increase along the path and B's decrease. A label used by both walks carries
// both at the same time. The frontier after edge i maps A's crossing time to
// the latest possible B crossing time there; later B times leave more room.
std::optional<PairOutcome> shared_path_pair(const TemporalGraph& graph,
                                            std::span<const VertexId> path, Time r1, Time r2,
                                            const LabelState& state) {
  struct Step {
    Time a = 0;
    Time b = 0;
    std::size_t slot_a = 0;
    std::size_t slot_b = 0;
    Time prev_a = 0;  // key of the predecessor in the previous frontier
  };
  using Frontier = std::map<Time, Step>;  // a -> step with the latest b

  const std::size_t hops = path.size() - 1;
  std::vector<EdgeId> edges(hops);
  for (std::size_t i = 0; i < hops; ++i) edges[i] = edge_between(graph, path[i], path[i + 1]);

  auto offer = [](Frontier& f, const Step& s) {
    auto it = f.find(s.a);
    if (it == f.end() || it->second.b < s.b) f[s.a] = s;
  };
  auto prune = [](Frontier& f) {
    Time best_b = -1;
    for (auto it = f.begin(); it != f.end();) {
      if (it->second.b <= best_b) {
        it = f.erase(it);
      } else {
        best_b = it->second.b;
        ++it;
      }
    }
  };

  std::vector<Frontier> layers(hops + 1);
  layers[0][0] = Step{0, r2 + 1, 0, 0, 0};
  for (std::size_t i = 0; i < hops; ++i) {
    auto slots = state.slots(edges[i]);
    for (const auto& [a, prev] : layers[i]) {
      const Time b_bound = prev.b;  // B must cross strictly before this
      for (std::size_t sa = 0; sa < slots.size(); ++sa) {
        const LabelSlot& la = slots[sa];
        for (std::size_t sb = 0; sb < slots.size(); ++sb) {
          const LabelSlot& lb = slots[sb];
          if (sa != sb) {
            Time ta = la.pinned ? la.current : std::max(a + 1, la.current);
            Time tb = lb.pinned ? lb.current : b_bound - 1;
            if (ta <= a || ta > r1 || tb >= b_bound || tb < lb.current) continue;
            offer(layers[i + 1], Step{ta, tb, sa, sb, a});
          } else {
            Time lo = la.pinned ? la.current : std::max(a + 1, la.current);
            Time hi = la.pinned ? la.current : std::min(b_bound - 1, r1);
            lo = std::max(lo, a + 1);
            hi = std::min({hi, b_bound - 1, r1});
            for (Time t = lo; t <= hi; ++t) offer(layers[i + 1], Step{t, t, sa, sb, a});
          }
        }
      }
    }
    prune(layers[i + 1]);
    if (layers[i + 1].empty()) return std::nullopt;
  }

  // Recover the label choices, then recompute both walks as early as those
  // choices allow; the shared label (at most one) takes the later of the two
  // earliest times.
  std::vector<std::size_t> slot_a(hops), slot_b(hops);
  Time key = layers[hops].begin()->first;
  for (std::size_t i = hops; i > 0; --i) {
    const Step& s = layers[i].at(key);
    slot_a[i - 1] = s.slot_a;
    slot_b[i - 1] = s.slot_b;
    key = s.prev_a;
  }
  auto earliest = [&](const LabelSlot& l, Time after) {
    return l.pinned ? l.current : std::max(after + 1, l.current);
  };
  std::vector<Time> ta(hops), tb(hops);
  std::optional<std::size_t> shared;
  for (std::size_t i = 0; i < hops; ++i)
    if (slot_a[i] == slot_b[i]) shared = i;
  std::size_t meet = shared.value_or(hops);
  Time now = 0;
  for (std::size_t i = 0; i < meet; ++i) ta[i] = now = earliest(state.slots(edges[i])[slot_a[i]], now);
  Time back = 0;
  for (std::size_t i = hops; i-- > meet + (shared ? 1 : 0);)
    tb[i] = back = earliest(state.slots(edges[i])[slot_b[i]], back);
  if (shared) {
    std::size_t k = *shared;
    Time t = std::max(earliest(state.slots(edges[k])[slot_a[k]], now),
                      earliest(state.slots(edges[k])[slot_b[k]], back));
    ta[k] = tb[k] = now = back = t;
  }
  for (std::size_t i = meet + (shared ? 1 : 0); i < hops; ++i)
    ta[i] = now = earliest(state.slots(edges[i])[slot_a[i]], now);
  for (std::size_t i = meet; i-- > 0;) tb[i] = back = earliest(state.slots(edges[i])[slot_b[i]], back);

  PairOutcome out{state};
  for (std::size_t i = 0; i < hops; ++i) {
    out.state.commit(edges[i], Traversal{ta[i], TraversalKind::kDelay, slot_a[i]});
    out.state.commit(edges[i], Traversal{tb[i], TraversalKind::kDelay, slot_b[i]});
  }
  out.a_to_b = hops == 0 ? 0 : ta[hops - 1];
  out.b_to_a = hops == 0 ? 0 : tb[0];
  if (out.a_to_b > r1 || out.b_to_a > r2) return std::nullopt;
  return out;
}

}  // namespace

ParallelDecomposition decompose_parallel_paths(const TemporalGraph& graph, VertexId a,
                                               VertexId b) {
  const std::size_t n = graph.vertex_count();
  if (a >= n || b >= n) throw Error(ErrorCode::kUnknownVertex, "endpoint out of range");
  if (a == b) not_parallel(graph, a, "endpoints coincide");

  ParallelDecomposition out{a, b, {}};
  std::vector<bool> seen(n, false);
  seen[a] = seen[b] = true;
  for (const Incidence& first : graph.incidences(a)) {
    std::vector<VertexId> path{a};
    VertexId prev = a;
    VertexId cur = first.neighbor;
    while (cur != b) {
      if (cur == a) not_parallel(graph, cur, "path returns to its start");
      if (seen[cur]) not_parallel(graph, cur, "vertex shared by two paths");
      if (graph.degree(cur) != 2) not_parallel(graph, cur, "internal vertex of degree " +
                                                               std::to_string(graph.degree(cur)));
      seen[cur] = true;
      path.push_back(cur);
      auto inc = graph.incidences(cur);
      VertexId next = inc[0].neighbor == prev ? inc[1].neighbor : inc[0].neighbor;
      prev = cur;
      cur = next;
    }
    path.push_back(b);
    out.paths.push_back(std::move(path));
  }
  if (out.paths.empty()) not_parallel(graph, a, "no path to the other endpoint");
  for (VertexId v = 0; v < n; ++v)
    if (!seen[v]) not_parallel(graph, v, "vertex off every path");
  return out;
}

std::optional<PairOutcome> feasible_pair(const TemporalGraph& graph,
                                         const ParallelDecomposition& decomposition,
                                         std::size_t x, std::size_t y, Time r1, Time r2,
                                         const LabelState& state) {
  const auto& px = decomposition.paths.at(x);
  const auto& py = decomposition.paths.at(y);
  if (x == y) return shared_path_pair(graph, px, r1, r2, state);
  // Distinct paths share no edge, so each greedy walk is optimal on its own.
  PairOutcome out{state};
  out.a_to_b = walk_arrival(graph, px, true, 0, out.state);
  out.b_to_a = walk_arrival(graph, py, false, 0, out.state);
  if (out.a_to_b <= r1 && out.b_to_a <= r2) return out;
  return std::nullopt;
}

PathCoverage solve_path_with_releases(const TemporalGraph& graph,
                                      std::span<const VertexId> path,
                                      std::span<const EndReleases> colors,
                                      const LabelState& state) {
  if (path.size() < 2) throw Error(ErrorCode::kInvalidArgument, "path needs two endpoints");
  const std::size_t inner = path.size() - 2;
  const std::size_t last = path.size() - 1;
  PathCoverage best{kUnreachable, state};
  if (inner == 0) {
    best.completion = 0;
    return best;
  }

  // split[c] = number of internal vertices colour c reaches from the a end.
  std::vector<std::size_t> lo(colors.size()), hi(colors.size()), split(colors.size());
  for (std::size_t c = 0; c < colors.size(); ++c) {
    if (!colors[c].at_a && !colors[c].at_b) return best;
    lo[c] = colors[c].at_b ? 0 : inner;
    hi[c] = colors[c].at_a ? inner : 0;
    split[c] = lo[c];
  }
  std::vector<std::size_t> order(colors.size());

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    do {
      PathCoverage trial{0, state};
      for (std::size_t c : order) {
        if (split[c] > 0) {
          auto arr = walk(graph, path, 0, split[c], *colors[c].at_a, trial.state);
          for (Time t : arr) trial.completion = std::max(trial.completion, t);
        }
        if (split[c] < inner) {
          auto arr = walk(graph, path, last, split[c] + 1, *colors[c].at_b, trial.state);
          for (Time t : arr) trial.completion = std::max(trial.completion, t);
        }
      }
      if (trial.completion < best.completion) best = std::move(trial);
    } while (std::next_permutation(order.begin(), order.end()));

    std::size_t c = 0;
    while (c < colors.size() && split[c] == hi[c]) split[c] = lo[c], ++c;
    if (c == colors.size()) break;
    ++split[c];
  }
  return best;
}

ParallelSolution solve_parallel_paths(const Instance& instance) {
  instance.validate();
  const TemporalGraph& graph = instance.graph;
  if (instance.sources.size() != 2)
    throw Error(ErrorCode::kSourcesNotEndpoints, "parallel-paths solver needs exactly two sources");
  const VertexId a = instance.sources[0];
  const VertexId b = instance.sources[1];
  ParallelDecomposition dec = decompose_parallel_paths(graph, a, b);

  Time lower = 0;
  for (VertexId s : instance.sources)
    lower = std::max(lower, max_arrival(oracle_single_source(graph, s)));

  const Time horizon = graph.lifetime() + static_cast<Time>(graph.vertex_count()) - 1;
  const std::size_t paths = dec.paths.size();
  const LabelState fresh(graph);

  ParallelSolution out;
  std::optional<LabelState> best_state;
  for (Time r1 = 1; r1 <= horizon; ++r1) {
    for (Time r2 = 1; r2 <= horizon; ++r2) {
      if (std::max(r1, r2) >= out.candidate) continue;
      for (std::size_t x = 0; x < paths; ++x) {
        for (std::size_t y = 0; y < paths; ++y) {
          auto pair = feasible_pair(graph, dec, x, y, r1, r2, fresh);
          if (!pair) continue;

          // Release points per sub-case, as arrival times. Colour 0 is a's.
          const std::vector<std::vector<EndReleases>> cases = {
              {{r2, r1}, {r2, r1}},                        // both colours wait at both ends
              {{0, r1}, {std::nullopt, 0}},                // a's colour also appears at b
              {{0, std::nullopt}, {r2, 0}},                // b's colour also appears at a
              {{r2, r1}, {std::nullopt, 0}},               // a's colour waits
              {{0, std::nullopt}, {r2, r1}},               // b's colour waits
          };
          LabelState running = pair->state;
          Time candidate = std::max(r1, r2);
          for (const auto& path : dec.paths) {
            std::optional<PathCoverage> best_path;
            for (const auto& releases : cases) {
              PathCoverage cov = solve_path_with_releases(graph, path, releases, running);
              if (!best_path || cov.completion < best_path->completion) best_path = std::move(cov);
            }
            candidate = std::max(candidate, best_path->completion);
            if (candidate >= out.candidate) break;
            running = std::move(best_path->state);
          }
          if (candidate < out.candidate) {
            out.candidate = candidate;
            out.r1 = r1;
            out.r2 = r2;
            out.x = x;
            out.y = y;
            best_state = std::move(running);
            if (candidate == lower) goto done;
          }
        }
      }
    }
  }
done:
  DelaySchedule schedule = best_state ? best_state->to_schedule(graph) : DelaySchedule{};
  out.solution = evaluate_solution(graph, instance.sources, std::move(schedule));
  return out;
}

}  // namespace tempreach
