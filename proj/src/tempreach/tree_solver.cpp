#include "tempreach/tree_solver.hpp"

#include <algorithm>
#include <deque>

#include "tempreach/single_source.hpp"

namespace tempreach {

namespace {

struct Rooting {
  std::vector<VertexId> order;  // BFS order from {wi, wj}, roots first
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
};

// Orients the tree towards the edge (wi, wj); wi and wj are their own parents.
Rooting root_at_edge(const TemporalGraph& tree, VertexId wi, VertexId wj, EdgeId middle) {
  const std::size_t n = tree.vertex_count();
  Rooting r;
  r.parent.assign(n, wi);
  r.parent_edge.assign(n, middle);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{wi, wj};
  seen[wi] = seen[wj] = true;
  r.parent[wj] = wj;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    r.order.push_back(u);
    for (const Incidence& inc : tree.incidences(u)) {
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = true;
      r.parent[inc.neighbor] = u;
      r.parent_edge[inc.neighbor] = inc.edge;
      queue.push_back(inc.neighbor);
    }
  }
  return r;
}

void require_tree(const TemporalGraph& graph) {
  if (!graph.is_tree()) throw Error(ErrorCode::kNotATree, "underlying graph is not a tree");
}

}  // namespace

ConvergeResult fast_converge(const TemporalGraph& tree, std::span<const ColorRelease> releases,
                             VertexId wi, VertexId wj) {
  require_tree(tree);
  if (wi >= tree.vertex_count() || wj >= tree.vertex_count())
    throw Error(ErrorCode::kUnknownVertex, "wi/wj out of range");
  auto middle = tree.find_edge(wi, wj);
  if (!middle) throw Error(ErrorCode::kWiWjNotAdjacent, "wi and wj are not adjacent");

  const std::size_t n = tree.vertex_count();
  const std::size_t k = releases.size();
  Rooting rooting = root_at_edge(tree, wi, wj, *middle);

  ConvergeResult out{LabelState(tree), {}, {}, std::vector<Time>(n, kUnreachable)};
  std::vector<std::vector<std::size_t>> hosted(n);
  std::vector<Time> at(k);
  std::vector<std::size_t> visits(n, 0);
  std::vector<Time> latest(n, 0);
  std::vector<bool> stuck_below(n, false);

  auto visit = [&](VertexId v, Time t) {
    ++visits[v];
    latest[v] = std::max(latest[v], t);
  };
  for (std::size_t c = 0; c < k; ++c) {
    if (releases[c].vertex >= n) throw Error(ErrorCode::kUnknownVertex, "release out of range");
    hosted[releases[c].vertex].push_back(c);
    at[c] = releases[c].time;
    visit(releases[c].vertex, at[c]);
  }

  // Reverse BFS order visits every vertex after all of its outer subtrees, so
  // by then every colour released behind it has arrived.
  for (auto it = rooting.order.rbegin(); it != rooting.order.rend(); ++it) {
    VertexId u = *it;
    if (u == wi || u == wj || hosted[u].empty()) {
      if (u != wi && u != wj && stuck_below[u]) stuck_below[rooting.parent[u]] = true;
      continue;
    }
    VertexId up = rooting.parent[u];
    std::optional<Traversal> tr;
    if (!stuck_below[u]) {
      Time after = 0;
      for (std::size_t c : hosted[u]) after = std::max(after, at[c]);
      tr = out.state.earliest_traversal(rooting.parent_edge[u], after);
    }
    if (!tr) {
      for (std::size_t c : hosted[u]) at[c] = kUnreachable;
      stuck_below[up] = true;
      continue;
    }
    out.state.commit(rooting.parent_edge[u], *tr);
    for (std::size_t c : hosted[u]) {
      at[c] = tr->time;
      hosted[up].push_back(c);
      visit(up, tr->time);
    }
    hosted[u].clear();
  }

  out.colors.resize(k);
  for (VertexId end : {wi, wj})
    for (std::size_t c : hosted[end]) out.colors[c] = {end, at[c]};
  for (std::size_t c = 0; c < k; ++c)
    if (at[c] == kUnreachable) out.colors[c] = {rooting.parent[releases[c].vertex], kUnreachable};
  for (VertexId v = 0; v < n; ++v)
    if (k > 0 && visits[v] == k) out.all_colors_at[v] = latest[v];
  out.schedule = out.state.to_schedule(tree);
  return out;
}

TreeSolution solve_tree(const Instance& instance) {
  instance.validate();
  const TemporalGraph& graph = instance.graph;
  require_tree(graph);

  TreeSolution out;
  if (graph.edge_count() == 0) {
    out.solution = evaluate_solution(graph, instance.sources, {});
    return out;
  }

  std::vector<ColorRelease> releases;
  for (VertexId s : instance.sources) releases.push_back({s, 0});

  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    ConvergeResult conv = fast_converge(graph, releases, edge.u, edge.v);
    TreeEdgeTrial trial;
    trial.edge = e;

    Time gathered = 0;
    for (const ColorArrival& c : conv.colors) gathered = std::max(gathered, c.time);
    std::optional<Traversal> cross;
    if (gathered != kUnreachable) cross = conv.state.earliest_traversal(e, gathered);
    if (cross) {
      conv.state.commit(e, *cross);
      trial.crossing = cross->time;

      // Every vertex that already holds all colours may start the outward
      // wave; after the crossing that includes both ends of the edge.
      std::vector<WaveSeed> seeds;
      for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        Time ready = conv.all_colors_at[v];
        if (v == edge.u || v == edge.v) ready = std::min(ready, cross->time);
        if (ready != kUnreachable) seeds.push_back({v, ready});
      }
      trial.completion = max_arrival(run_wave(graph, conv.state, seeds, e));
    }
    trial.schedule = conv.state.to_schedule(graph);
    out.trials.push_back(std::move(trial));
  }

  for (std::size_t i = 1; i < out.trials.size(); ++i)
    if (out.trials[i].completion < out.trials[out.chosen].completion) out.chosen = i;
  out.solution = evaluate_solution(graph, instance.sources, out.trials[out.chosen].schedule);
  return out;
}

}  // namespace tempreach
