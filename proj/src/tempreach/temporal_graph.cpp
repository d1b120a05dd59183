#include "tempreach/temporal_graph.hpp"

#include <algorithm>
#include <deque>

namespace tempreach {

std::uint64_t TemporalGraph::pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::optional<VertexId> TemporalGraph::find_vertex(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

VertexId TemporalGraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

std::optional<EdgeId> TemporalGraph::find_edge(VertexId a, VertexId b) const {
  auto it = by_pair_.find(pair_key(a, b));
  if (it == by_pair_.end()) return std::nullopt;
  return it->second;
}

void TemporalGraph::index() {
  const std::size_t n = names_.size();
  offsets_.assign(n + 1, 0);
  label_count_ = 0;
  lifetime_ = 0;
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
    label_count_ += e.labels.size();
    lifetime_ = std::max(lifetime_, e.labels.back());
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
  }
}

std::vector<Time> TemporalGraph::hop_distances(VertexId source) const {
  std::vector<Time> dist(vertex_count(), kUnreachable);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (const Incidence& inc : incidences(u)) {
      if (dist[inc.neighbor] == kUnreachable) {
        dist[inc.neighbor] = dist[u] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

bool TemporalGraph::is_connected() const {
  if (vertex_count() == 0) return true;
  auto dist = hop_distances(0);
  return std::none_of(dist.begin(), dist.end(), [](Time d) { return d == kUnreachable; });
}

bool TemporalGraph::is_tree() const {
  return vertex_count() > 0 && edge_count() + 1 == vertex_count() && is_connected();
}

VertexId TemporalGraph::Builder::add_vertex(std::string_view name) {
  if (name.empty()) throw Error(ErrorCode::kInvalidGraph, "empty vertex name");
  if (graph_.by_name_.count(std::string(name)))
    throw Error(ErrorCode::kInvalidGraph, "duplicate vertex '" + std::string(name) + "'");
  auto id = static_cast<VertexId>(graph_.names_.size());
  graph_.names_.emplace_back(name);
  graph_.by_name_.emplace(std::string(name), id);
  return id;
}

VertexId TemporalGraph::Builder::ensure_vertex(std::string_view name) {
  if (auto v = find_vertex(name)) return *v;
  return add_vertex(name);
}

std::optional<VertexId> TemporalGraph::Builder::find_vertex(std::string_view name) const {
  return graph_.find_vertex(name);
}

EdgeId TemporalGraph::Builder::add_edge(std::string_view u, std::string_view v,
                                        std::span<const Time> labels) {
  VertexId a = ensure_vertex(u);
  VertexId b = ensure_vertex(v);
  return add_edge(a, b, labels);
}

EdgeId TemporalGraph::Builder::add_edge(VertexId u, VertexId v, std::span<const Time> labels) {
  const auto n = graph_.names_.size();
  if (u >= n || v >= n) throw Error(ErrorCode::kUnknownVertex, "edge endpoint out of range");
  if (u == v)
    throw Error(ErrorCode::kInvalidGraph, "self-loop on '" + graph_.names_[u] + "'");
  if (labels.empty()) throw Error(ErrorCode::kInvalidGraph, "edge without labels");
  for (Time t : labels)
    if (t < 1) throw Error(ErrorCode::kInvalidGraph, "label " + std::to_string(t) + " < 1");

  EdgeId id;
  auto key = pair_key(u, v);
  if (auto it = graph_.by_pair_.find(key); it != graph_.by_pair_.end()) {
    id = it->second;
  } else {
    id = static_cast<EdgeId>(graph_.edges_.size());
    graph_.edges_.push_back({u, v, {}});
    graph_.by_pair_.emplace(key, id);
  }
  auto& ls = graph_.edges_[id].labels;
  ls.insert(ls.end(), labels.begin(), labels.end());
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  return id;
}

TemporalGraph TemporalGraph::Builder::build() && {
  graph_.index();
  return std::move(graph_);
}

void Instance::validate() const {
  if (sources.empty()) throw Error(ErrorCode::kInvalidInstance, "instance has no sources");
  std::vector<bool> seen(graph.vertex_count(), false);
  for (VertexId s : sources) {
    if (s >= graph.vertex_count()) throw Error(ErrorCode::kUnknownVertex, "source out of range");
    if (seen[s])
      throw Error(ErrorCode::kInvalidInstance, "duplicate source '" + graph.name(s) + "'");
    seen[s] = true;
  }
}

}  // namespace tempreach
