#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tempreach/types.hpp"

namespace tempreach {

/// Undirected edge with its sorted, duplicate-free time labels.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<Time> labels;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Immutable temporal graph: named vertices and labelled undirected edges.
/// Vertex and edge order is the insertion order and is preserved everywhere.
class TemporalGraph {
 public:
  class Builder;

  TemporalGraph() = default;

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t label_count() const { return label_count_; }
  Time lifetime() const { return lifetime_; }

  const std::string& name(VertexId v) const { return names_[v]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Throws Error(kUnknownVertex).
  VertexId vertex(std::string_view name) const;

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  /// Incident edges of `v` in edge insertion order.
  std::span<const Incidence> incidences(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Static hop distances from `source` in the underlying graph (kUnreachable if disconnected).
  std::vector<Time> hop_distances(VertexId source) const;
  bool is_connected() const;
  bool is_tree() const;

  bool operator==(const TemporalGraph& other) const {
    return names_ == other.names_ && edges_ == other.edges_;
  }

 private:
  static std::uint64_t pair_key(VertexId a, VertexId b);
  void index();

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, EdgeId> by_pair_;
  std::vector<Incidence> adjacency_;
  std::vector<std::size_t> offsets_{0};
  std::size_t label_count_ = 0;
  Time lifetime_ = 0;
};

/// Accumulates vertices and edges. Repeated edges between the same unordered
/// pair merge their label sets; undeclared endpoints are declared on first use.
class TemporalGraph::Builder {
 public:
  VertexId add_vertex(std::string_view name);
  /// Adds the vertex if it is absent; returns its id either way.
  VertexId ensure_vertex(std::string_view name);
  EdgeId add_edge(std::string_view u, std::string_view v, std::span<const Time> labels);
  EdgeId add_edge(VertexId u, VertexId v, std::span<const Time> labels);
  EdgeId add_edge(std::string_view u, std::string_view v, std::initializer_list<Time> labels) {
    return add_edge(u, v, std::span<const Time>(labels.begin(), labels.size()));
  }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::size_t vertex_count() const { return graph_.names_.size(); }

  TemporalGraph build() &&;

 private:
  TemporalGraph graph_;
};

/// A temporal graph plus its ordered set of source vertices.
struct Instance {
  TemporalGraph graph;
  std::vector<VertexId> sources;

  /// Throws Error(kInvalidInstance) on empty or duplicated sources.
  void validate() const;
  bool operator==(const Instance&) const = default;
};

}  // namespace tempreach
