#include "tempreach/schedule.hpp"

#include <algorithm>

namespace tempreach {

DelaySchedule::Key DelaySchedule::key_of(const std::string& u, const std::string& v,
                                         Time original) {
  return u < v ? Key{u, v, original} : Key{v, u, original};
}

void DelaySchedule::add(ScheduleEntry entry) {
  if (!keys_.insert(key_of(entry.u, entry.v, entry.original)).second)
    throw Error(ErrorCode::kInvalidSchedule, "duplicate schedule entry for " + entry.u + " " +
                                                 entry.v + " " + std::to_string(entry.original));
  entries_.push_back(std::move(entry));
}

bool DelaySchedule::contains(const std::string& u, const std::string& v, Time original) const {
  return keys_.count(key_of(u, v, original)) > 0;
}

ScheduleCost schedule_cost(const DelaySchedule& schedule) {
  ScheduleCost cost;
  for (const auto& e : schedule.entries()) {
    if (e.target > e.original) {
      ++cost.delayed_count;
      cost.total_delay += e.target - e.original;
    }
  }
  return cost;
}

namespace {

std::string describe(const ScheduleEntry& e) {
  return "delay " + e.u + " " + e.v + " " + std::to_string(e.original) + " " +
         std::to_string(e.target);
}

}  // namespace

std::vector<ScheduleViolation> validate_schedule(const TemporalGraph& graph,
                                                 const DelaySchedule& schedule) {
  std::vector<ScheduleViolation> out;
  const auto& entries = schedule.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    auto u = graph.find_vertex(e.u);
    auto v = graph.find_vertex(e.v);
    std::optional<EdgeId> edge;
    if (u && v) edge = graph.find_edge(*u, *v);
    if (!edge) {
      out.push_back({ViolationKind::kUnknownEdge, i, "unknown edge in '" + describe(e) + "'"});
      continue;
    }
    const auto& labels = graph.edge(*edge).labels;
    if (!std::binary_search(labels.begin(), labels.end(), e.original))
      out.push_back({ViolationKind::kUnknownLabel, i, "unknown label in '" + describe(e) + "'"});
    if (e.target < e.original)
      out.push_back({ViolationKind::kBackwardMove, i, "backward move in '" + describe(e) + "'"});
  }
  return out;
}

TemporalGraph apply_schedule(const TemporalGraph& graph, const DelaySchedule& schedule) {
  if (auto violations = validate_schedule(graph, schedule); !violations.empty())
    throw Error(ErrorCode::kInvalidSchedule, violations.front().message);

  // Moves resolve against the original label positions, so a label moved onto
  // a value that is itself scheduled to move is not affected by that move.
  std::vector<std::vector<std::pair<Time, Time>>> moves(graph.edge_count());
  for (const auto& e : schedule.entries()) {
    EdgeId id = *graph.find_edge(graph.vertex(e.u), graph.vertex(e.v));
    moves[id].emplace_back(e.original, e.target);
  }

  TemporalGraph::Builder builder;
  for (const auto& name : graph.names()) builder.add_vertex(name);
  std::vector<Time> next;
  for (EdgeId id = 0; id < graph.edge_count(); ++id) {
    const Edge& edge = graph.edge(id);
    next = edge.labels;
    for (auto [from, to] : moves[id]) {
      auto pos = std::lower_bound(edge.labels.begin(), edge.labels.end(), from);
      next[static_cast<std::size_t>(pos - edge.labels.begin())] = to;
    }
    builder.add_edge(edge.u, edge.v, next);
  }
  return std::move(builder).build();
}

}  // namespace tempreach
