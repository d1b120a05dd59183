#include "tempreach/label_state.hpp"

namespace tempreach {

LabelState::LabelState(const TemporalGraph& graph) {
  offsets_.reserve(graph.edge_count() + 1);
  slots_.reserve(graph.label_count());
  offsets_.push_back(0);
  for (const Edge& edge : graph.edges()) {
    for (Time t : edge.labels) slots_.push_back({t, t, false});
    offsets_.push_back(slots_.size());
  }
}

std::optional<Traversal> LabelState::earliest_traversal(EdgeId e, Time after) const {
  std::optional<Traversal> best;
  Time best_original = 0;
  auto slot_span = slots(e);
  for (std::size_t i = 0; i < slot_span.size(); ++i) {
    const LabelSlot& s = slot_span[i];
    Traversal candidate;
    if (s.current > after) {
      candidate = {s.current,
                   s.current == after + 1 ? TraversalKind::kUseExisting : TraversalKind::kWaitFor, i};
    } else if (!s.pinned) {
      candidate = {after + 1, TraversalKind::kDelay, i};
    } else {
      continue;
    }
    bool better = !best || candidate.time < best->time;
    if (best && candidate.time == best->time) {
      bool cand_moves = candidate.kind == TraversalKind::kDelay;
      bool best_moves = best->kind == TraversalKind::kDelay;
      better = cand_moves != best_moves ? !cand_moves : s.original < best_original;
    }
    if (better) {
      best = candidate;
      best_original = s.original;
    }
  }
  return best;
}

void LabelState::commit(EdgeId e, const Traversal& traversal) {
  LabelSlot& s = mutable_slots(e)[traversal.slot];
  s.current = traversal.time;
  s.pinned = true;
}

DelaySchedule LabelState::to_schedule(const TemporalGraph& graph, bool include_pins) const {
  DelaySchedule out;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    for (const LabelSlot& s : slots(e)) {
      if (s.current > s.original || (include_pins && s.pinned))
        out.add({graph.name(edge.u), graph.name(edge.v), s.original, s.current});
    }
  }
  return out;
}

}  // namespace tempreach
