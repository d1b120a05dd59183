#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tempreach/schedule.hpp"
#include "tempreach/temporal_graph.hpp"

namespace tempreach {

struct LabelSlot {
  Time original = 0;
  Time current = 0;
  bool pinned = false;
};

enum class TraversalKind {
  kUseExisting,  // a label already sits at after + 1
  kDelay,        // an unpinned label at or before `after` moves to after + 1
  kWaitFor,      // the earliest label strictly later than after + 1
};

struct Traversal {
  Time time = 0;
  TraversalKind kind = TraversalKind::kUseExisting;
  std::size_t slot = 0;  // index into LabelState::slots(edge)
};

/// Working label positions shared by the waves of one solver run. Using a
/// label never consumes it; committing a traversal pins the label at the
/// traversal time so later waves can rely on it.
class LabelState {
 public:
  explicit LabelState(const TemporalGraph& graph);

  std::span<const LabelSlot> slots(EdgeId e) const {
    return {slots_.data() + offsets_[e], slots_.data() + offsets_[e + 1]};
  }

  /// Minimum feasible crossing time t > after. Ties prefer a label that is
  /// already in place over a delay, then the smallest original label.
  /// std::nullopt when every label is pinned at or before `after`.
  std::optional<Traversal> earliest_traversal(EdgeId e, Time after) const;

  /// Pins the chosen slot at the traversal time.
  void commit(EdgeId e, const Traversal& traversal);

  /// Moved labels in edge order then original-label order; pins are included
  /// only when requested.
  DelaySchedule to_schedule(const TemporalGraph& graph, bool include_pins = false) const;

 private:
  std::span<LabelSlot> mutable_slots(EdgeId e) {
    return {slots_.data() + offsets_[e], slots_.data() + offsets_[e + 1]};
  }

  std::vector<LabelSlot> slots_;
  std::vector<std::size_t> offsets_;
};

}  // namespace tempreach
