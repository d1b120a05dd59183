#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tempreach/temporal_graph.hpp"

namespace tempreach {

/// One move of a single label occurrence: the label `original` on edge {u, v}
/// is replaced by `target`. `target == original` is a pin and costs nothing.
struct ScheduleEntry {
  std::string u;
  std::string v;
  Time original = 0;
  Time target = 0;

  bool operator==(const ScheduleEntry&) const = default;
};

/// Ordered set of label moves keyed by (unordered endpoint pair, original label).
class DelaySchedule {
 public:
  /// Throws Error(kInvalidSchedule) if the key is already present.
  void add(ScheduleEntry entry);
  bool contains(const std::string& u, const std::string& v, Time original) const;

  const std::vector<ScheduleEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool operator==(const DelaySchedule& other) const { return entries_ == other.entries_; }

 private:
  using Key = std::tuple<std::string, std::string, Time>;
  static Key key_of(const std::string& u, const std::string& v, Time original);

  std::vector<ScheduleEntry> entries_;
  std::set<Key> keys_;
};

struct ScheduleCost {
  std::size_t delayed_count = 0;
  Time total_delay = 0;

  auto operator<=>(const ScheduleCost&) const = default;
};

ScheduleCost schedule_cost(const DelaySchedule& schedule);

enum class ViolationKind { kUnknownEdge, kUnknownLabel, kBackwardMove };

struct ScheduleViolation {
  ViolationKind kind;
  std::size_t entry_index;
  std::string message;
};

/// Lists every violation; an empty result means the schedule is valid.
std::vector<ScheduleViolation> validate_schedule(const TemporalGraph& graph,
                                                 const DelaySchedule& schedule);

/// Returns the delayed graph. Moved labels that land on an existing label of
/// the same edge collapse into one. Throws Error(kInvalidSchedule) naming the
/// first offending entry.
TemporalGraph apply_schedule(const TemporalGraph& graph, const DelaySchedule& schedule);

}  // namespace tempreach
