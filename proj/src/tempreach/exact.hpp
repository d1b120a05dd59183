#pragma once

#include <cstdint>
#include <optional>

#include "tempreach/reach.hpp"

namespace tempreach {

struct Budget {
  enum class Kind { kUnbounded, kMaxDelayedLabels, kMaxTotalDelay };
  Kind kind = Kind::kUnbounded;
  Time k = 0;

  static Budget unbounded() { return {}; }
  static Budget max_delayed_labels(Time k) { return {Kind::kMaxDelayedLabels, k}; }
  static Budget max_total_delay(Time k) { return {Kind::kMaxTotalDelay, k}; }
};

struct SearchConfig {
  std::optional<Time> horizon;            // default lifetime + |V|
  std::uint64_t node_limit = 50'000'000;  // 0 means no limit
};

struct ExactResult {
  Solution solution;        // value kUnreachable when nothing fits the horizon
  Time horizon = 0;         // optimality holds among schedules with new-times <= horizon
  bool node_limit_hit = false;
  std::uint64_t nodes = 0;
};

/// Branch and bound over every assignment of a new time in [original, H] to
/// each label, labels in edge order, candidate times ascending. Among optimal
/// schedules returns the least by (delayed count, total delay, new-time vector).
ExactResult solve_exact(const Instance& instance, Budget budget = {}, SearchConfig config = {});

struct DeadlineResult {
  std::optional<DelaySchedule> schedule;  // std::nullopt: no schedule meets the deadline
  bool node_limit_hit = false;
  std::uint64_t nodes = 0;
};

/// Whether some schedule within `budget` reaches everything from every source
/// by `deadline`. The witness is the first one in branching order.
DeadlineResult decide_deadline(const Instance& instance, Time deadline, Budget budget = {},
                               std::uint64_t node_limit = 50'000'000);

/// max over sources of the single-source optimum; no schedule does better.
Time lower_bound(const Instance& instance);

}  // namespace tempreach
