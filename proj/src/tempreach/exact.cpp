#include "tempreach/exact.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

#include "tempreach/single_source.hpp"

namespace tempreach {

namespace {

struct FlatLabel {
  EdgeId edge;
  Time original;
};

// Best key found so far. A pseudo incumbent stands for "anything above the
// deadline" and loses every tie on the time vector.
struct Incumbent {
  Time value = kUnreachable;
  std::size_t count = 0;
  Time total = 0;
  std::vector<Time> times;
  bool real = false;
};

class Search {
 public:
  Search(const Instance& instance, Budget budget, Time horizon, std::uint64_t node_limit)
      : graph_(instance.graph),
        sources_(instance.sources),
        budget_(budget),
        horizon_(horizon),
        node_limit_(node_limit) {
    first_.push_back(0);
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
      for (Time t : graph_.edge(e).labels) labels_.push_back({e, t});
      first_.push_back(labels_.size());
    }
    times_.resize(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) times_[i] = labels_[i].original;
    arrival_.resize(graph_.vertex_count());
  }

  void seed(Incumbent incumbent) { best_ = std::move(incumbent); }
  void stop_at(Time value) { stop_value_ = value; }

  std::vector<Time> times_of(const DelaySchedule& schedule) const {
    std::vector<Time> out = times_;
    for (const ScheduleEntry& entry : schedule.entries()) {
      EdgeId e = *graph_.find_edge(graph_.vertex(entry.u), graph_.vertex(entry.v));
      for (std::size_t i = first_[e]; i < first_[e + 1]; ++i)
        if (labels_[i].original == entry.original) out[i] = entry.target;
    }
    return out;
  }

  void run() { dfs(0, 0, 0); }

  const Incumbent& best() const { return best_; }
  bool limit_hit() const { return limit_hit_; }
  std::uint64_t nodes() const { return nodes_; }

  DelaySchedule schedule_of(const std::vector<Time>& times) const {
    DelaySchedule out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (times[i] == labels_[i].original) continue;
      const Edge& edge = graph_.edge(labels_[i].edge);
      out.add({graph_.name(edge.u), graph_.name(edge.v), labels_[i].original, times[i]});
    }
    return out;
  }

 private:
  // Earliest crossing of edge e strictly after `after`. Labels before `depth`
  // sit at their assigned times. Later labels sit at their original time, or
  // in the relaxed mode may be used at any time in [original, original + slack].
  Time next_after(EdgeId e, Time after, std::size_t depth, bool relaxed, Time slack) const {
    Time best = kUnreachable;
    for (std::size_t i = first_[e]; i < first_[e + 1]; ++i) {
      Time t;
      if (i < depth || !relaxed) {
        t = i < depth ? times_[i] : labels_[i].original;
        if (t <= after) continue;
      } else if (labels_[i].original > after) {
        t = labels_[i].original;
      } else if (after + 1 <= std::min(labels_[i].original + slack, cap())) {
        t = after + 1;
      } else {
        continue;
      }
      best = std::min(best, t);
    }
    return best;
  }

  Time value_of(std::size_t depth, bool relaxed, Time slack) {
    using Item = std::pair<Time, VertexId>;
    Time value = 0;
    for (VertexId s : sources_) {
      std::fill(arrival_.begin(), arrival_.end(), kUnreachable);
      std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
      arrival_[s] = 0;
      queue.emplace(0, s);
      while (!queue.empty()) {
        auto [a, u] = queue.top();
        queue.pop();
        if (a != arrival_[u]) continue;
        for (const Incidence& inc : graph_.incidences(u)) {
          Time t = next_after(inc.edge, a, depth, relaxed, slack);
          if (t < arrival_[inc.neighbor]) {
            arrival_[inc.neighbor] = t;
            queue.emplace(t, inc.neighbor);
          }
        }
      }
      for (Time a : arrival_) value = std::max(value, a);
      if (value == kUnreachable) break;
    }
    return value;
  }

  // Cap on any new time still worth trying.
  Time cap() const { return std::min(horizon_, best_.value); }

  Time slack(std::size_t count, Time total) const {
    Time room = cap();
    switch (budget_.kind) {
      case Budget::Kind::kUnbounded:
        return room;
      case Budget::Kind::kMaxDelayedLabels:
        return static_cast<Time>(count) < budget_.k ? room : 0;
      case Budget::Kind::kMaxTotalDelay:
        return budget_.k - total;
    }
    return 0;
  }

  // Lexicographic comparison of (value, count, total, times[0..depth) + originals)
  // against the incumbent.
  bool beats(Time value, std::size_t count, Time total, std::size_t depth) const {
    auto mine = std::tie(value, count, total);
    auto theirs = std::tie(best_.value, best_.count, best_.total);
    if (mine != theirs) return mine < theirs;
    if (!best_.real) return false;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      Time t = i < depth ? times_[i] : labels_[i].original;
      if (t != best_.times[i]) return t < best_.times[i];
    }
    return false;
  }

  void dfs(std::size_t depth, std::size_t count, Time total) {
    if (done_) return;
    if (node_limit_ && ++nodes_ > node_limit_) {
      limit_hit_ = done_ = true;
      return;
    }
    if (!node_limit_) ++nodes_;

    Time lb = value_of(depth, true, slack(count, total));
    if (lb == kUnreachable || !beats(lb, count, total, depth)) return;

    Time value = value_of(depth, false, 0);
    if (value != kUnreachable && beats(value, count, total, depth)) {
      best_ = {value, count, total, times_, true};
      for (std::size_t i = depth; i < labels_.size(); ++i) best_.times[i] = labels_[i].original;
      if (stop_value_ && value <= *stop_value_) {
        done_ = true;
        return;
      }
    }
    if (value == lb || depth == labels_.size()) return;
    // Everything below moves at least one more label.
    if (std::tuple(best_.value, best_.count, best_.total) < std::tuple(lb, count + 1, total + 1))
      return;

    const Time original = labels_[depth].original;
    dfs(depth + 1, count, total);
    if (budget_.kind == Budget::Kind::kMaxDelayedLabels && static_cast<Time>(count) >= budget_.k)
      return;
    for (Time t = original + 1; t <= cap() && !done_; ++t) {
      if (budget_.kind == Budget::Kind::kMaxTotalDelay && total + (t - original) > budget_.k) break;
      times_[depth] = t;
      dfs(depth + 1, count + 1, total + (t - original));
    }
    times_[depth] = original;
  }

  const TemporalGraph& graph_;
  const std::vector<VertexId>& sources_;
  Budget budget_;
  Time horizon_;
  std::uint64_t node_limit_;
  std::optional<Time> stop_value_;

  std::vector<FlatLabel> labels_;
  std::vector<std::size_t> first_;
  std::vector<Time> times_;
  std::vector<Time> arrival_;
  Incumbent best_;
  std::uint64_t nodes_ = 0;
  bool limit_hit_ = false;
  bool done_ = false;
};

void check_budget(const Budget& budget) {
  if (budget.k < 0) throw Error(ErrorCode::kInvalidArgument, "budget must be >= 0");
}

}  // namespace

ExactResult solve_exact(const Instance& instance, Budget budget, SearchConfig config) {
  instance.validate();
  check_budget(budget);
  const TemporalGraph& graph = instance.graph;
  Time horizon =
      config.horizon.value_or(graph.lifetime() + static_cast<Time>(graph.vertex_count()));
  if (horizon < graph.lifetime())
    throw Error(ErrorCode::kInvalidArgument, "horizon below the lifetime");

  Search search(instance, budget, horizon, config.node_limit);
  if (instance.sources.size() == 1 && budget.kind == Budget::Kind::kUnbounded) {
    SingleSourceResult greedy = solve_single_source(graph, instance.sources[0]);
    Time latest = 0;
    for (const ScheduleEntry& entry : greedy.solution.schedule.entries())
      latest = std::max(latest, entry.target);
    if (greedy.solution.value != kUnreachable && latest <= horizon) {
      ScheduleCost cost = schedule_cost(greedy.solution.schedule);
      search.seed({greedy.solution.value, cost.delayed_count, cost.total_delay,
                   search.times_of(greedy.solution.schedule), true});
    }
  }
  search.run();

  ExactResult out;
  out.horizon = horizon;
  out.node_limit_hit = search.limit_hit();
  out.nodes = search.nodes();
  if (search.best().real) {
    out.solution =
        evaluate_solution(graph, instance.sources, search.schedule_of(search.best().times));
  }
  return out;
}

DeadlineResult decide_deadline(const Instance& instance, Time deadline, Budget budget,
                               std::uint64_t node_limit) {
  instance.validate();
  check_budget(budget);
  if (deadline < 1) throw Error(ErrorCode::kInvalidArgument, "deadline must be >= 1");

  Search search(instance, budget, deadline, node_limit);
  search.seed({deadline + 1, 0, 0, {}, false});
  search.stop_at(deadline);
  search.run();

  DeadlineResult out;
  out.node_limit_hit = search.limit_hit();
  out.nodes = search.nodes();
  if (search.best().real) out.schedule = search.schedule_of(search.best().times);
  return out;
}

Time lower_bound(const Instance& instance) {
  instance.validate();
  Time bound = 0;
  for (VertexId s : instance.sources)
    bound = std::max(bound, max_arrival(oracle_single_source(instance.graph, s)));
  return bound;
}

}  // namespace tempreach
