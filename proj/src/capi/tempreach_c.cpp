#include "tempreach/tempreach.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "tempreach/bench.hpp"
#include "tempreach/exact.hpp"
#include "tempreach/gadgets.hpp"
#include "tempreach/random_instances.hpp"
#include "tempreach/reach.hpp"
#include "tempreach/text_format.hpp"

struct tr_instance {
  tempreach::Instance rep;
};

struct tr_schedule {
  tempreach::DelaySchedule rep;
};

struct tr_solution {
  tempreach::Solution rep;
  tr_schedule schedule;
};

namespace {

thread_local std::string last_error;

tr_status fail(tr_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

tr_status status_of(const tempreach::Error& e) {
  switch (e.code()) {
    case tempreach::ErrorCode::kParse: return TR_PARSE_ERROR;
    case tempreach::ErrorCode::kNodeLimitExceeded: return TR_SEARCH_LIMIT;
    case tempreach::ErrorCode::kNotNaeSatisfying: return TR_NONE;
    default: return TR_INVALID_ARGUMENT;
  }
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
tr_status guarded(Body body) {
  last_error.clear();
  try {
    return body();
  } catch (const tempreach::Error& e) {
    return fail(status_of(e), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TR_INTERNAL, e.what());
  } catch (...) {
    return fail(TR_INTERNAL, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

tr_status missing(const char* what) {
  return fail(TR_INVALID_ARGUMENT, std::string(what) + " is NULL");
}

tempreach::Budget budget_of(tr_budget_kind kind, int64_t k) {
  switch (kind) {
    case TR_BUDGET_UNBOUNDED: return tempreach::Budget::unbounded();
    case TR_BUDGET_DELAYED_LABELS: return tempreach::Budget::max_delayed_labels(k);
    case TR_BUDGET_TOTAL_DELAY: return tempreach::Budget::max_total_delay(k);
  }
  throw tempreach::Error(tempreach::ErrorCode::kInvalidArgument, "unknown budget kind");
}

tempreach::TemporalGraph delayed_graph(const tr_instance* inst, const tr_schedule* sched) {
  if (!sched) return inst->rep.graph;
  auto violations = tempreach::validate_schedule(inst->rep.graph, sched->rep);
  if (!violations.empty()) {
    std::string message;
    for (const auto& v : violations) message += (message.empty() ? "" : "; ") + v.message;
    throw tempreach::Error(tempreach::ErrorCode::kInvalidSchedule, message);
  }
  return tempreach::apply_schedule(inst->rep.graph, sched->rep);
}

}  // namespace

extern "C" {

const char* tr_last_error(void) { return last_error.c_str(); }

const char* tr_version(void) { return "0.1.0"; }

void tr_string_free(char* s) { std::free(s); }

tr_status tr_instance_parse(const char* text, tr_instance** out) {
  if (!text) return missing("text");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] {
    *out = new tr_instance{tempreach::parse_graph(text)};
    return TR_OK;
  });
}

tr_status tr_instance_serialize(const tr_instance* inst, char** out) {
  if (!inst) return missing("instance");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(tempreach::serialize_graph(inst->rep));
    return TR_OK;
  });
}

void tr_instance_free(tr_instance* inst) { delete inst; }

size_t tr_instance_vertex_count(const tr_instance* inst) {
  return inst ? inst->rep.graph.vertex_count() : 0;
}

size_t tr_instance_edge_count(const tr_instance* inst) {
  return inst ? inst->rep.graph.edge_count() : 0;
}

size_t tr_instance_label_count(const tr_instance* inst) {
  return inst ? inst->rep.graph.label_count() : 0;
}

int64_t tr_instance_lifetime(const tr_instance* inst) {
  return inst ? inst->rep.graph.lifetime() : 0;
}

const char* tr_instance_vertex_name(const tr_instance* inst, size_t v) {
  if (!inst || v >= inst->rep.graph.vertex_count()) return nullptr;
  return inst->rep.graph.name(static_cast<tempreach::VertexId>(v)).c_str();
}

tr_status tr_instance_find_vertex(const tr_instance* inst, const char* name, size_t* out) {
  if (!inst) return missing("instance");
  if (!name) return missing("name");
  if (!out) return missing("out");
  return guarded([&] {
    *out = inst->rep.graph.vertex(name);
    return TR_OK;
  });
}

size_t tr_instance_source_count(const tr_instance* inst) {
  return inst ? inst->rep.sources.size() : 0;
}

size_t tr_instance_source(const tr_instance* inst, size_t i) {
  return inst && i < inst->rep.sources.size() ? inst->rep.sources[i] : SIZE_MAX;
}

tr_status tr_instance_set_sources(tr_instance* inst, const char* const* names, size_t count) {
  if (!inst) return missing("instance");
  if (count > 0 && !names) return missing("names");
  return guarded([&] {
    tempreach::Instance copy{inst->rep.graph, {}};
    for (size_t i = 0; i < count; ++i) {
      if (!names[i]) return missing("source name");
      copy.sources.push_back(copy.graph.vertex(names[i]));
    }
    copy.validate();
    inst->rep.sources = std::move(copy.sources);
    return TR_OK;
  });
}

tr_status tr_schedule_parse(const char* text, tr_schedule** out) {
  if (!text) return missing("text");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] {
    *out = new tr_schedule{tempreach::parse_schedule(text)};
    return TR_OK;
  });
}

tr_status tr_schedule_serialize(const tr_schedule* sched, char** out) {
  if (!sched) return missing("schedule");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(tempreach::serialize_schedule(sched->rep));
    return TR_OK;
  });
}

void tr_schedule_free(tr_schedule* sched) { delete sched; }

size_t tr_schedule_size(const tr_schedule* sched) { return sched ? sched->rep.size() : 0; }

void tr_schedule_cost(const tr_schedule* sched, size_t* delayed_count, int64_t* total_delay) {
  tempreach::ScheduleCost cost = sched ? tempreach::schedule_cost(sched->rep)
                                       : tempreach::ScheduleCost{};
  if (delayed_count) *delayed_count = cost.delayed_count;
  if (total_delay) *total_delay = cost.total_delay;
}

tr_status tr_schedule_validate(const tr_instance* inst, const tr_schedule* sched) {
  if (!inst) return missing("instance");
  if (!sched) return missing("schedule");
  return guarded([&] {
    delayed_graph(inst, sched);
    return TR_OK;
  });
}

tr_status tr_reach(const tr_instance* inst, const char* source, const tr_schedule* sched,
                   int64_t* arrivals) {
  if (!inst) return missing("instance");
  if (!source) return missing("source");
  if (!arrivals) return missing("arrivals");
  return guarded([&] {
    tempreach::TemporalGraph graph = delayed_graph(inst, sched);
    auto map = tempreach::earliest_arrival(graph, graph.vertex(source));
    std::copy(map.begin(), map.end(), arrivals);
    return TR_OK;
  });
}

tr_status tr_verify(const tr_instance* inst, const tr_schedule* sched, int64_t* value) {
  if (!inst) return missing("instance");
  if (!value) return missing("value");
  return guarded([&] {
    inst->rep.validate();
    *value = tempreach::solution_value(delayed_graph(inst, sched), inst->rep.sources);
    return TR_OK;
  });
}

tr_status tr_lower_bound(const tr_instance* inst, int64_t* value) {
  if (!inst) return missing("instance");
  if (!value) return missing("value");
  return guarded([&] {
    *value = tempreach::lower_bound(inst->rep);
    return TR_OK;
  });
}

void tr_solve_options_init(tr_solve_options* opts) {
  if (!opts) return;
  opts->algorithm = TR_ALGO_AUTO;
  opts->budget = TR_BUDGET_UNBOUNDED;
  opts->budget_k = 0;
  opts->horizon = 0;
  opts->node_limit = tempreach::SearchConfig{}.node_limit;
}

tr_status tr_solve(const tr_instance* inst, const tr_solve_options* opts, tr_solution** out) {
  if (!inst) return missing("instance");
  if (!out) return missing("out");
  tr_solve_options defaults;
  tr_solve_options_init(&defaults);
  if (!opts) opts = &defaults;
  *out = nullptr;
  return guarded([&] {
    using tempreach::SolverKind;
    SolverKind kind;
    switch (opts->algorithm) {
      case TR_ALGO_AUTO: kind = tempreach::pick_solver(inst->rep); break;
      case TR_ALGO_SINGLE: kind = SolverKind::kSingle; break;
      case TR_ALGO_TREE: kind = SolverKind::kTree; break;
      case TR_ALGO_PARALLEL: kind = SolverKind::kParallel; break;
      case TR_ALGO_EXACT: kind = SolverKind::kExact; break;
      default: return fail(TR_INVALID_ARGUMENT, "unknown algorithm");
    }
    bool budgeted = opts->budget != TR_BUDGET_UNBOUNDED || opts->horizon != 0;
    if (kind != SolverKind::kExact && budgeted)
      return fail(TR_INVALID_ARGUMENT, "budgets and horizons apply to the exact solver only");

    tempreach::Solution solution;
    tr_status status = TR_OK;
    if (kind == SolverKind::kExact) {
      tempreach::SearchConfig config;
      if (opts->horizon != 0) config.horizon = opts->horizon;
      config.node_limit = opts->node_limit;
      tempreach::ExactResult result =
          tempreach::solve_exact(inst->rep, budget_of(opts->budget, opts->budget_k), config);
      if (result.node_limit_hit) {
        status = fail(TR_SEARCH_LIMIT, "node limit reached; result is the best schedule found");
      } else if (result.solution.value == tempreach::kUnreachable) {
        return fail(TR_NONE, "no schedule within the horizon and budget reaches every vertex");
      }
      solution = std::move(result.solution);
    } else {
      solution = tempreach::run_solver(kind, inst->rep);
    }
    auto* sol = new tr_solution{std::move(solution), {}};
    sol->schedule.rep = sol->rep.schedule;
    *out = sol;
    return status;
  });
}

int64_t tr_solution_value(const tr_solution* sol) {
  return sol ? sol->rep.value : TR_UNREACHABLE;
}

const tr_schedule* tr_solution_schedule(const tr_solution* sol) {
  return sol ? &sol->schedule : nullptr;
}

void tr_solution_free(tr_solution* sol) { delete sol; }

tr_status tr_decide_deadline(const tr_instance* inst, int64_t deadline, tr_budget_kind budget,
                             int64_t budget_k, uint64_t node_limit, tr_schedule** witness) {
  if (!inst) return missing("instance");
  if (!witness) return missing("witness");
  *witness = nullptr;
  return guarded([&] {
    auto result =
        tempreach::decide_deadline(inst->rep, deadline, budget_of(budget, budget_k), node_limit);
    if (result.schedule) {
      *witness = new tr_schedule{std::move(*result.schedule)};
      return TR_OK;
    }
    if (result.node_limit_hit) return fail(TR_SEARCH_LIMIT, "node limit reached undecided");
    return fail(TR_NONE, "no schedule meets the deadline");
  });
}

tr_status tr_gen_hitting_set(const char* sets, int n, tr_instance** out) {
  if (!sets) return missing("sets");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] {
    tempreach::SetSystem sys{n, tempreach::parse_int_groups(sets), 0};
    *out = new tr_instance{tempreach::gen_hitting_set_gadget(sys)};
    return TR_OK;
  });
}

tr_status tr_gen_nae(const char* clauses, tr_instance** out) {
  if (!clauses) return missing("clauses");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] {
    *out = new tr_instance{tempreach::gen_nae_gadget(tempreach::parse_formula(clauses))};
    return TR_OK;
  });
}

tr_status tr_nae_schedule(const char* clauses, const char* assignment, tr_schedule** out) {
  if (!clauses) return missing("clauses");
  if (!assignment) return missing("assignment");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] {
    *out = new tr_schedule{tempreach::nae_schedule_from_assignment(
        tempreach::parse_formula(clauses), tempreach::parse_assignment(assignment))};
    return TR_OK;
  });
}

void tr_random_params_init(tr_random_params* params) {
  if (!params) return;
  tempreach::RandomParams d;
  params->n = d.n;
  params->lifetime = d.lifetime;
  params->labels_per_edge = d.labels_per_edge;
  params->vary_labels = d.vary_labels ? 1 : 0;
  params->source_count = d.source_count;
  params->extra_edges = d.extra_edges;
}

tr_status tr_gen_random(tr_random_kind kind, const tr_random_params* params, uint64_t seed,
                        tr_instance** out) {
  if (!params) return missing("params");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] {
    tempreach::RandomKind k;
    switch (kind) {
      case TR_RANDOM_TREE: k = tempreach::RandomKind::kTree; break;
      case TR_RANDOM_PARALLEL_PATHS: k = tempreach::RandomKind::kParallelPaths; break;
      case TR_RANDOM_GENERAL: k = tempreach::RandomKind::kGeneral; break;
      default: return fail(TR_INVALID_ARGUMENT, "unknown random kind");
    }
    tempreach::RandomParams p;
    p.n = params->n;
    p.lifetime = params->lifetime;
    p.labels_per_edge = params->labels_per_edge;
    p.vary_labels = params->vary_labels != 0;
    p.source_count = params->source_count;
    p.extra_edges = params->extra_edges;
    *out = new tr_instance{tempreach::gen_random(k, p, seed)};
    return TR_OK;
  });
}

tr_status tr_bench(const char* suite_dir, size_t exact_limit, int with_timings, char** report) {
  if (!suite_dir) return missing("suite_dir");
  if (!report) return missing("report");
  *report = nullptr;
  return guarded([&] {
    tempreach::BenchOptions options;
    options.exact_limit = exact_limit;
    options.timings = with_timings != 0;
    auto rows = tempreach::run_bench(suite_dir, options);
    *report = copy_string(tempreach::format_gap_report(rows, options.timings));
    return TR_OK;
  });
}

}  // extern "C"
