#ifndef TEMPREACH_TEMPREACH_H
#define TEMPREACH_TEMPREACH_H

#include <stddef.h>
#include <stdint.h>

#if defined(TR_BUILDING_LIBRARY)
#define TR_API __attribute__((visibility("default")))
#else
#define TR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum tr_status {
  TR_OK = 0,
  TR_NONE = 1,             /* infeasible, no witness, deadline missed */
  TR_PARSE_ERROR = 2,
  TR_INVALID_ARGUMENT = 3, /* includes instances outside a solver's class */
  TR_SEARCH_LIMIT = 4,     /* exact search stopped at its node limit */
  TR_INTERNAL = 5
} tr_status;

/* Arrival or value meaning "some vertex is never reached". */
#define TR_UNREACHABLE INT64_MAX

typedef struct tr_instance tr_instance; /* graph plus ordered sources */
typedef struct tr_schedule tr_schedule; /* label moves */
typedef struct tr_solution tr_solution;

/* Message for the last failing call on this thread; "" when none. */
TR_API const char* tr_last_error(void);
TR_API const char* tr_version(void);

/* Strings returned through char** out-parameters are owned by the caller. */
TR_API void tr_string_free(char* s);

/* ---- instances ---- */

TR_API tr_status tr_instance_parse(const char* text, tr_instance** out);
TR_API tr_status tr_instance_serialize(const tr_instance* inst, char** out);
TR_API void tr_instance_free(tr_instance* inst);

TR_API size_t tr_instance_vertex_count(const tr_instance* inst);
TR_API size_t tr_instance_edge_count(const tr_instance* inst);
TR_API size_t tr_instance_label_count(const tr_instance* inst);
TR_API int64_t tr_instance_lifetime(const tr_instance* inst);
/* NULL when v is out of range. Valid until the instance is freed. */
TR_API const char* tr_instance_vertex_name(const tr_instance* inst, size_t v);
TR_API tr_status tr_instance_find_vertex(const tr_instance* inst, const char* name, size_t* out);
TR_API size_t tr_instance_source_count(const tr_instance* inst);
/* Vertex index of the i-th source. */
TR_API size_t tr_instance_source(const tr_instance* inst, size_t i);
/* Replaces the source list. */
TR_API tr_status tr_instance_set_sources(tr_instance* inst, const char* const* names,
                                         size_t count);

/* ---- schedules ---- */

TR_API tr_status tr_schedule_parse(const char* text, tr_schedule** out);
TR_API tr_status tr_schedule_serialize(const tr_schedule* sched, char** out);
TR_API void tr_schedule_free(tr_schedule* sched);
TR_API size_t tr_schedule_size(const tr_schedule* sched);
TR_API void tr_schedule_cost(const tr_schedule* sched, size_t* delayed_count,
                             int64_t* total_delay);
/* TR_INVALID_ARGUMENT listing every violation in tr_last_error(). */
TR_API tr_status tr_schedule_validate(const tr_instance* inst, const tr_schedule* sched);

/* ---- reachability ---- */

/* Earliest arrivals from `source` after applying `sched` (may be NULL).
   `arrivals` must hold tr_instance_vertex_count() entries. */
TR_API tr_status tr_reach(const tr_instance* inst, const char* source, const tr_schedule* sched,
                          int64_t* arrivals);
/* Validates and applies `sched` (may be NULL), then the max reach time over
   the instance's sources. */
TR_API tr_status tr_verify(const tr_instance* inst, const tr_schedule* sched, int64_t* value);
/* Max over sources of the single-source optimum. */
TR_API tr_status tr_lower_bound(const tr_instance* inst, int64_t* value);

/* ---- solving ---- */

typedef enum tr_algorithm {
  TR_ALGO_AUTO = 0, /* single, tree or parallel when applicable, else exact */
  TR_ALGO_SINGLE,
  TR_ALGO_TREE,
  TR_ALGO_PARALLEL,
  TR_ALGO_EXACT
} tr_algorithm;

typedef enum tr_budget_kind {
  TR_BUDGET_UNBOUNDED = 0,
  TR_BUDGET_DELAYED_LABELS,
  TR_BUDGET_TOTAL_DELAY
} tr_budget_kind;

typedef struct tr_solve_options {
  tr_algorithm algorithm;
  tr_budget_kind budget; /* exact only */
  int64_t budget_k;
  int64_t horizon;       /* exact only; 0 = lifetime + vertex count */
  uint64_t node_limit;   /* exact only; 0 = unlimited */
} tr_solve_options;

TR_API void tr_solve_options_init(tr_solve_options* opts);

/* TR_SEARCH_LIMIT still produces a solution (the incumbent). TR_NONE when
   the exact search finds nothing within the horizon and budget. */
TR_API tr_status tr_solve(const tr_instance* inst, const tr_solve_options* opts,
                          tr_solution** out);
TR_API int64_t tr_solution_value(const tr_solution* sol);
/* Borrowed; valid until the solution is freed. */
TR_API const tr_schedule* tr_solution_schedule(const tr_solution* sol);
TR_API void tr_solution_free(tr_solution* sol);

/* Exact decision: some schedule within the budget reaches everything from
   every source by `deadline`. TR_OK sets *witness, TR_NONE leaves it NULL. */
TR_API tr_status tr_decide_deadline(const tr_instance* inst, int64_t deadline,
                                    tr_budget_kind budget, int64_t budget_k,
                                    uint64_t node_limit, tr_schedule** witness);

/* ---- generators ---- */

/* sets: "1,2;2,3" over the universe 1..n. */
TR_API tr_status tr_gen_hitting_set(const char* sets, int n, tr_instance** out);
/* clauses: "1,2,3;1,2,4"; every variable 1..max must occur. */
TR_API tr_status tr_gen_nae(const char* clauses, tr_instance** out);
/* assignment: one T/F per variable. TR_NONE when it is not NAE-satisfying. */
TR_API tr_status tr_nae_schedule(const char* clauses, const char* assignment,
                                 tr_schedule** out);

typedef enum tr_random_kind {
  TR_RANDOM_TREE = 0,
  TR_RANDOM_PARALLEL_PATHS,
  TR_RANDOM_GENERAL
} tr_random_kind;

typedef struct tr_random_params {
  size_t n;
  int64_t lifetime;
  size_t labels_per_edge;
  int vary_labels;
  size_t source_count;
  size_t extra_edges;
} tr_random_params;

TR_API void tr_random_params_init(tr_random_params* params);
TR_API tr_status tr_gen_random(tr_random_kind kind, const tr_random_params* params, uint64_t seed,
                               tr_instance** out);

/* ---- benchmark ---- */

/* Gap report over every *.tg file in `suite_dir` as tab-separated text. */
TR_API tr_status tr_bench(const char* suite_dir, size_t exact_limit, int with_timings,
                          char** report);

#ifdef __cplusplus
}
#endif

#endif
