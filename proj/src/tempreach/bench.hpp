#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tempreach/exact.hpp"

namespace tempreach {

enum class SolverKind { kSingle, kTree, kParallel, kExact };

const char* solver_name(SolverKind kind);

/// The specialised solver whose preconditions the instance meets: single
/// source, then tree, then parallel paths with the sources as endpoints;
/// kExact when none applies.
SolverKind pick_solver(const Instance& instance);

/// Runs one of the polynomial solvers (kExact runs solve_exact unbounded).
Solution run_solver(SolverKind kind, const Instance& instance);

struct GapRow {
  std::string instance;
  std::string solver;
  Time value = kUnreachable;
  bool skipped = false;       // exact-only instance above the exact limit
  std::optional<Time> exact;  // absent when skipped or cut off by the node limit
  bool exact_limit_hit = false;
  Time horizon = 0;
  double solver_ms = 0;
  double exact_ms = 0;
};

struct BenchOptions {
  std::size_t exact_limit = 8;  // run the exact oracle only up to this many vertices
  std::uint64_t node_limit = 50'000'000;
  bool timings = true;
};

/// One row per `*.tg` file directly inside `suite`, ordered by file name. The
/// exact horizon is stretched to cover the solver's own schedule, so a
/// certified gap is never negative.
std::vector<GapRow> run_bench(const std::filesystem::path& suite, const BenchOptions& options);

GapRow bench_instance(const std::string& name, const Instance& instance,
                      const BenchOptions& options);

/// Tab-separated with a header line:
/// instance solver value exact horizon gap solver_ms exact_ms.
std::string format_gap_report(const std::vector<GapRow>& rows, bool timings = true);

}  // namespace tempreach
