#include "tempreach/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tempreach/parallel_paths.hpp"
#include "tempreach/single_source.hpp"
#include "tempreach/text_format.hpp"
#include "tempreach/tree_solver.hpp"

namespace tempreach {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool is_parallel_instance(const Instance& instance) {
  if (instance.sources.size() != 2) return false;
  try {
    decompose_parallel_paths(instance.graph, instance.sources[0], instance.sources[1]);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string time_text(Time t) { return t == kUnreachable ? "inf" : std::to_string(t); }

std::string ms_text(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

const char* solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::kSingle: return "single";
    case SolverKind::kTree: return "tree";
    case SolverKind::kParallel: return "parallel";
    case SolverKind::kExact: return "exact";
  }
  return "?";
}

SolverKind pick_solver(const Instance& instance) {
  if (instance.sources.size() == 1) return SolverKind::kSingle;
  if (instance.graph.is_tree()) return SolverKind::kTree;
  if (is_parallel_instance(instance)) return SolverKind::kParallel;
  return SolverKind::kExact;
}

Solution run_solver(SolverKind kind, const Instance& instance) {
  switch (kind) {
    case SolverKind::kSingle:
      instance.validate();
      if (instance.sources.size() != 1)
        throw Error(ErrorCode::kInvalidInstance, "single-source solver needs exactly one source");
      return solve_single_source(instance.graph, instance.sources[0]).solution;
    case SolverKind::kTree:
      return solve_tree(instance).solution;
    case SolverKind::kParallel:
      return solve_parallel_paths(instance).solution;
    case SolverKind::kExact:
      break;
  }
  return solve_exact(instance).solution;
}

GapRow bench_instance(const std::string& name, const Instance& instance,
                      const BenchOptions& options) {
  GapRow row;
  row.instance = name;
  SolverKind kind = pick_solver(instance);
  row.solver = solver_name(kind);

  if (kind == SolverKind::kExact && instance.graph.vertex_count() > options.exact_limit) {
    row.skipped = true;
    return row;
  }

  auto start = Clock::now();
  Solution solved = run_solver(kind, instance);
  row.solver_ms = ms_since(start);
  row.value = solved.value;

  Time horizon = instance.graph.lifetime() + static_cast<Time>(instance.graph.vertex_count());
  for (const ScheduleEntry& e : solved.schedule.entries()) horizon = std::max(horizon, e.target);
  row.horizon = horizon;

  if (instance.graph.vertex_count() <= options.exact_limit) {
    start = Clock::now();
    ExactResult exact = solve_exact(instance, Budget::unbounded(), {horizon, options.node_limit});
    row.exact_ms = ms_since(start);
    row.exact_limit_hit = exact.node_limit_hit;
    if (!exact.node_limit_hit) row.exact = exact.solution.value;
  }
  return row;
}

std::vector<GapRow> run_bench(const std::filesystem::path& suite, const BenchOptions& options) {
  if (!std::filesystem::is_directory(suite))
    throw Error(ErrorCode::kInvalidArgument, "not a directory: " + suite.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(suite))
    if (entry.is_regular_file() && entry.path().extension() == ".tg") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<GapRow> rows;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    Instance instance;
    try {
      instance = parse_graph(text.str());
    } catch (const ParseError& e) {
      throw Error(ErrorCode::kParse, path.filename().string() + ": " + e.what());
    }
    rows.push_back(bench_instance(path.stem().string(), instance, options));
  }
  return rows;
}

std::string format_gap_report(const std::vector<GapRow>& rows, bool timings) {
  std::ostringstream out;
  out << "instance\tsolver\tvalue\texact\thorizon\tgap\tsolver_ms\texact_ms\n";
  for (const GapRow& r : rows) {
    std::string exact = r.exact ? time_text(*r.exact) : (r.exact_limit_hit ? "limit" : "-");
    std::string gap = "-";
    if (r.exact && r.value != kUnreachable && *r.exact != kUnreachable)
      gap = std::to_string(r.value - *r.exact);
    bool ran_exact = r.exact || r.exact_limit_hit;
    if (r.skipped) {
      out << r.instance << '\t' << r.solver << "\t-\t-\t-\t-\t-\t-\n";
      continue;
    }
    out << r.instance << '\t' << r.solver << '\t' << time_text(r.value) << '\t' << exact << '\t'
        << r.horizon << '\t' << gap << '\t' << (timings ? ms_text(r.solver_ms) : "-") << '\t'
        << (timings && ran_exact ? ms_text(r.exact_ms) : "-") << '\n';
  }
  return out.str();
}

}  // namespace tempreach
