// Command-line front end. Everything goes through the C API in libtempreach.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tempreach/tempreach.h"

namespace {

struct Failure {
  tr_status status;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using InstancePtr = std::unique_ptr<tr_instance, Deleter<tr_instance, tr_instance_free>>;
using SchedulePtr = std::unique_ptr<tr_schedule, Deleter<tr_schedule, tr_schedule_free>>;
using SolutionPtr = std::unique_ptr<tr_solution, Deleter<tr_solution, tr_solution_free>>;

void check(tr_status status, const std::string& context) {
  if (status == TR_OK) return;
  std::cerr << "tempreach: " << context << ": " << tr_last_error() << '\n';
  throw Failure{status};
}

std::string owned(char* s) {
  std::string out(s);
  tr_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "tempreach: cannot open '" << path << "'\n";
    throw Failure{TR_INVALID_ARGUMENT};
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "tempreach: cannot write '" << path << "'\n";
    throw Failure{TR_INVALID_ARGUMENT};
  }
}

InstancePtr load_instance(const std::string& path) {
  tr_instance* raw = nullptr;
  check(tr_instance_parse(read_input(path).c_str(), &raw), path);
  return InstancePtr(raw);
}

SchedulePtr load_schedule(const std::string& path) {
  tr_schedule* raw = nullptr;
  check(tr_schedule_parse(read_input(path).c_str(), &raw), path);
  return SchedulePtr(raw);
}

std::string time_text(int64_t t) { return t == TR_UNREACHABLE ? "inf" : std::to_string(t); }

std::string schedule_text(const tr_schedule* sched) {
  char* text = nullptr;
  check(tr_schedule_serialize(sched, &text), "schedule");
  return owned(text);
}

std::string instance_text(const tr_instance* inst) {
  char* text = nullptr;
  check(tr_instance_serialize(inst, &text), "instance");
  return owned(text);
}

struct ReachArgs {
  std::string graph;
  std::string source;
  std::string schedule;
};

int run_reach(const ReachArgs& a) {
  InstancePtr inst = load_instance(a.graph);
  SchedulePtr sched;
  if (!a.schedule.empty()) sched = load_schedule(a.schedule);
  std::vector<int64_t> arrivals(tr_instance_vertex_count(inst.get()));
  check(tr_reach(inst.get(), a.source.c_str(), sched.get(), arrivals.data()), "reach");
  for (size_t v = 0; v < arrivals.size(); ++v)
    std::cout << tr_instance_vertex_name(inst.get(), v) << ' ' << time_text(arrivals[v]) << '\n';
  return 0;
}

struct SolveArgs {
  std::string graph;
  std::string algo = "auto";
  std::optional<int64_t> budget_labels;
  std::optional<int64_t> budget_total;
  std::optional<int64_t> horizon;
  std::optional<int64_t> deadline;
  uint64_t node_limit = 0;
  std::string output;
};

int emit_solution(int64_t value, const tr_schedule* sched, const std::string& output) {
  std::cout << "value " << time_text(value) << '\n';
  if (output.empty()) {
    std::cout << schedule_text(sched);
  } else {
    write_output(output, schedule_text(sched));
  }
  return value == TR_UNREACHABLE ? TR_NONE : TR_OK;
}

int run_solve(const SolveArgs& a) {
  InstancePtr inst = load_instance(a.graph);
  tr_solve_options opts;
  tr_solve_options_init(&opts);
  if (a.node_limit) opts.node_limit = a.node_limit;
  if (a.algo == "single") opts.algorithm = TR_ALGO_SINGLE;
  else if (a.algo == "tree") opts.algorithm = TR_ALGO_TREE;
  else if (a.algo == "parallel") opts.algorithm = TR_ALGO_PARALLEL;
  else if (a.algo == "exact") opts.algorithm = TR_ALGO_EXACT;
  if (a.budget_labels) {
    opts.budget = TR_BUDGET_DELAYED_LABELS;
    opts.budget_k = *a.budget_labels;
  } else if (a.budget_total) {
    opts.budget = TR_BUDGET_TOTAL_DELAY;
    opts.budget_k = *a.budget_total;
  }
  if (a.horizon) opts.horizon = *a.horizon;

  if (a.deadline && opts.algorithm == TR_ALGO_EXACT) {
    if (a.horizon) {
      std::cerr << "tempreach: --deadline fixes the horizon; drop --horizon\n";
      return TR_INVALID_ARGUMENT;
    }
    tr_schedule* raw = nullptr;
    tr_status status =
        tr_decide_deadline(inst.get(), *a.deadline, opts.budget, opts.budget_k, opts.node_limit, &raw);
    if (status == TR_NONE || status == TR_SEARCH_LIMIT) {
      std::cerr << "tempreach: " << tr_last_error() << '\n';
      return status;
    }
    check(status, "solve");
    SchedulePtr witness(raw);
    int64_t value = 0;
    check(tr_verify(inst.get(), witness.get(), &value), "verify");
    return emit_solution(value, witness.get(), a.output);
  }

  tr_solution* raw = nullptr;
  tr_status status = tr_solve(inst.get(), &opts, &raw);
  if (status == TR_SEARCH_LIMIT && raw) {
    std::cerr << "tempreach: " << tr_last_error() << '\n';
  } else {
    check(status, "solve");
  }
  SolutionPtr sol(raw);
  int64_t value = tr_solution_value(sol.get());
  int rc = emit_solution(value, tr_solution_schedule(sol.get()), a.output);
  if (status != TR_OK) return status;
  if (a.deadline && value > *a.deadline) return TR_NONE;
  return rc;
}

struct VerifyArgs {
  std::string graph;
  std::string schedule;
  std::optional<int64_t> deadline;
};

int run_verify(const VerifyArgs& a) {
  InstancePtr inst = load_instance(a.graph);
  SchedulePtr sched = load_schedule(a.schedule);
  int64_t value = 0;
  check(tr_verify(inst.get(), sched.get(), &value), "verify");
  std::cout << "value " << time_text(value) << '\n';
  if (value == TR_UNREACHABLE) return TR_NONE;
  if (a.deadline && value > *a.deadline) return TR_NONE;
  return TR_OK;
}

int run_lower_bound(const std::string& graph) {
  InstancePtr inst = load_instance(graph);
  int64_t value = 0;
  check(tr_lower_bound(inst.get(), &value), "lower-bound");
  std::cout << "lower-bound " << time_text(value) << '\n';
  return TR_OK;
}

struct GenArgs {
  std::string sets;
  int n = 0;
  std::string clauses;
  std::string assignment;
  std::string schedule_out;
  std::string kind = "tree";
  uint64_t seed = 1;
  tr_random_params params{};
  std::string output;
};

int run_gen_hitting_set(const GenArgs& a) {
  tr_instance* raw = nullptr;
  check(tr_gen_hitting_set(a.sets.c_str(), a.n, &raw), "gen hitting-set");
  InstancePtr inst(raw);
  write_output(a.output, instance_text(inst.get()));
  return TR_OK;
}

int run_gen_nae(const GenArgs& a) {
  tr_instance* raw = nullptr;
  check(tr_gen_nae(a.clauses.c_str(), &raw), "gen nae");
  InstancePtr inst(raw);
  SchedulePtr sched;
  if (!a.assignment.empty()) {
    tr_schedule* s = nullptr;
    check(tr_nae_schedule(a.clauses.c_str(), a.assignment.c_str(), &s), "gen nae");
    sched.reset(s);
  }
  write_output(a.output, instance_text(inst.get()));
  if (sched) write_output(a.schedule_out, schedule_text(sched.get()));
  return TR_OK;
}

int run_gen_random(const GenArgs& a) {
  tr_random_kind kind = a.kind == "tree"       ? TR_RANDOM_TREE
                        : a.kind == "parallel" ? TR_RANDOM_PARALLEL_PATHS
                                               : TR_RANDOM_GENERAL;
  tr_instance* raw = nullptr;
  check(tr_gen_random(kind, &a.params, a.seed, &raw), "gen random");
  InstancePtr inst(raw);
  write_output(a.output, instance_text(inst.get()));
  return TR_OK;
}

struct BenchArgs {
  std::string suite;
  size_t exact_limit = 8;
  bool no_timing = false;
};

int run_bench(const BenchArgs& a) {
  char* report = nullptr;
  check(tr_bench(a.suite.c_str(), a.exact_limit, a.no_timing ? 0 : 1, &report), "bench");
  std::cout << owned(report);
  return TR_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delay schedules that make temporal graphs reachable fast"};
  app.require_subcommand(1);
  int rc = 0;

  ReachArgs reach;
  auto* reach_cmd = app.add_subcommand("reach", "Earliest arrival from one vertex");
  reach_cmd->add_option("graph", reach.graph, "Graph file or - for stdin")->required();
  reach_cmd->add_option("--source", reach.source, "Source vertex")->required();
  reach_cmd->add_option("--schedule", reach.schedule, "Delay schedule to apply first");
  reach_cmd->callback([&] { rc = run_reach(reach); });

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a delay schedule");
  solve_cmd->add_option("graph", solve.graph, "Graph file or - for stdin")->required();
  solve_cmd->add_option("--algo", solve.algo, "Solver")
      ->check(CLI::IsMember({"auto", "single", "tree", "parallel", "exact"}))
      ->capture_default_str();
  auto* labels_opt =
      solve_cmd->add_option("--budget-labels", solve.budget_labels, "Max delayed labels (exact)");
  auto* total_opt =
      solve_cmd->add_option("--budget-total", solve.budget_total, "Max total delay (exact)");
  labels_opt->excludes(total_opt);
  solve_cmd->add_option("--horizon", solve.horizon, "Latest new label time (exact)");
  solve_cmd->add_option("--deadline", solve.deadline, "Required value")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--node-limit", solve.node_limit, "Exact search node limit");
  solve_cmd->add_option("-o,--output", solve.output, "Write the schedule here");
  solve_cmd->callback([&] { rc = run_solve(solve); });

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Recompute the value of a schedule");
  verify_cmd->add_option("graph", verify.graph, "Graph file or - for stdin")->required();
  verify_cmd->add_option("schedule", verify.schedule, "Schedule file or - for stdin")->required();
  verify_cmd->add_option("--deadline", verify.deadline, "Fail when the value exceeds this");
  verify_cmd->callback([&] { rc = run_verify(verify); });

  std::string lb_graph;
  auto* lb_cmd = app.add_subcommand("lower-bound", "Value no schedule can beat");
  lb_cmd->add_option("graph", lb_graph, "Graph file or - for stdin")->required();
  lb_cmd->callback([&] { rc = run_lower_bound(lb_graph); });

  GenArgs gen;
  tr_random_params_init(&gen.params);
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  auto* hs_cmd = gen_cmd->add_subcommand("hitting-set", "Hitting-set reduction gadget");
  hs_cmd->add_option("--sets", gen.sets, "Sets, e.g. \"1,2;2,3\"")->required();
  hs_cmd->add_option("--n", gen.n, "Universe size")->required();
  hs_cmd->add_option("-o,--output", gen.output, "Graph output file");
  hs_cmd->callback([&] { rc = run_gen_hitting_set(gen); });

  auto* nae_cmd = gen_cmd->add_subcommand("nae", "NAE-3SAT reduction gadget");
  nae_cmd->add_option("--clauses", gen.clauses, "Clauses, e.g. \"1,2,3;1,2,4\"")->required();
  auto* assignment_opt =
      nae_cmd->add_option("--assignment", gen.assignment, "Truth values, e.g. TFFT");
  auto* schedule_out_opt =
      nae_cmd->add_option("--schedule-out", gen.schedule_out, "Schedule output file");
  assignment_opt->needs(schedule_out_opt);
  schedule_out_opt->needs(assignment_opt);
  nae_cmd->add_option("-o,--output", gen.output, "Graph output file");
  nae_cmd->callback([&] { rc = run_gen_nae(gen); });

  auto* random_cmd = gen_cmd->add_subcommand("random", "Seeded random instance");
  random_cmd->add_option("--kind", gen.kind, "tree, parallel or general")
      ->check(CLI::IsMember({"tree", "parallel", "general"}))
      ->capture_default_str();
  random_cmd->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  random_cmd->add_option("--n", gen.params.n, "Vertex count")->capture_default_str();
  random_cmd->add_option("--lifetime", gen.params.lifetime, "Largest label")->capture_default_str();
  random_cmd->add_option("--labels", gen.params.labels_per_edge, "Labels per edge")
      ->capture_default_str();
  random_cmd->add_flag("--vary-labels", gen.params.vary_labels,
                       "Draw each edge's label count from 1..labels");
  random_cmd->add_option("--sources", gen.params.source_count, "Source count")
      ->capture_default_str();
  random_cmd->add_option("--extra-edges", gen.params.extra_edges, "Chords for --kind general")
      ->capture_default_str();
  random_cmd->add_option("-o,--output", gen.output, "Graph output file");
  random_cmd->callback([&] { rc = run_gen_random(gen); });

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Gap report against the exact oracle");
  bench_cmd->add_option("--suite", bench.suite, "Directory of .tg files")->required();
  bench_cmd->add_option("--exact-limit", bench.exact_limit,
                        "Run the exact oracle up to this many vertices")
      ->capture_default_str();
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Print - instead of runtimes");
  bench_cmd->callback([&] { rc = run_bench(bench); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : TR_INVALID_ARGUMENT;
  } catch (const Failure& f) {
    return f.status;
  }
  return rc;
}
