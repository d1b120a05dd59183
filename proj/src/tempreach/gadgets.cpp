#include "tempreach/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tempreach {

namespace {

std::string indexed(const char* stem, int i) { return stem + std::to_string(i); }

// Every unordered pair of distinct variables sharing a clause, in clause order.
std::vector<std::pair<int, int>> co_clause_pairs(const MonotoneFormula& phi) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : phi.clauses)
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) {
        std::pair<int, int> p{c[x], c[y]};
        if (std::find(out.begin(), out.end(), p) == out.end() &&
            std::find(out.begin(), out.end(), std::pair{p.second, p.first}) == out.end())
          out.push_back(p);
      }
  return out;
}

}  // namespace

void validate_set_system(const SetSystem& sys) {
  if (sys.n < 0 || sys.k < 0) throw Error(ErrorCode::kInvalidSetSystem, "negative n or k");
  for (std::size_t j = 0; j < sys.sets.size(); ++j) {
    if (sys.sets[j].empty())
      throw Error(ErrorCode::kInvalidSetSystem, "set " + std::to_string(j + 1) + " is empty");
    for (int e : sys.sets[j])
      if (e < 1 || e > sys.n)
        throw Error(ErrorCode::kInvalidSetSystem,
                    "element " + std::to_string(e) + " outside 1.." + std::to_string(sys.n));
  }
}

Instance gen_hitting_set_gadget(const SetSystem& sys) {
  validate_set_system(sys);
  TemporalGraph::Builder b;
  b.add_vertex("v0");
  for (int i = 1; i <= sys.n; ++i) b.add_vertex(indexed("x", i));
  for (int i = 1; i <= sys.n; ++i) b.add_vertex(indexed("y", i));
  for (std::size_t j = 1; j <= sys.sets.size(); ++j) b.add_vertex(indexed("z", int(j)));

  for (int i = 1; i <= sys.n; ++i) {
    b.add_edge("v0", indexed("x", i), {1});
    b.add_edge(indexed("x", i), indexed("y", i), {1});
    b.add_edge("v0", indexed("y", i), {3});
  }
  for (std::size_t j = 0; j < sys.sets.size(); ++j)
    for (int i : sys.sets[j]) b.add_edge(indexed("y", i), indexed("z", int(j + 1)), {3});

  Instance out{std::move(b).build(), {}};
  out.sources.push_back(out.graph.vertex("v0"));
  return out;
}

bool hitting_set_brute(const SetSystem& sys) {
  validate_set_system(sys);
  if (sys.n > 30) throw Error(ErrorCode::kInvalidSetSystem, "universe too large to enumerate");
  std::vector<std::uint32_t> masks;
  for (const auto& set : sys.sets) {
    std::uint32_t m = 0;
    for (int e : set) m |= 1u << (e - 1);
    masks.push_back(m);
  }
  for (std::uint32_t pick = 0; pick < (1u << sys.n); ++pick) {
    if (std::popcount(pick) > sys.k) continue;
    if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & pick) != 0; }))
      return true;
  }
  return false;
}

void validate_formula(const MonotoneFormula& phi) {
  if (phi.n < 1) throw Error(ErrorCode::kInvalidFormula, "formula needs at least one variable");
  std::vector<bool> used(phi.n + 1, false);
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const auto& c = phi.clauses[j];
    for (int x : c) {
      if (x < 1 || x > phi.n)
        throw Error(ErrorCode::kInvalidFormula, "clause " + std::to_string(j + 1) +
                                                    ": variable " + std::to_string(x) +
                                                    " outside 1.." + std::to_string(phi.n));
      used[x] = true;
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
      throw Error(ErrorCode::kInvalidFormula,
                  "clause " + std::to_string(j + 1) + " repeats a variable");
  }
  for (int i = 1; i <= phi.n; ++i)
    if (!used[i])
      throw Error(ErrorCode::kInvalidFormula,
                  "variable " + std::to_string(i) + " occurs in no clause");
}

Instance gen_nae_gadget(const MonotoneFormula& phi) {
  validate_formula(phi);
  const int m = static_cast<int>(phi.clauses.size());
  TemporalGraph::Builder b;
  for (const char* v : {"s", "sP"}) b.add_vertex(v);
  for (int i = 1; i <= 5; ++i) b.add_vertex(indexed("p", i));
  for (int i = 1; i <= 5; ++i) b.add_vertex(indexed("q", i));
  for (int j = 1; j <= m; ++j)
    for (const char* stem : {"a", "aP", "z", "zP"}) b.add_vertex(indexed(stem, j));
  for (int i = 1; i <= phi.n; ++i)
    for (const char* stem : {"b", "bP", "w"}) b.add_vertex(indexed(stem, i));

  for (int j = 1; j <= m; ++j) {
    b.add_edge("s", indexed("a", j), {1});
    b.add_edge("sP", indexed("aP", j), {1});
    b.add_edge(indexed("a", j), indexed("z", j), {1});
    b.add_edge(indexed("aP", j), indexed("zP", j), {1});
  }
  for (int j = 1; j <= m; ++j)
    for (int i : phi.clauses[j - 1]) {
      b.add_edge(indexed("a", j), indexed("b", i), {1});
      b.add_edge(indexed("aP", j), indexed("bP", i), {1});
    }
  for (int i = 1; i <= phi.n; ++i) {
    b.add_edge(indexed("b", i), indexed("w", i), {1});
    b.add_edge(indexed("w", i), indexed("bP", i), {1});
  }
  for (auto [x, y] : co_clause_pairs(phi))
    for (const char* stem : {"b", "bP", "w"}) b.add_edge(indexed(stem, x), indexed(stem, y), {1});

  b.add_edge("s", "p1", {1});
  for (int i = 1; i < 5; ++i) b.add_edge(indexed("p", i), indexed("p", i + 1), {1});
  b.add_edge("p5", "sP", {1});
  b.add_edge("sP", "q5", {1});
  for (int i = 5; i > 1; --i) b.add_edge(indexed("q", i), indexed("q", i - 1), {1});
  b.add_edge("q1", "s", {1});
  for (int i = 1; i <= 5; ++i) b.add_edge(indexed("p", i), indexed("q", i), {1});

  Instance out{std::move(b).build(), {}};
  out.sources = {out.graph.vertex("s"), out.graph.vertex("sP")};
  return out;
}

bool nae_check(const MonotoneFormula& phi, const std::vector<bool>& assignment) {
  for (const auto& c : phi.clauses) {
    int truths = 0;
    for (int x : c) {
      if (x < 1 || static_cast<std::size_t>(x) > assignment.size())
        throw Error(ErrorCode::kInvalidArgument, "assignment misses variable " + std::to_string(x));
      truths += assignment[x - 1] ? 1 : 0;
    }
    if (truths == 0 || truths == 3) return false;
  }
  return true;
}

DelaySchedule nae_schedule_from_assignment(const MonotoneFormula& phi,
                                           const std::vector<bool>& assignment) {
  validate_formula(phi);
  if (assignment.size() != static_cast<std::size_t>(phi.n))
    throw Error(ErrorCode::kInvalidArgument, "assignment length differs from variable count");
  if (!nae_check(phi, assignment))
    throw Error(ErrorCode::kNotNaeSatisfying, "assignment does not NAE-satisfy the formula");

  DelaySchedule out;
  auto move = [&](const std::string& u, const std::string& v, Time target) {
    out.add({u, v, 1, target});
  };
  const int m = static_cast<int>(phi.clauses.size());
  for (int j = 1; j <= m; ++j) {
    move(indexed("a", j), indexed("z", j), 6);
    move(indexed("aP", j), indexed("zP", j), 6);
  }
  for (int j = 1; j <= m; ++j)
    for (int i : phi.clauses[j - 1]) {
      bool t = assignment[i - 1];
      move(indexed("a", j), indexed("b", i), t ? 2 : 5);
      move(indexed("aP", j), indexed("bP", i), t ? 5 : 2);
    }
  for (int i = 1; i <= phi.n; ++i) {
    bool t = assignment[i - 1];
    move(indexed("b", i), indexed("w", i), t ? 3 : 4);
    move(indexed("w", i), indexed("bP", i), t ? 4 : 3);
  }
  for (auto [x, y] : co_clause_pairs(phi))
    for (const char* stem : {"b", "bP", "w"}) move(indexed(stem, x), indexed(stem, y), 5);

  for (int i = 1; i < 5; ++i) move(indexed("p", i), indexed("p", i + 1), i + 1);
  move("p5", "sP", 6);
  for (int i = 5; i > 1; --i) move(indexed("q", i), indexed("q", i - 1), 7 - i);
  move("q1", "s", 6);
  for (int i = 1; i <= 5; ++i) move(indexed("p", i), indexed("q", i), 6);
  return out;
}

MonLinReport validate_monlin(const MonotoneFormula& phi) {
  MonLinReport report;
  std::vector<int> occurrences(std::max(phi.n, 0) + 1, 0);
  for (const auto& c : phi.clauses) {
    for (int x : c) {
      if (x < 1 || x > phi.n) {
        report.arity = false;
        continue;
      }
      ++occurrences[x];
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) report.arity = false;
  }
  for (int i = 1; i <= phi.n; ++i)
    if (occurrences[i] != 4) report.occurrence = false;
  for (std::size_t a = 0; a < phi.clauses.size(); ++a)
    for (std::size_t b = a + 1; b < phi.clauses.size(); ++b) {
      int shared = 0;
      for (int x : phi.clauses[a])
        shared += static_cast<int>(std::count(phi.clauses[b].begin(), phi.clauses[b].end(), x));
      if (shared > 1) report.linear = false;
    }
  return report;
}

}  // namespace tempreach
