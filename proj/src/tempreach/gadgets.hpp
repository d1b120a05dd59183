#pragma once

#include <array>
#include <vector>

#include "tempreach/schedule.hpp"
#include "tempreach/temporal_graph.hpp"

namespace tempreach {

/// Sets over the universe {1..n}; `k` is the hitting-set size asked for.
struct SetSystem {
  int n = 0;
  std::vector<std::vector<int>> sets;
  int k = 0;
};

/// Monotone 3-CNF: every clause lists three distinct positive variables in 1..n.
struct MonotoneFormula {
  int n = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// Throws Error(kInvalidSetSystem) on empty sets or elements outside 1..n.
void validate_set_system(const SetSystem& sys);

/// Source v0; x_i, y_i per element, z_j per set. Edges v0-x_i@1, x_i-y_i@1,
/// v0-y_i@3 and y_i-z_j@3 for every i in S_j. A schedule of value 3 within k
/// delayed labels exists iff some k elements hit every set.
Instance gen_hitting_set_gadget(const SetSystem& sys);

/// Brute force over subsets of size at most k.
bool hitting_set_brute(const SetSystem& sys);

/// Throws Error(kInvalidFormula) unless every clause has three distinct
/// variables in 1..n and every variable occurs somewhere.
void validate_formula(const MonotoneFormula& phi);

/// Two-source lifetime-1 gadget with 3n + 4m + 12 vertices: sources s, sP;
/// ladder p1..p5, q1..q5; per clause j vertices aj, aPj, zj, zPj; per
/// variable i vertices bi, bPi, wi.
Instance gen_nae_gadget(const MonotoneFormula& phi);

/// assignment[i] is the value of variable i + 1.
bool nae_check(const MonotoneFormula& phi, const std::vector<bool>& assignment);

/// Delays that turn the gadget into a value-6 graph for a NAE-satisfying
/// assignment. Throws Error(kNotNaeSatisfying) otherwise.
DelaySchedule nae_schedule_from_assignment(const MonotoneFormula& phi,
                                           const std::vector<bool>& assignment);

struct MonLinReport {
  bool arity = true;       // three distinct variables per clause, all within 1..n
  bool occurrence = true;  // every variable appears exactly four times
  bool monotone = true;    // no negated literal (always true for this representation)
  bool linear = true;      // two clauses share at most one variable

  bool ok() const { return arity && occurrence && monotone && linear; }
};

MonLinReport validate_monlin(const MonotoneFormula& phi);

}  // namespace tempreach
