#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tempreach/gadgets.hpp"
#include "tempreach/schedule.hpp"
#include "tempreach/temporal_graph.hpp"

namespace tempreach {

/// Line format, '#' starts a comment:
///
///   tgf 1
///   vertex <name>
///   edge <u> <v> <t> [<t> ...]
///   source <name> [<name> ...]
///
/// Names match [A-Za-z0-9_]+. Edge endpoints not yet declared are declared in
/// order of first appearance; repeated edges merge their labels. Sources may
/// be absent. Throws ParseError carrying the 1-based line number.
Instance parse_graph(std::string_view text);
std::string serialize_graph(const Instance& instance);

/// One `delay <u> <v> <original> <new>` line per entry. Unknown edges or
/// backward moves are left to validate_schedule.
DelaySchedule parse_schedule(std::string_view text);
std::string serialize_schedule(const DelaySchedule& schedule);

/// "1,2;3" -> {{1,2},{3}}. Throws ParseError (line 1) on malformed input.
std::vector<std::vector<int>> parse_int_groups(std::string_view text);
/// "1,2,3;1,2,4" with n = the largest variable mentioned.
MonotoneFormula parse_formula(std::string_view text);
/// "TFFT" -> {true, false, false, true}; also accepts 1/0.
std::vector<bool> parse_assignment(std::string_view text);

}  // namespace tempreach
