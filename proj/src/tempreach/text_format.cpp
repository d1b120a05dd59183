#include "tempreach/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tempreach {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

// Calls `visit(line_number, words)` for every line with content.
template <typename Visit>
void for_each_line(std::string_view text, Visit visit) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (!words.empty()) visit(number, words);
  }
}

bool valid_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::string_view checked_name(std::size_t line, std::string_view name) {
  if (!valid_name(name)) throw ParseError(line, "invalid vertex name '" + std::string(name) + "'");
  return name;
}

Time parse_time(std::size_t line, std::string_view word) {
  Time value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size())
    throw ParseError(line, "expected an integer, got '" + std::string(word) + "'");
  return value;
}

}  // namespace

Instance parse_graph(std::string_view text) {
  TemporalGraph::Builder builder;
  bool header = false;
  std::vector<std::pair<std::size_t, std::string>> source_names;

  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& w) {
    if (!header) {
      if (w.size() != 2 || w[0] != "tgf" || w[1] != "1")
        throw ParseError(line, "expected header 'tgf 1'");
      header = true;
      return;
    }
    if (w[0] == "vertex") {
      if (w.size() != 2) throw ParseError(line, "expected 'vertex <name>'");
      if (builder.find_vertex(checked_name(line, w[1])))
        throw ParseError(line, "duplicate vertex '" + std::string(w[1]) + "'");
      builder.add_vertex(w[1]);
    } else if (w[0] == "edge") {
      if (w.size() < 4) throw ParseError(line, "expected 'edge <u> <v> <t> [<t> ...]'");
      if (checked_name(line, w[1]) == checked_name(line, w[2]))
        throw ParseError(line, "self-loop on '" + std::string(w[1]) + "'");
      std::vector<Time> labels;
      for (std::size_t i = 3; i < w.size(); ++i) {
        Time t = parse_time(line, w[i]);
        if (t < 1) throw ParseError(line, "label " + std::string(w[i]) + " is below 1");
        labels.push_back(t);
      }
      builder.add_edge(w[1], w[2], labels);
    } else if (w[0] == "source") {
      if (w.size() < 2) throw ParseError(line, "expected 'source <name> [<name> ...]'");
      for (std::size_t i = 1; i < w.size(); ++i)
        source_names.emplace_back(line, std::string(checked_name(line, w[i])));
    } else {
      throw ParseError(line, "unknown directive '" + std::string(w[0]) + "'");
    }
  });
  if (!header) throw ParseError(1, "missing header 'tgf 1'");

  Instance out{std::move(builder).build(), {}};
  for (const auto& [line, name] : source_names) {
    auto v = out.graph.find_vertex(name);
    if (!v) throw ParseError(line, "unknown source '" + name + "'");
    if (std::find(out.sources.begin(), out.sources.end(), *v) != out.sources.end())
      throw ParseError(line, "duplicate source '" + name + "'");
    out.sources.push_back(*v);
  }
  return out;
}

std::string serialize_graph(const Instance& instance) {
  const TemporalGraph& g = instance.graph;
  std::ostringstream out;
  out << "tgf 1\n";
  for (const std::string& name : g.names()) out << "vertex " << name << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << g.name(e.u) << ' ' << g.name(e.v);
    for (Time t : e.labels) out << ' ' << t;
    out << '\n';
  }
  if (!instance.sources.empty()) {
    out << "source";
    for (VertexId s : instance.sources) out << ' ' << g.name(s);
    out << '\n';
  }
  return out.str();
}

DelaySchedule parse_schedule(std::string_view text) {
  DelaySchedule out;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& w) {
    if (w[0] != "delay" || w.size() != 5)
      throw ParseError(line, "expected 'delay <u> <v> <original> <new>'");
    ScheduleEntry entry{std::string(checked_name(line, w[1])), std::string(checked_name(line, w[2])),
                        parse_time(line, w[3]), parse_time(line, w[4])};
    if (out.contains(entry.u, entry.v, entry.original))
      throw ParseError(line, "second entry for the same label");
    out.add(std::move(entry));
  });
  return out;
}

std::string serialize_schedule(const DelaySchedule& schedule) {
  std::ostringstream out;
  for (const ScheduleEntry& e : schedule.entries())
    out << "delay " << e.u << ' ' << e.v << ' ' << e.original << ' ' << e.target << '\n';
  return out.str();
}

std::vector<std::vector<int>> parse_int_groups(std::string_view text) {
  std::vector<std::vector<int>> groups;
  if (split_words(text).empty()) return groups;
  while (true) {
    std::size_t semi = text.find(';');
    std::string_view group = text.substr(0, semi);
    std::vector<int> items;
    while (true) {
      std::size_t comma = group.find(',');
      auto words = split_words(group.substr(0, comma));
      if (words.size() != 1) throw ParseError(1, "malformed list '" + std::string(text) + "'");
      items.push_back(static_cast<int>(parse_time(1, words[0])));
      if (comma == std::string_view::npos) break;
      group = group.substr(comma + 1);
    }
    groups.push_back(std::move(items));
    if (semi == std::string_view::npos) break;
    text = text.substr(semi + 1);
  }
  return groups;
}

MonotoneFormula parse_formula(std::string_view text) {
  MonotoneFormula phi;
  for (const auto& group : parse_int_groups(text)) {
    if (group.size() != 3) throw ParseError(1, "every clause needs exactly three variables");
    phi.clauses.push_back({group[0], group[1], group[2]});
    for (int x : group) phi.n = std::max(phi.n, x);
  }
  return phi;
}

std::vector<bool> parse_assignment(std::string_view text) {
  std::vector<bool> out;
  for (char c : text) {
    if (c == 'T' || c == 't' || c == '1') {
      out.push_back(true);
    } else if (c == 'F' || c == 'f' || c == '0') {
      out.push_back(false);
    } else {
      throw ParseError(1, std::string("assignment character '") + c + "' is not T or F");
    }
  }
  return out;
}

}  // namespace tempreach
