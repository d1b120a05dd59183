#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tempreach/temporal_graph.hpp"
#include "tempreach/text_format.hpp"

namespace fixtures {

inline std::filesystem::path corpus_dir() { return TEMPREACH_CORPUS_DIR; }

inline tempreach::Instance corpus(const std::string& name) {
  std::ifstream in(corpus_dir() / name);
  std::stringstream text;
  text << in.rdbuf();
  return tempreach::parse_graph(text.str());
}

inline tempreach::Instance with_sources(tempreach::TemporalGraph graph,
                                        std::initializer_list<const char*> names) {
  tempreach::Instance out{std::move(graph), {}};
  for (const char* n : names) out.sources.push_back(out.graph.vertex(n));
  return out;
}

// A-B@{9,11}, B-C@{9,20}.
inline tempreach::TemporalGraph fig1() {
  tempreach::TemporalGraph::Builder b;
  b.add_edge("A", "B", {9, 11});
  b.add_edge("B", "C", {9, 20});
  return std::move(b).build();
}

// a-b@{1,2}, b-c@{1,2}.
inline tempreach::TemporalGraph p3() {
  tempreach::TemporalGraph::Builder b;
  b.add_edge("a", "b", {1, 2});
  b.add_edge("b", "c", {1, 2});
  return std::move(b).build();
}

// Center m, leaves a, b, c, every edge @{1,2}.
inline tempreach::TemporalGraph star3() {
  tempreach::TemporalGraph::Builder b;
  b.add_vertex("m");
  for (const char* leaf : {"a", "b", "c"}) b.add_edge("m", leaf, {1, 2});
  return std::move(b).build();
}

// A-u-B and A-v-B, every edge @{1,2}.
inline tempreach::TemporalGraph pp2() {
  tempreach::TemporalGraph::Builder b;
  b.add_edge("A", "u", {1, 2});
  b.add_edge("u", "B", {1, 2});
  b.add_edge("A", "v", {1, 2});
  b.add_edge("v", "B", {1, 2});
  return std::move(b).build();
}

}  // namespace fixtures
