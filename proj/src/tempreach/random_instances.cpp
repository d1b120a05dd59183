#include "tempreach/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace tempreach {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

class LabelDraw {
 public:
  LabelDraw(const RandomParams& p) : params_(p), pool_(static_cast<std::size_t>(p.lifetime)) {
    std::iota(pool_.begin(), pool_.end(), Time{1});
  }

  std::vector<Time> operator()(Rng& rng) {
    std::size_t most = std::min<std::size_t>(params_.labels_per_edge, pool_.size());
    std::size_t count = params_.vary_labels ? pick(rng, 1, most) : most;
    // Partial Fisher-Yates over the pool; the pool stays a permutation.
    for (std::size_t i = 0; i < count; ++i) std::swap(pool_[i], pool_[pick(rng, i, pool_.size() - 1)]);
    std::vector<Time> out(pool_.begin(), pool_.begin() + static_cast<std::ptrdiff_t>(count));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const RandomParams& params_;
  std::vector<Time> pool_;
};

// Linear-time Prüfer decoding of a uniformly random sequence.
std::vector<std::pair<VertexId, VertexId>> random_tree(std::size_t n, Rng& rng) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = static_cast<VertexId>(pick(rng, 0, n - 1));
  std::vector<std::size_t> degree(n, 1);
  for (VertexId c : code) ++degree[c];

  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  VertexId leaf = static_cast<VertexId>(ptr);
  for (VertexId c : code) {
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = static_cast<VertexId>(ptr);
    }
  }
  edges.emplace_back(leaf, static_cast<VertexId>(n - 1));
  return edges;
}

std::vector<VertexId> sample_sources(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  std::vector<VertexId> out;
  std::sample(all.begin(), all.end(), std::back_inserter(out), count, rng);
  return out;
}

}  // namespace

Instance gen_random(RandomKind kind, const RandomParams& params, std::uint64_t seed) {
  if (params.n < 1) throw Error(ErrorCode::kInvalidParams, "n must be >= 1");
  if (params.lifetime < 1) throw Error(ErrorCode::kInvalidParams, "lifetime must be >= 1");
  if (params.labels_per_edge < 1)
    throw Error(ErrorCode::kInvalidParams, "labels per edge must be >= 1");
  if (kind != RandomKind::kParallelPaths &&
      (params.source_count < 1 || params.source_count > params.n))
    throw Error(ErrorCode::kInvalidParams, "source count must be in 1..n");

  Rng rng(seed);
  LabelDraw labels(params);
  TemporalGraph::Builder b;
  Instance out;

  if (kind == RandomKind::kParallelPaths) {
    if (params.n < 2) throw Error(ErrorCode::kInvalidParams, "parallel paths need n >= 2");
    b.add_vertex("A");
    b.add_vertex("B");
    std::size_t inner = params.n - 2;
    bool direct = inner == 0 || pick(rng, 0, 1) == 1;
    std::size_t paths = inner == 0 ? 0 : pick(rng, 1, inner);
    // Random composition of `inner` into `paths` positive parts.
    std::vector<std::size_t> ends;
    if (paths > 0) {
      std::vector<std::size_t> cuts(inner - 1);
      std::iota(cuts.begin(), cuts.end(), std::size_t{1});
      std::sample(cuts.begin(), cuts.end(), std::back_inserter(ends), paths - 1, rng);
      ends.push_back(inner);
    }
    if (direct) b.add_edge(VertexId{0}, VertexId{1}, labels(rng));
    std::size_t start = 0;
    for (std::size_t end : ends) {
      VertexId prev = 0;
      for (std::size_t i = start; i < end; ++i) {
        VertexId v = b.add_vertex("u" + std::to_string(i + 1));
        b.add_edge(prev, v, labels(rng));
        prev = v;
      }
      b.add_edge(prev, VertexId{1}, labels(rng));
      start = end;
    }
    out.graph = std::move(b).build();
    out.sources = {0, 1};
    return out;
  }

  for (std::size_t i = 0; i < params.n; ++i) b.add_vertex("v" + std::to_string(i));
  auto tree = random_tree(params.n, rng);
  std::unordered_set<std::uint64_t> present;
  auto key = [](VertexId a, VertexId c) {
    return (std::uint64_t{std::min(a, c)} << 32) | std::max(a, c);
  };
  for (auto [u, v] : tree) {
    b.add_edge(u, v, labels(rng));
    present.insert(key(u, v));
  }
  if (kind == RandomKind::kGeneral) {
    std::size_t room = params.n * (params.n - 1) / 2 - tree.size();
    if (params.extra_edges > room)
      throw Error(ErrorCode::kInvalidParams, "more extra edges than vertex pairs");
    for (std::size_t added = 0; added < params.extra_edges;) {
      auto u = static_cast<VertexId>(pick(rng, 0, params.n - 1));
      auto v = static_cast<VertexId>(pick(rng, 0, params.n - 1));
      if (u == v || !present.insert(key(u, v)).second) continue;
      b.add_edge(u, v, labels(rng));
      ++added;
    }
  }
  out.graph = std::move(b).build();
  out.sources = sample_sources(params.n, params.source_count, rng);
  return out;
}

}  // namespace tempreach
