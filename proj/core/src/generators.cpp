#include "bcdom/generators.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

#include "bcdom/errors.hpp"

namespace bcdom {

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ContractError("gnp: p must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_grid(std::size_t w, std::size_t h) {
  if (w == 0 || h == 0) throw ContractError("grid: w and h must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const auto id = static_cast<Vertex>(r * w + c);
      if (c + 1 < w) edges.emplace_back(id, id + 1);
      if (r + 1 < h) edges.emplace_back(id, static_cast<Vertex>(id + w));
    }
  }
  return Graph::from_edges(w * h, edges);
}

Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ContractError("random tree: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(rng.below(v)), v);
  }
  return Graph::from_edges(n, edges);
}

DegenerateGraph gen_d_degenerate(std::size_t n, std::size_t d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t k = std::min<std::size_t>(d, v);
    pool.resize(v);
    std::iota(pool.begin(), pool.end(), Vertex{0});
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t r = j + rng.below(v - j);
      std::swap(pool[j], pool[r]);
      edges.emplace_back(pool[j], v);
    }
  }
  DegenerateGraph out{Graph::from_edges(n, edges), std::vector<Vertex>(n)};
  std::iota(out.order.begin(), out.order.end(), Vertex{0});
  return out;
}

SetCoverInstance gen_intersection_one(std::size_t universe_size, std::size_t set_count,
                                      std::size_t max_set_size, std::uint64_t seed) {
  if (universe_size == 0 || set_count == 0 || max_set_size == 0) {
    throw ContractError("intersection-one generator: parameters must be >= 1");
  }
  SplitMix64 rng(seed);
  std::vector<std::vector<Element>> accepted;
  const std::size_t proposal_cap = 64 * set_count + 64;
  std::vector<Element> pool(universe_size);

  for (std::size_t proposal = 0; proposal < proposal_cap && accepted.size() < set_count;
       ++proposal) {
    const std::size_t size =
        std::min<std::size_t>(1 + rng.below(max_set_size), universe_size);
    std::iota(pool.begin(), pool.end(), Element{1});
    for (std::size_t j = 0; j < size; ++j) {
      std::swap(pool[j], pool[j + rng.below(universe_size - j)]);
    }
    std::vector<Element> candidate(pool.begin(), pool.begin() + static_cast<long>(size));
    std::sort(candidate.begin(), candidate.end());

    const bool ok = std::none_of(accepted.begin(), accepted.end(), [&](const auto& s) {
      std::vector<Element> shared;
      std::set_intersection(s.begin(), s.end(), candidate.begin(), candidate.end(),
                            std::back_inserter(shared));
      return shared.size() >= 2 || s == candidate;
    });
    if (ok) accepted.push_back(std::move(candidate));
  }
  if (accepted.empty()) {
    throw GenerationError("intersection-one generator: proposal cap exhausted");
  }

  std::vector<char> covered(universe_size + 1, 0);
  for (const auto& s : accepted) {
    for (Element e : s) covered[static_cast<std::size_t>(e)] = 1;
  }
  SetCoverInstance sc;
  sc.universe.resize(universe_size);
  std::iota(sc.universe.begin(), sc.universe.end(), Element{1});
  sc.sets = std::move(accepted);
  for (std::size_t e = 1; e <= universe_size; ++e) {
    if (!covered[e]) sc.sets.push_back({static_cast<Element>(e)});
  }
  return sc;
}

}  // namespace bcdom
