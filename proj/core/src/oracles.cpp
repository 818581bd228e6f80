#include "bcdom/oracles.hpp"

#include <algorithm>
#include <limits>

#include "bcdom/errors.hpp"
#include "bitset.hpp"
#include "json.hpp"

namespace bcdom {

using detail::Bits;

namespace {

std::vector<Bits> closed_masks(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Bits> masks(n, Bits(n));
  for (Vertex v = 0; v < n; ++v) {
    masks[v].set(v);
    for (Vertex w : g.neighbors(v)) masks[v].set(w);
  }
  return masks;
}

Bits mask_of(std::size_t n, const VertexSet& s) {
  Bits b(n);
  for (Vertex v : s) b.set(v);
  return b;
}

class DominationSearch {
 public:
  DominationSearch(const Graph& g, std::uint64_t max_nodes)
      : g_(g), n_(g.num_vertices()), closed_(closed_masks(g)), max_nodes_(max_nodes) {}

  void seed(std::vector<Vertex> incumbent, std::size_t bound) {
    best_ = std::move(incumbent);
    best_size_ = bound;
  }

  void run(const VertexSet& targets) {
    Bits uncovered = mask_of(n_, targets);
    Bits forbidden(n_);
    std::vector<Vertex> chosen;
    search(uncovered, forbidden, chosen);
  }

  const std::vector<Vertex>& best() const { return best_; }
  std::size_t best_size() const { return best_size_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void search(const Bits& uncovered, Bits& forbidden, std::vector<Vertex>& chosen) {
    if (++nodes_ > max_nodes_) {
      throw ResourceLimitError("exact search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
    if (!uncovered.any()) {
      if (chosen.size() < best_size_) {
        best_ = chosen;
        best_size_ = chosen.size();
      }
      return;
    }
    if (chosen.size() + 1 >= best_size_) return;

    std::size_t max_cover = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (!forbidden.test(v)) max_cover = std::max(max_cover, closed_[v].count_and(uncovered));
    }
    if (max_cover == 0) return;
    const std::size_t open = uncovered.count();
    if (chosen.size() + (open + max_cover - 1) / max_cover >= best_size_) return;

    // Branch on the target with the fewest admissible dominators.
    std::size_t pivot = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    uncovered.for_each([&](std::size_t t) {
      std::size_t c = forbidden.test(t) ? 0 : 1;
      for (Vertex w : g_.neighbors(static_cast<Vertex>(t))) {
        if (!forbidden.test(w)) ++c;
      }
      if (c < fewest) {
        fewest = c;
        pivot = t;
      }
    });
    if (fewest == 0) return;

    std::vector<std::pair<std::size_t, Vertex>> candidates;
    auto consider = [&](Vertex w) {
      if (!forbidden.test(w)) candidates.emplace_back(closed_[w].count_and(uncovered), w);
    };
    consider(static_cast<Vertex>(pivot));
    for (Vertex w : g_.neighbors(static_cast<Vertex>(pivot))) consider(w);
    std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first > y.first : x.second < y.second;
    });

    // Each later sibling excludes the earlier candidates: any solution using
    // one of them was already explored in that candidate's branch.
    std::vector<Vertex> excluded;
    for (const auto& [cover, c] : candidates) {
      Bits next = uncovered;
      next.subtract(closed_[c]);
      chosen.push_back(c);
      search(next, forbidden, chosen);
      chosen.pop_back();
      forbidden.set(c);
      excluded.push_back(c);
    }
    for (Vertex c : excluded) forbidden.reset(c);
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Bits> closed_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> best_;
  std::size_t best_size_ = std::numeric_limits<std::size_t>::max();
};

// C(n, k), saturating at `limit + 1`.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ unsigned __int128 acc = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    acc = acc * (n - k + j) / j;
    if (acc > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

OracleResult exact_min_dominating_set(const Graph& g, const VertexSet& targets,
                                      std::optional<std::size_t> budget,
                                      std::uint64_t max_nodes) {
  check_range(g, targets);
  const SolveResult greedy = solve_classical(g, targets);
  const std::size_t greedy_size = greedy.dominating_set.size();

  DominationSearch search(g, max_nodes);
  if (budget && greedy_size > *budget) {
    search.seed({}, *budget + 1);
  } else {
    search.seed(greedy.dominating_set.ids(), greedy_size);
  }
  search.run(targets);

  OracleResult res;
  res.node_count = search.nodes();
  if (budget && search.best_size() > *budget) {
    res.status = OracleStatus::exceeds_budget;
    res.opt_size = *budget + 1;
    return res;
  }
  res.opt_size = search.best_size();
  res.witness_set = VertexSet(search.best());
  return res;
}

std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g, const VertexSet& targets,
                                                     std::uint64_t max_subsets) {
  const std::size_t k = exact_min_dominating_set(g, targets).opt_size;
  const std::size_t n = g.num_vertices();
  if (k == 0) return {VertexSet{}};
  if (binomial_capped(n, k, max_subsets) > max_subsets) {
    throw ResourceLimitError("enumeration needs more than " + std::to_string(max_subsets) +
                             " subsets");
  }

  const auto closed = closed_masks(g);
  const Bits want = mask_of(n, targets);
  std::vector<VertexSet> out;
  std::vector<Vertex> pick(k);
  for (std::size_t j = 0; j < k; ++j) pick[j] = static_cast<Vertex>(j);

  while (true) {
    Bits covered(n);
    for (Vertex v : pick) covered |= closed[v];
    if (want.subset_of(covered)) out.emplace_back(pick);

    // next combination in lexicographic order
    std::size_t j = k;
    while (j > 0 && pick[j - 1] == n - k + (j - 1)) --j;
    if (j == 0) break;
    ++pick[j - 1];
    for (std::size_t q = j; q < k; ++q) pick[q] = pick[q - 1] + 1;
  }
  return out;
}

std::optional<BicliqueWitness> has_biclique(const Graph& g, std::size_t a, std::size_t b,
                                            std::size_t cap) {
  const bool swapped = a > b;
  if (swapped) std::swap(a, b);
  if (a > cap) {
    throw ResourceLimitError("biclique side " + std::to_string(a) + " exceeds the cap of " +
                             std::to_string(cap));
  }
  const std::size_t n = g.num_vertices();
  auto orient = [&](BicliqueWitness w) {
    if (swapped) std::swap(w.left, w.right);
    return w;
  };

  if (a == 0) {
    if (n < b) return std::nullopt;
    std::vector<Vertex> right(b);
    for (std::size_t v = 0; v < b; ++v) right[v] = static_cast<Vertex>(v);
    return orient({VertexSet{}, VertexSet(std::move(right))});
  }

  std::vector<Bits> open(n, Bits(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) open[v].set(w);
  }

  // Grow the left side in increasing id order, keeping the common open
  // neighbourhood (which never contains a left vertex).
  std::vector<Vertex> left;
  std::optional<BicliqueWitness> found;
  auto extend = [&](auto&& self, Vertex start, const Bits* common) -> bool {
    if (left.size() == a) {
      std::vector<Vertex> right;
      common->for_each([&](std::size_t w) {
        if (right.size() < b) right.push_back(static_cast<Vertex>(w));
      });
      found = orient({VertexSet(left), VertexSet(std::move(right))});
      return true;
    }
    for (Vertex v = start; v + (a - left.size()) <= n; ++v) {
      Bits next = open[v];
      if (common) next &= *common;
      if (next.count() < b) continue;
      left.push_back(v);
      if (self(self, v + 1, &next)) return true;
      left.pop_back();
    }
    return false;
  };
  extend(extend, 0, nullptr);
  return found;
}

double harmonic(std::size_t n) {
  double h = 0.0;
  for (std::size_t k = n; k >= 1; --k) h += 1.0 / static_cast<double>(k);
  return h;
}

std::string to_json(const OracleResult& r) {
  nlohmann::ordered_json doc;
  doc["status"] = r.status == OracleStatus::optimal ? "optimal" : "exceeds_budget";
  doc["opt_size"] = r.opt_size;
  doc["witness_set"] = r.witness_set.ids();
  doc["node_count"] = r.node_count;
  return doc.dump(2) + "\n";
}

}  // namespace bcdom
