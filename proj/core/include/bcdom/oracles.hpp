#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcdom/graph.hpp"
#include "bcdom/solvers.hpp"

namespace bcdom {

enum class OracleStatus { optimal, exceeds_budget };

/// Outcome of the exact search.
///
/// For status == exceeds_budget, opt_size is budget + 1 (a lower bound on
/// the optimum) and witness_set is empty.
struct OracleResult {
  OracleStatus status = OracleStatus::optimal;
  std::size_t opt_size = 0;
  VertexSet witness_set;
  std::uint64_t node_count = 0;
};

inline constexpr std::uint64_t kDefaultNodeLimit = 500'000'000;

/// Exact minimum size of a set dominating `targets`.
///
/// Branch and bound: branch on the undominated target with the fewest
/// admissible dominators, bound by ceil(|uncovered| / best coverage), seed
/// the incumbent with the classical greedy. Throws ResourceLimitError when
/// more than max_nodes search nodes are needed.
OracleResult exact_min_dominating_set(const Graph& g, const VertexSet& targets,
                                      std::optional<std::size_t> budget = std::nullopt,
                                      std::uint64_t max_nodes = kDefaultNodeLimit);

/// Every size-gamma set dominating `targets`, lexicographically ordered.
/// Throws ResourceLimitError if more than max_subsets subsets would have to
/// be inspected.
std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g, const VertexSet& targets,
                                                     std::uint64_t max_subsets = 50'000'000);

inline constexpr std::size_t kDefaultBicliqueCap = 4;

/// Finds a K_{a,b} subgraph (not necessarily induced). The smaller side is
/// enumerated, so min(a, b) > cap is refused with ResourceLimitError. The
/// returned witness has |left| = a and |right| = b.
std::optional<BicliqueWitness> has_biclique(const Graph& g, std::size_t a, std::size_t b,
                                            std::size_t cap = kDefaultBicliqueCap);

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
double harmonic(std::size_t n);

std::string to_json(const OracleResult& r);

}  // namespace bcdom
