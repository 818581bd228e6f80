#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bcdom/graph.hpp"
#include "bcdom/reduction.hpp"

namespace bcdom {

__extension__ using Uint128 = unsigned __int128;

/// splitmix64 (Vigna). The draw order of every generator below is part of
/// its contract, so outputs are reproducible across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Top 53 bits scaled to [0, 1).
  double uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// floor(next() * bound / 2^64), i.e. the high word of the 128-bit
  /// product. bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<Uint128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

/// G(n, p): pairs {u < v} in lexicographic order, one draw each, edge iff
/// uniform01() < p. Throws ContractError unless 0 <= p <= 1.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

/// w x h grid, vertex (r, c) -> r * w + c. Throws ContractError if w or h is 0.
Graph gen_grid(std::size_t w, std::size_t h);

/// Random attachment tree: vertex v >= 1 joins below(v). Throws
/// ContractError for n == 0.
Graph gen_random_tree(std::size_t n, std::uint64_t seed);

struct DegenerateGraph {
  Graph graph;
  // Each vertex has at most d neighbours before it in this order.
  std::vector<Vertex> order;
};

/// Vertex v picks min(d, v) distinct earlier neighbours with a partial
/// Fisher-Yates shuffle of [0, v): for j < k swap slot j with j + below(v - j).
DegenerateGraph gen_d_degenerate(std::size_t n, std::size_t d, std::uint64_t seed);

/// Rejection sampling of an intersection-1 family over {1..universe_size}.
///
/// Each proposal draws a size 1 + below(max_set_size) (clamped to the
/// universe) and that many distinct elements by partial Fisher-Yates over
/// 1..universe_size. A proposal is kept when it meets every kept set in at
/// most one element and repeats none. After set_count acceptances or
/// 64 * set_count + 64 proposals, every uncovered element is added as a
/// singleton. Throws GenerationError if nothing was accepted, ContractError
/// for zero parameters.
SetCoverInstance gen_intersection_one(std::size_t universe_size, std::size_t set_count,
                                      std::size_t max_set_size, std::uint64_t seed);

}  // namespace bcdom
