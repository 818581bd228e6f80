#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcdom/graph.hpp"

namespace bcdom {

/// Two disjoint vertex sets with every left-right pair joined by an edge.
struct BicliqueWitness {
  VertexSet left;
  VertexSet right;

  friend bool operator==(const BicliqueWitness&, const BicliqueWitness&) = default;
};

/// One round of a greedy run.
///
/// chosen holds v_1..v_l in the order they were picked and b_sizes the sizes
/// |B_1|..|B_l| of the nested candidate sets. For the classical greedy every
/// round has a single vertex and b_sizes = {|N[v] cap A| - 1}.
struct Round {
  std::vector<Vertex> chosen;
  std::vector<std::size_t> b_sizes;
  std::size_t newly_dominated = 0;

  friend bool operator==(const Round&, const Round&) = default;
};

struct GreedyTrace {
  std::vector<Round> rounds;
  VertexSet initial_targets;
  VertexSet final_set;

  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

enum class Algorithm { classical, fixed_i, auto_detect, hybrid };

std::string_view to_string(Algorithm a);

struct SolverParams {
  std::optional<unsigned> i;           // >= 2 when present; absent = auto
  std::optional<VertexSet> targets;    // defaults to V(G)
};

struct SolveResult {
  VertexSet dominating_set;
  GreedyTrace trace;
  Algorithm algorithm = Algorithm::classical;
  std::optional<unsigned> i_param;
  std::optional<unsigned> t_detected;
  std::optional<BicliqueWitness> witness;
  // hybrid only: number of modified-greedy rounds in the winning prefix
  std::optional<std::size_t> hybrid_prefix;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

// All solvers break ties by lowest vertex id and never throw for valid ids.
// Target ids are range-checked (RangeError).

/// One vertex per round maximising |N[v] cap A|.
SolveResult solve_classical(const Graph& g, const VertexSet& targets);
SolveResult solve_classical(const Graph& g);

/// Modified greedy with parameter i: at most i-1 vertices per round, each
/// round grows the chain B_1 >= B_2 >= ... until the cap is hit or no
/// unchosen vertex touches B_l. Throws ContractError unless params.i >= 2.
SolveResult solve_fixed_i(const Graph& g, const SolverParams& params);

/// Parameterless variant. A round extends to v_{s+1} only while
/// |B_{s+1}| >= s+1; t_detected is one more than the largest biclique order
/// certified in any round and the witness is that K_{t-1,t-1}.
SolveResult solve_auto(const Graph& g, const VertexSet& targets);
SolveResult solve_auto(const Graph& g);

/// Runs the modified greedy (fixed-i if params.i, auto otherwise), extends
/// every prefix D_0 = {}, D_1, ... with the classical greedy and returns the
/// smallest extension, earliest prefix on ties.
SolveResult solve_hybrid(const Graph& g, const SolverParams& params);

bool verify_witness(const Graph& g, const BicliqueWitness& w);

/// JSON document with fields algorithm, dominating_set, size, t_detected,
/// witness, rounds. Deterministic byte-for-byte.
std::string to_json(const SolveResult& r);

}  // namespace bcdom
