#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcdom/graph.hpp"
#include "bcdom/solvers.hpp"

namespace bcdom {

/// A named benchmark input. When loading failed, graph is empty and
/// load_error says why; the harness still emits rows for it.
struct Instance {
  std::string name;
  std::optional<Graph> graph;
  std::string load_error;
};

/// Generator spec strings:
///   gnp:n=20,p=0.2,seed=1   grid:w=4,h=3   tree:n=16,seed=7
///   degenerate:n=30,d=2,seed=3
/// Throws ParseError for malformed specs.
Graph graph_from_genspec(std::string_view spec);
Instance instance_from_genspec(std::string_view spec);

/// All regular files ending in .gr under dir, sorted by file name. A file
/// that fails to parse becomes an Instance with load_error set.
std::vector<Instance> instances_from_dir(const std::string& dir);

/// classical | fixed:<i> | auto | hybrid:<i> | hybrid   (hybrid = auto base)
struct AlgoSpec {
  Algorithm algorithm = Algorithm::classical;
  std::optional<unsigned> i;

  friend bool operator==(const AlgoSpec&, const AlgoSpec&) = default;
};

AlgoSpec parse_algo_spec(std::string_view text);
std::vector<AlgoSpec> parse_algo_list(std::string_view comma_separated);
std::string to_string(const AlgoSpec& a);

SolveResult run_algorithm(const Graph& g, const AlgoSpec& algo, const VertexSet& targets);

struct BenchRecord {
  std::string graph_name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string algorithm;
  std::optional<unsigned> i_param;
  std::optional<std::size_t> ds_size;
  std::optional<std::size_t> opt_size;
  std::optional<double> ratio;
  std::optional<unsigned> t_detected;
  std::optional<std::size_t> rounds;
  std::int64_t elapsed_micros = 0;
  std::string error;
};

struct BenchOptions {
  bool with_exact = false;
  std::size_t exact_max_n = 30;  // oracle guard
  unsigned threads = 1;
  bool timing = true;            // false writes 0 for elapsed_micros
};

/// One row per (instance, algorithm) in instance-major order regardless of
/// thread count.
std::vector<BenchRecord> run_bench(const std::vector<Instance>& instances,
                                   const std::vector<AlgoSpec>& algos, const BenchOptions& opts);

inline constexpr std::string_view kCsvHeader =
    "graph_name,n,m,algorithm,i_param,ds_size,opt_size,ratio,t_detected,rounds,elapsed_micros,"
    "error";

/// Header plus one line per record, '\n' line endings, RFC 4180 quoting.
void write_csv(std::ostream& out, std::span<const BenchRecord> records);
std::string to_csv(std::span<const BenchRecord> records);

}  // namespace bcdom
