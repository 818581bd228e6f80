#include "bcdom/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "bcdom/errors.hpp"
#include "bcdom/generators.hpp"
#include "bcdom/oracles.hpp"

namespace bcdom {

namespace {

using Params = std::map<std::string, std::string, std::less<>>;

Params parse_params(std::string_view spec, std::string_view body) {
  Params out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    const std::string_view item = body.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError(0, "genspec '" + std::string(spec) + "': expected key=value, got '" +
                              std::string(item) + "'");
    }
    out.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    if (comma == body.size()) break;
    pos = comma + 1;
  }
  return out;
}

template <typename T>
T take(Params& params, std::string_view spec, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw ParseError(0, "genspec '" + std::string(spec) + "': missing '" + key + "'");
  }
  T value{};
  const std::string& text = it->second;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(0, "genspec '" + std::string(spec) + "': bad value for '" + key + "'");
  }
  params.erase(it);
  return value;
}

void require_consumed(const Params& params, std::string_view spec) {
  if (!params.empty()) {
    throw ParseError(0, "genspec '" + std::string(spec) + "': unknown key '" +
                            params.begin()->first + "'");
  }
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <typename T>
std::string opt_field(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string ratio_field(const std::optional<double>& r) {
  if (!r) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *r);
  return buf;
}

std::vector<BenchRecord> bench_instance(const Instance& inst, const std::vector<AlgoSpec>& algos,
                                        const BenchOptions& opts) {
  std::vector<BenchRecord> rows;
  rows.reserve(algos.size());
  if (!inst.graph) {
    for (const AlgoSpec& a : algos) {
      BenchRecord r;
      r.graph_name = inst.name;
      r.algorithm = std::string(to_string(a.algorithm));
      r.i_param = a.i;
      r.error = inst.load_error.empty() ? "instance unavailable" : inst.load_error;
      rows.push_back(std::move(r));
    }
    return rows;
  }

  const Graph& g = *inst.graph;
  const VertexSet all = VertexSet::all(g.num_vertices());
  std::optional<std::size_t> opt;
  std::string oracle_error;
  if (opts.with_exact && g.num_vertices() <= opts.exact_max_n) {
    try {
      opt = exact_min_dominating_set(g, all).opt_size;
    } catch (const Error& e) {
      oracle_error = std::string("oracle: ") + e.what();
    }
  }

  for (const AlgoSpec& a : algos) {
    BenchRecord r;
    r.graph_name = inst.name;
    r.n = g.num_vertices();
    r.m = g.num_edges();
    r.algorithm = std::string(to_string(a.algorithm));
    r.i_param = a.i;
    r.error = oracle_error;
    try {
      const auto start = std::chrono::steady_clock::now();
      SolveResult res = run_algorithm(g, a, all);
      const auto stop = std::chrono::steady_clock::now();
      if (opts.timing) {
        r.elapsed_micros =
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
      }
      r.ds_size = res.dominating_set.size();
      r.t_detected = res.t_detected;
      r.rounds = res.trace.rounds.size();
      if (!is_dominating(g, res.dominating_set, all)) r.error = "result does not dominate";
      if (opt) {
        r.opt_size = opt;
        if (*opt > 0) r.ratio = static_cast<double>(*r.ds_size) / static_cast<double>(*opt);
      }
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

Graph graph_from_genspec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view model = spec.substr(0, colon);
  Params params =
      colon == std::string_view::npos ? Params{} : parse_params(spec, spec.substr(colon + 1));
  try {
    if (model == "gnp") {
      auto n = take<std::size_t>(params, spec, "n");
      auto p = take<double>(params, spec, "p");
      auto seed = take<std::uint64_t>(params, spec, "seed");
      require_consumed(params, spec);
      return gen_gnp(n, p, seed);
    }
    if (model == "grid") {
      auto w = take<std::size_t>(params, spec, "w");
      auto h = take<std::size_t>(params, spec, "h");
      require_consumed(params, spec);
      return gen_grid(w, h);
    }
    if (model == "tree") {
      auto n = take<std::size_t>(params, spec, "n");
      auto seed = take<std::uint64_t>(params, spec, "seed");
      require_consumed(params, spec);
      return gen_random_tree(n, seed);
    }
    if (model == "degenerate") {
      auto n = take<std::size_t>(params, spec, "n");
      auto d = take<std::size_t>(params, spec, "d");
      auto seed = take<std::uint64_t>(params, spec, "seed");
      require_consumed(params, spec);
      return gen_d_degenerate(n, d, seed).graph;
    }
  } catch (const ContractError& e) {
    throw ParseError(0, "genspec '" + std::string(spec) + "': " + e.what());
  }
  throw ParseError(0, "genspec '" + std::string(spec) + "': unknown model '" +
                          std::string(model) + "'");
}

Instance instance_from_genspec(std::string_view spec) {
  return Instance{std::string(spec), graph_from_genspec(spec), {}};
}

std::vector<Instance> instances_from_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".gr") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  std::vector<Instance> out;
  for (const auto& path : files) {
    Instance inst;
    inst.name = path.filename().string();
    try {
      inst.graph = read_graph_file(path.string());
    } catch (const Error& e) {
      inst.load_error = e.what();
    }
    out.push_back(std::move(inst));
  }
  return out;
}

AlgoSpec parse_algo_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  std::optional<unsigned> i;
  if (colon != std::string_view::npos) {
    const std::string_view arg = text.substr(colon + 1);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
    if (ec != std::errc{} || ptr != arg.data() + arg.size() || value < 2) {
      throw ParseError(0, "algorithm '" + std::string(text) + "': i must be an integer >= 2");
    }
    i = value;
  }
  if (name == "classical" && !i) return {Algorithm::classical, {}};
  if (name == "auto" && !i) return {Algorithm::auto_detect, {}};
  if (name == "fixed" && i) return {Algorithm::fixed_i, i};
  if (name == "hybrid") return {Algorithm::hybrid, i};
  throw ParseError(0, "unknown algorithm '" + std::string(text) +
                          "' (expected classical, fixed:<i>, auto, hybrid[:<i>])");
}

std::vector<AlgoSpec> parse_algo_list(std::string_view comma_separated) {
  std::vector<AlgoSpec> out;
  std::size_t pos = 0;
  while (pos < comma_separated.size()) {
    std::size_t comma = comma_separated.find(',', pos);
    if (comma == std::string_view::npos) comma = comma_separated.size();
    if (comma > pos) out.push_back(parse_algo_spec(comma_separated.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::string to_string(const AlgoSpec& a) {
  std::string s(to_string(a.algorithm));
  if (a.i) s += ":" + std::to_string(*a.i);
  return s;
}

SolveResult run_algorithm(const Graph& g, const AlgoSpec& algo, const VertexSet& targets) {
  switch (algo.algorithm) {
    case Algorithm::classical: return solve_classical(g, targets);
    case Algorithm::fixed_i: return solve_fixed_i(g, SolverParams{algo.i, targets});
    case Algorithm::auto_detect: return solve_auto(g, targets);
    case Algorithm::hybrid: return solve_hybrid(g, SolverParams{algo.i, targets});
  }
  throw ContractError("unknown algorithm");
}

std::vector<BenchRecord> run_bench(const std::vector<Instance>& instances,
                                   const std::vector<AlgoSpec>& algos, const BenchOptions& opts) {
  std::vector<std::vector<BenchRecord>> per_instance(instances.size());
  const unsigned workers =
      std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(instances.size())));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      per_instance[k] = bench_instance(instances[k], algos, opts);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<BenchRecord> rows;
  for (auto& chunk : per_instance) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(rows));
  }
  return rows;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << csv_field(r.graph_name) << ',' << r.n << ',' << r.m << ',' << csv_field(r.algorithm)
        << ',' << opt_field(r.i_param) << ',' << opt_field(r.ds_size) << ','
        << opt_field(r.opt_size) << ',' << ratio_field(r.ratio) << ','
        << opt_field(r.t_detected) << ',' << opt_field(r.rounds) << ',' << r.elapsed_micros
        << ',' << csv_field(r.error) << '\n';
  }
}

std::string to_csv(std::span<const BenchRecord> records) {
  std::ostringstream out;
  write_csv(out, records);
  return out.str();
}

}  // namespace bcdom
