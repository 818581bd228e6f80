#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bcdom/bcdom.hpp"
#include "json.hpp"

namespace bcdom::cli {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot write '" + path + "'");
  out << text;
}

bool looks_like_json(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

nlohmann::json parse_json(const std::string& text, const std::string& path) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

VertexSet set_from_json(const nlohmann::json& j, const std::string& path) {
  try {
    return VertexSet(j.get<std::vector<Vertex>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

// Plain whitespace-separated ids ('c' or '#' lines are comments), or a JSON
// document carrying "dominating_set" or "witness_set".
VertexSet read_vertex_set(const std::string& path) {
  const std::string text = slurp(path);
  if (looks_like_json(text)) {
    auto doc = parse_json(text, path);
    for (const char* key : {"dominating_set", "witness_set"}) {
      if (doc.contains(key)) return set_from_json(doc[key], path);
    }
    throw ParseError(0, path + ": no dominating_set or witness_set field");
  }
  std::istringstream in(text);
  std::string line;
  std::vector<Vertex> ids;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok) || tok == "c" || tok[0] == '#') continue;
    do {
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        ids.push_back(static_cast<Vertex>(v));
      } catch (const std::logic_error&) {
        throw ParseError(line_no, path + ": invalid vertex id '" + tok + "'");
      }
    } while (tokens >> tok);
  }
  return VertexSet(std::move(ids));
}

// {"left": [...], "right": [...]} or a solve document with a "witness".
BicliqueWitness read_witness(const std::string& path) {
  auto doc = parse_json(slurp(path), path);
  if (doc.contains("witness")) doc = doc["witness"];
  if (!doc.is_object() || !doc.contains("left") || !doc.contains("right")) {
    throw ParseError(0, path + ": expected an object with left and right");
  }
  return {set_from_json(doc["left"], path), set_from_json(doc["right"], path)};
}

std::string join_ids(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    spill(path, text);
  }
}

struct SolveArgs {
  std::string graph;
  std::string algo = "classical";
  unsigned i = 0;
  std::string targets;
  std::string out;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph_file(a.graph);
  SolverParams params;
  if (!a.targets.empty()) {
    params.targets = read_vertex_set(a.targets);
    check_range(g, *params.targets);
  }
  if (a.i != 0) params.i = a.i;
  const VertexSet targets = params.targets.value_or(VertexSet::all(g.num_vertices()));

  SolveResult res;
  if (a.algo == "classical") {
    res = solve_classical(g, targets);
  } else if (a.algo == "fixed") {
    if (!params.i) {
      err << "solve: --algo fixed requires --i\n";
      return kExitUsage;
    }
    res = solve_fixed_i(g, params);
  } else if (a.algo == "auto") {
    res = solve_auto(g, targets);
  } else if (a.algo == "hybrid") {
    res = solve_hybrid(g, params);
  } else {
    err << "solve: unknown algorithm '" << a.algo << "'\n";
    return kExitUsage;
  }
  emit(out, a.out, to_json(res));
  return kExitOk;
}

struct ExactArgs {
  std::string graph;
  std::string targets;
  std::size_t max_n = 30;
  bool force = false;
  long long budget = -1;
};

int cmd_exact(const ExactArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph_file(a.graph);
  if (g.num_vertices() > a.max_n && !a.force) {
    err << "exact: n=" << g.num_vertices() << " exceeds --max-n " << a.max_n
        << " (use --force to override)\n";
    return kExitResource;
  }
  VertexSet targets = VertexSet::all(g.num_vertices());
  if (!a.targets.empty()) {
    targets = read_vertex_set(a.targets);
    check_range(g, targets);
  }
  std::optional<std::size_t> budget;
  if (a.budget >= 0) budget = static_cast<std::size_t>(a.budget);
  out << to_json(exact_min_dominating_set(g, targets, budget));
  return kExitOk;
}

struct VerifyArgs {
  std::string graph;
  std::string ds;
  std::string targets;
  std::string witness;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.ds.empty() == a.witness.empty()) {
    err << "verify: give exactly one of --ds or --witness\n";
    return kExitUsage;
  }
  const Graph g = read_graph_file(a.graph);
  if (!a.witness.empty()) {
    const BicliqueWitness w = read_witness(a.witness);
    if (verify_witness(g, w)) {
      out << "OK K_{" << w.left.size() << "," << w.right.size() << "}\n";
      return kExitOk;
    }
    out << "FAIL witness is not a biclique subgraph\n";
    return kExitValidation;
  }
  const VertexSet d = read_vertex_set(a.ds);
  VertexSet targets = VertexSet::all(g.num_vertices());
  if (!a.targets.empty()) targets = read_vertex_set(a.targets);
  const VertexSet missing = undominated(g, d, targets);
  if (missing.empty()) {
    out << "OK\n";
    return kExitOk;
  }
  out << "FAIL undominated: " << join_ids(missing) << "\n";
  return kExitValidation;
}

struct BenchArgs {
  std::string graphs_dir;
  std::vector<std::string> gen;
  std::string spec_file;
  std::string algos = "classical";
  bool with_exact = false;
  std::size_t exact_max_n = 30;
  unsigned threads = 1;
  bool no_timing = false;
  std::string out;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream&) {
  std::vector<Instance> instances;
  if (!a.graphs_dir.empty()) instances = instances_from_dir(a.graphs_dir);
  std::vector<std::string> specs = a.gen;
  if (!a.spec_file.empty()) {
    std::istringstream in(slurp(a.spec_file));
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      specs.push_back(line.substr(first, last - first + 1));
    }
  }
  for (const auto& s : specs) instances.push_back(instance_from_genspec(s));

  BenchOptions opts;
  opts.with_exact = a.with_exact;
  opts.exact_max_n = a.exact_max_n;
  opts.threads = a.threads;
  opts.timing = !a.no_timing;
  const auto rows = run_bench(instances, parse_algo_list(a.algos), opts);
  emit(out, a.out, to_csv(rows));
  return kExitOk;
}

struct ReduceArgs {
  std::string input;
  std::string out;
  std::string map;
  bool check_free = false;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream&) {
  const ReducedInstance ri = reduce_set_cover(read_set_cover_file(a.input));
  const Graph& g = ri.graph();
  emit(out, a.out, serialize_graph(g));
  if (!a.map.empty()) spill(a.map, ri.vertex_map_json());
  if (!a.out.empty() && a.out != "-") {
    out << "vertices " << g.num_vertices() << " edges " << g.num_edges() << "\n";
  }
  if (a.check_free) {
    if (auto w = has_biclique(g, 3, 3)) {
      out << "K33: found left {" << join_ids(w->left) << "} right {" << join_ids(w->right)
          << "}\n";
      return kExitValidation;
    }
    out << "K33: absent\n";
  }
  return kExitOk;
}

struct GenArgs {
  std::string model;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t w = 0;
  std::size_t h = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::size_t universe = 0;
  std::size_t sets = 0;
  std::size_t max_set_size = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  std::string text;
  if (a.model == "gnp") {
    text = serialize_graph(gen_gnp(a.n, a.p, a.seed));
  } else if (a.model == "grid") {
    text = serialize_graph(gen_grid(a.w, a.h));
  } else if (a.model == "tree") {
    text = serialize_graph(gen_random_tree(a.n, a.seed));
  } else if (a.model == "degenerate") {
    text = serialize_graph(gen_d_degenerate(a.n, a.d, a.seed).graph);
  } else if (a.model == "intersection-one") {
    text = to_json(gen_intersection_one(a.universe, a.sets, a.max_set_size, a.seed));
  } else {
    err << "gen: unknown model '" << a.model << "'\n";
    return kExitUsage;
  }
  emit(out, a.out, text);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy dominating-set approximation on biclique-free graphs"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run a greedy solver and print the result document");
  s->add_option("graph", solve.graph, "Edge-list graph file")->required();
  s->add_option("--algo", solve.algo, "classical | fixed | auto | hybrid")
      ->check(CLI::IsMember({"classical", "fixed", "auto", "hybrid"}));
  s->add_option("--i", solve.i, "Biclique parameter i (>= 2)")->check(CLI::Range(2U, 1000000U));
  s->add_option("--targets", solve.targets, "Vertex-set file of targets (default: all)");
  s->add_option("--out", solve.out, "Write the document here instead of stdout");

  ExactArgs exact;
  auto* e = app.add_subcommand("exact", "Exact minimum dominating set (branch and bound)");
  e->add_option("graph", exact.graph)->required();
  e->add_option("--targets", exact.targets);
  e->add_option("--max-n", exact.max_n, "Refuse larger graphs unless --force");
  e->add_flag("--force", exact.force);
  e->add_option("--budget", exact.budget, "Only look for sets of at most this size");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a dominating set or a biclique witness");
  v->add_option("graph", verify.graph)->required();
  v->add_option("--ds", verify.ds, "Vertex-set file (ids or a solve/exact document)");
  v->add_option("--targets", verify.targets);
  v->add_option("--witness", verify.witness, "JSON {left, right} or a solve document");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run algorithms over instances and write CSV");
  b->add_option("--graphs", bench.graphs_dir, "Directory of .gr files");
  b->add_option("--gen", bench.gen, "Generator spec, e.g. grid:w=3,h=3 (repeatable)")
      ->delimiter(';');
  b->add_option("--spec-file", bench.spec_file, "File with one generator spec per line");
  b->add_option("--algos", bench.algos, "e.g. classical,fixed:2,auto,hybrid:2");
  b->add_flag("--with-exact", bench.with_exact, "Fill opt_size and ratio via the exact oracle");
  b->add_option("--exact-max-n", bench.exact_max_n, "Oracle guard");
  b->add_option("--threads", bench.threads)->check(CLI::Range(1U, 256U));
  b->add_flag("--no-timing", bench.no_timing, "Write 0 for elapsed_micros");
  b->add_option("--out", bench.out, "CSV path (default stdout)");

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Set cover (intersection 1) to dominating set");
  r->add_option("setcover", reduce.input)->required();
  r->add_option("--out", reduce.out, "Graph output path (default stdout)");
  r->add_option("--map", reduce.map, "Vertex-role map output path");
  r->add_flag("--check-free", reduce.check_free, "Certify the graph has no K_{3,3}");

  GenArgs gen;
  auto* gcmd = app.add_subcommand("gen", "Generate an instance");
  gcmd->add_option("--model", gen.model, "gnp | grid | tree | degenerate | intersection-one")
      ->required();
  gcmd->add_option("--n", gen.n);
  gcmd->add_option("--p", gen.p);
  gcmd->add_option("--width", gen.w, "Grid width");
  gcmd->add_option("--height", gen.h, "Grid height");
  gcmd->add_option("--d", gen.d);
  gcmd->add_option("--seed", gen.seed);
  gcmd->add_option("--universe", gen.universe);
  gcmd->add_option("--sets", gen.sets);
  gcmd->add_option("--max-set-size", gen.max_set_size);
  gcmd->add_option("--out", gen.out);

  std::vector<std::string> argv_store{"bcdom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out, err);
    if (e->parsed()) return cmd_exact(exact, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (b->parsed()) return cmd_bench(bench, out, err);
    if (r->parsed()) return cmd_reduce(reduce, out, err);
    if (gcmd->parsed()) return cmd_gen(gen, out, err);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitResource;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bcdom::cli
