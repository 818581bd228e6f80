#include "bcdom/solvers.hpp"

#include <algorithm>

#include "bcdom/errors.hpp"
#include "json.hpp"

namespace bcdom {

namespace {

// Undominated targets A together with |N[v] cap A| for every vertex.
class Residual {
 public:
  Residual(const Graph& g, const VertexSet& targets)
      : g_(g), in_a_(g.num_vertices(), 0), cover_(g.num_vertices(), 0) {
    check_range(g, targets);
    for (Vertex t : targets) {
      in_a_[t] = 1;
      ++remaining_;
      ++cover_[t];
      for (Vertex w : g.neighbors(t)) ++cover_[w];
    }
  }

  bool empty() const noexcept { return remaining_ == 0; }

  // Lowest-id maximiser of |N[v] cap A|. Positive whenever A is nonempty.
  Vertex best_vertex() const {
    Vertex best = 0;
    for (Vertex v = 1; v < cover_.size(); ++v) {
      if (cover_[v] > cover_[best]) best = v;
    }
    return best;
  }

  // (N[v] cap A) \ {v}, increasing.
  std::vector<Vertex> open_part(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : g_.neighbors(v)) {
      if (in_a_[w]) out.push_back(w);
    }
    return out;
  }

  std::size_t dominate(Vertex v) {
    std::size_t removed = 0;
    if (in_a_[v]) {
      remove(v);
      ++removed;
    }
    for (Vertex w : g_.neighbors(v)) {
      if (in_a_[w]) {
        remove(w);
        ++removed;
      }
    }
    return removed;
  }

  VertexSet remaining() const {
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < in_a_.size(); ++v) {
      if (in_a_[v]) ids.push_back(v);
    }
    return VertexSet(std::move(ids));
  }

 private:
  void remove(Vertex u) {
    in_a_[u] = 0;
    --remaining_;
    --cover_[u];
    for (Vertex w : g_.neighbors(u)) --cover_[w];
  }

  const Graph& g_;
  std::vector<char> in_a_;
  std::vector<std::size_t> cover_;
  std::size_t remaining_ = 0;
};

struct ChainPick {
  Vertex vertex = 0;
  std::size_t hits = 0;
};

// Lowest-id vertex outside `chosen` maximising |N[v] cap b|; hits == 0 when
// no such vertex touches b. `scratch` must be all-zero of size n and is left
// all-zero.
ChainPick best_on_chain(const Graph& g, const std::vector<Vertex>& b,
                        const std::vector<Vertex>& chosen,
                        std::vector<std::size_t>& scratch) {
  std::vector<Vertex> touched;
  auto bump = [&](Vertex w) {
    if (scratch[w]++ == 0) touched.push_back(w);
  };
  for (Vertex x : b) {
    bump(x);
    for (Vertex w : g.neighbors(x)) bump(w);
  }
  ChainPick pick;
  for (Vertex w : touched) {
    const bool taken = std::find(chosen.begin(), chosen.end(), w) != chosen.end();
    if (!taken && (scratch[w] > pick.hits || (scratch[w] == pick.hits && w < pick.vertex))) {
      pick = {w, scratch[w]};
    }
  }
  for (Vertex w : touched) scratch[w] = 0;
  return pick;
}

enum class ChainRule {
  capped,   // stop at the cap or when nothing touches B_l
  growing,  // continue only while |B_{s+1}| >= s+1
};

struct RoundOutcome {
  Round round;
  std::vector<Vertex> last_b;
};

RoundOutcome run_round(const Graph& g, Residual& a, ChainRule rule, std::size_t cap,
                       std::vector<std::size_t>& scratch) {
  RoundOutcome out;
  Round& round = out.round;
  const Vertex first = a.best_vertex();
  round.chosen.push_back(first);
  std::vector<Vertex> b = a.open_part(first);
  round.b_sizes.push_back(b.size());

  while (rule != ChainRule::capped || round.chosen.size() < cap) {
    const ChainPick pick = best_on_chain(g, b, round.chosen, scratch);
    if (pick.hits == 0) break;
    std::vector<Vertex> next;
    for (Vertex x : b) {
      if (x != pick.vertex && g.has_edge(pick.vertex, x)) next.push_back(x);
    }
    if (rule == ChainRule::growing && next.size() < round.chosen.size() + 1) break;
    round.chosen.push_back(pick.vertex);
    round.b_sizes.push_back(next.size());
    b = std::move(next);
  }

  for (Vertex v : round.chosen) round.newly_dominated += a.dominate(v);
  out.last_b = std::move(b);
  return out;
}

struct GreedyRun {
  GreedyTrace trace;
  std::vector<std::vector<Vertex>> last_b;
};

GreedyRun run_greedy(const Graph& g, const VertexSet& targets, ChainRule rule,
                     std::size_t cap) {
  GreedyRun run;
  run.trace.initial_targets = targets;
  Residual a(g, targets);
  std::vector<std::size_t> scratch(g.num_vertices(), 0);
  std::vector<Vertex> all_chosen;
  while (!a.empty()) {
    RoundOutcome r = run_round(g, a, rule, cap, scratch);
    all_chosen.insert(all_chosen.end(), r.round.chosen.begin(), r.round.chosen.end());
    run.trace.rounds.push_back(std::move(r.round));
    run.last_b.push_back(std::move(r.last_b));
  }
  run.trace.final_set = VertexSet(std::move(all_chosen));
  return run;
}

SolveResult from_run(GreedyRun run, Algorithm algorithm) {
  SolveResult res;
  res.dominating_set = run.trace.final_set;
  res.trace = std::move(run.trace);
  res.algorithm = algorithm;
  return res;
}

unsigned require_i(const SolverParams& params) {
  if (!params.i || *params.i < 2) {
    throw ContractError("parameter i must be present and >= 2");
  }
  return *params.i;
}

VertexSet targets_or_all(const Graph& g, const SolverParams& params) {
  return params.targets ? *params.targets : VertexSet::all(g.num_vertices());
}

}  // namespace

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::classical: return "classical";
    case Algorithm::fixed_i: return "fixed";
    case Algorithm::auto_detect: return "auto";
    case Algorithm::hybrid: return "hybrid";
  }
  return "unknown";
}

SolveResult solve_classical(const Graph& g, const VertexSet& targets) {
  return from_run(run_greedy(g, targets, ChainRule::capped, 1), Algorithm::classical);
}

SolveResult solve_classical(const Graph& g) {
  return solve_classical(g, VertexSet::all(g.num_vertices()));
}

SolveResult solve_fixed_i(const Graph& g, const SolverParams& params) {
  const unsigned i = require_i(params);
  SolveResult res = from_run(run_greedy(g, targets_or_all(g, params), ChainRule::capped, i - 1),
                             Algorithm::fixed_i);
  res.i_param = i;
  return res;
}

SolveResult solve_auto(const Graph& g, const VertexSet& targets) {
  GreedyRun run = run_greedy(g, targets, ChainRule::growing, 0);

  // Biclique order certified by each round: l for l >= 2 (the growth rule
  // guarantees |B_l| >= l); for l == 1 an edge exists iff B_1 is nonempty.
  std::size_t best_order = 0;
  std::size_t best_round = 0;
  for (std::size_t r = 0; r < run.trace.rounds.size(); ++r) {
    const std::size_t l = run.trace.rounds[r].chosen.size();
    const std::size_t order = run.last_b[r].size() >= l ? l : 0;
    if (order > best_order) {
      best_order = order;
      best_round = r;
    }
  }

  std::optional<BicliqueWitness> witness;
  if (best_order >= 1) {
    const auto& chosen = run.trace.rounds[best_round].chosen;
    const auto& b = run.last_b[best_round];
    witness = BicliqueWitness{
        VertexSet(chosen),
        VertexSet(std::vector<Vertex>(b.begin(), b.begin() + static_cast<long>(best_order)))};
  }

  SolveResult res = from_run(std::move(run), Algorithm::auto_detect);
  res.t_detected = static_cast<unsigned>(best_order + 1);
  res.witness = std::move(witness);
  return res;
}

SolveResult solve_auto(const Graph& g) { return solve_auto(g, VertexSet::all(g.num_vertices())); }

SolveResult solve_hybrid(const Graph& g, const SolverParams& params) {
  const VertexSet targets = targets_or_all(g, params);
  SolveResult base = params.i ? solve_fixed_i(g, params) : solve_auto(g, targets);
  const auto& rounds = base.trace.rounds;

  Residual a(g, targets);
  std::vector<Vertex> prefix;
  std::optional<SolveResult> best;
  std::size_t best_prefix = 0;
  std::size_t best_size = 0;

  for (std::size_t r = 0;; ++r) {
    SolveResult ext = solve_classical(g, a.remaining());
    const std::size_t size = VertexSet(prefix).size() + ext.dominating_set.size();
    if (!best || size < best_size) {
      best = std::move(ext);
      best_prefix = r;
      best_size = size;
    }
    if (r == rounds.size()) break;
    for (Vertex v : rounds[r].chosen) {
      a.dominate(v);
      prefix.push_back(v);
    }
  }

  SolveResult res;
  res.algorithm = Algorithm::hybrid;
  res.i_param = base.i_param;
  res.t_detected = base.t_detected;
  res.witness = base.witness;
  res.hybrid_prefix = best_prefix;
  res.trace.initial_targets = targets;
  res.trace.rounds.assign(rounds.begin(), rounds.begin() + static_cast<long>(best_prefix));
  res.trace.rounds.insert(res.trace.rounds.end(), best->trace.rounds.begin(),
                          best->trace.rounds.end());
  std::vector<Vertex> all;
  for (const Round& round : res.trace.rounds) {
    all.insert(all.end(), round.chosen.begin(), round.chosen.end());
  }
  res.trace.final_set = VertexSet(std::move(all));
  res.dominating_set = res.trace.final_set;
  return res;
}

bool verify_witness(const Graph& g, const BicliqueWitness& w) {
  check_range(g, w.left);
  check_range(g, w.right);
  for (Vertex u : w.left) {
    if (w.right.contains(u)) return false;
    for (Vertex v : w.right) {
      if (!g.has_edge(u, v)) return false;
    }
  }
  return true;
}

std::string to_json(const SolveResult& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["algorithm"] = std::string(to_string(r.algorithm));
  doc["dominating_set"] = r.dominating_set.ids();
  doc["size"] = r.dominating_set.size();
  doc["t_detected"] = r.t_detected ? ordered_json(*r.t_detected) : ordered_json(nullptr);
  if (r.witness) {
    doc["witness"] = {{"left", r.witness->left.ids()}, {"right", r.witness->right.ids()}};
  } else {
    doc["witness"] = nullptr;
  }
  ordered_json rounds = ordered_json::array();
  for (const Round& round : r.trace.rounds) {
    rounds.push_back({{"chosen", round.chosen},
                      {"b_sizes", round.b_sizes},
                      {"newly_dominated", round.newly_dominated}});
  }
  doc["rounds"] = std::move(rounds);
  return doc.dump(2) + "\n";
}

}  // namespace bcdom
