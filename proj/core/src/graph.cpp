#include "bcdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "bcdom/errors.hpp"

namespace bcdom {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::all(std::size_t n) {
  VertexSet s;
  s.ids_.resize(n);
  for (std::size_t v = 0; v < n; ++v) s.ids_[v] = static_cast<Vertex>(v);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

Graph::Graph(std::size_t n) : adj_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw RangeError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint >= n=" + std::to_string(n));
    }
    if (u == v) {
      throw ValidationError("self-loop on vertex " + std::to_string(u));
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t total = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    total += list.size();
  }
  g.m_ = total / 2;
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= adj_.size()) {
    throw RangeError("vertex " + std::to_string(v) + " out of range");
  }
  return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  check_range(*this, v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::validate() const {
  const std::size_t n = adj_.size();
  std::size_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto& list = adj_[v];
    total += list.size();
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (list[k] >= n) throw ValidationError("neighbour id out of range");
      if (list[k] == v) throw ValidationError("self-loop on vertex " + std::to_string(v));
      if (k > 0 && list[k - 1] >= list[k]) {
        throw ValidationError("adjacency list of " + std::to_string(v) +
                              " is not strictly increasing");
      }
      const auto& back = adj_[list[k]];
      if (!std::binary_search(back.begin(), back.end(), v)) {
        throw ValidationError("asymmetric edge " + std::to_string(v) + "->" +
                              std::to_string(list[k]));
      }
    }
  }
  if (total != 2 * m_) throw ValidationError("edge count does not match adjacency");
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t declared_m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;

    if (!have_header) {
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "ds") {
        throw ParseError(line_no, "expected header 'p ds <n> <m>'");
      }
      n = parse_count(tokens[2], line_no, "vertex count");
      declared_m = parse_count(tokens[3], line_no, "edge count");
      if (n > std::numeric_limits<Vertex>::max()) {
        throw ParseError(line_no, "vertex count too large");
      }
      have_header = true;
      continue;
    }

    if (tokens[0] != "e" || tokens.size() != 3) {
      throw ParseError(line_no, "expected edge line 'e <u> <v>'");
    }
    if (edges.size() == declared_m) {
      throw ParseError(line_no, "more edge lines than the declared " + std::to_string(declared_m));
    }
    const auto u = parse_count(tokens[1], line_no, "vertex id");
    const auto v = parse_count(tokens[2], line_no, "vertex id");
    if (u >= n || v >= n) {
      throw RangeError("line " + std::to_string(line_no) + ": vertex id >= n=" + std::to_string(n));
    }
    if (u == v) {
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop on vertex " +
                            std::to_string(u));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  if (!have_header) throw ParseError(line_no, "missing 'p ds <n> <m>' header");
  if (edges.size() != declared_m) {
    throw ParseError(line_no, "expected " + std::to_string(declared_m) + " edge lines, found " +
                                  std::to_string(edges.size()));
  }
  Graph g = Graph::from_edges(n, edges);
  g.validate();
  return g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p ds " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void check_range(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw RangeError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(g.num_vertices()));
  }
}

void check_range(const Graph& g, const VertexSet& s) {
  if (!s.empty()) check_range(g, s.ids().back());
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  std::vector<Vertex> ids(nb.begin(), nb.end());
  ids.push_back(v);
  return VertexSet(std::move(ids));
}

VertexSet undominated(const Graph& g, const VertexSet& d, const VertexSet& targets) {
  check_range(g, d);
  check_range(g, targets);
  std::vector<char> covered(g.num_vertices(), 0);
  for (Vertex v : d) {
    covered[v] = 1;
    for (Vertex w : g.neighbors(v)) covered[w] = 1;
  }
  std::vector<Vertex> missing;
  for (Vertex t : targets) {
    if (!covered[t]) missing.push_back(t);
  }
  return VertexSet(std::move(missing));
}

bool is_dominating(const Graph& g, const VertexSet& d, const VertexSet& targets) {
  return undominated(g, d, targets).empty();
}

}  // namespace bcdom
