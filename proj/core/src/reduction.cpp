#include "bcdom/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "bcdom/errors.hpp"
#include "json.hpp"

namespace bcdom {

namespace {

std::string join(const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(xs[k]);
  }
  return out;
}

}  // namespace

std::optional<IntersectionViolation> find_intersection_violation(const SetCoverInstance& sc) {
  for (std::size_t p = 0; p < sc.sets.size(); ++p) {
    for (std::size_t q = p + 1; q < sc.sets.size(); ++q) {
      std::vector<Element> shared;
      std::set_intersection(sc.sets[p].begin(), sc.sets[p].end(), sc.sets[q].begin(),
                            sc.sets[q].end(), std::back_inserter(shared));
      if (shared.size() >= 2) return IntersectionViolation{p, q, std::move(shared)};
    }
  }
  return std::nullopt;
}

bool validate_intersection_one(const SetCoverInstance& sc) {
  return !find_intersection_violation(sc).has_value();
}

SetCoverInstance normalized(SetCoverInstance sc) {
  auto sort_unique = [](std::vector<Element>& xs, const std::string& what) {
    std::sort(xs.begin(), xs.end());
    auto dup = std::adjacent_find(xs.begin(), xs.end());
    if (dup != xs.end()) {
      throw ValidationError(what + " repeats element " + std::to_string(*dup));
    }
  };
  sort_unique(sc.universe, "universe");
  for (std::size_t p = 0; p < sc.sets.size(); ++p) {
    sort_unique(sc.sets[p], "set " + std::to_string(p));
  }
  return sc;
}

void validate_structure(const SetCoverInstance& sc) {
  if (!std::is_sorted(sc.universe.begin(), sc.universe.end()) ||
      std::adjacent_find(sc.universe.begin(), sc.universe.end()) != sc.universe.end()) {
    throw ValidationError("universe must be strictly increasing");
  }
  std::vector<char> covered(sc.universe.size(), 0);
  std::set<std::vector<Element>> seen;
  for (std::size_t p = 0; p < sc.sets.size(); ++p) {
    const auto& s = sc.sets[p];
    if (std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) != s.end()) {
      throw ValidationError("set " + std::to_string(p) + " must be strictly increasing");
    }
    for (Element e : s) {
      auto it = std::lower_bound(sc.universe.begin(), sc.universe.end(), e);
      if (it == sc.universe.end() || *it != e) {
        throw ValidationError("set " + std::to_string(p) + " contains " + std::to_string(e) +
                              " which is not in the universe");
      }
      covered[static_cast<std::size_t>(it - sc.universe.begin())] = 1;
    }
    if (!seen.insert(s).second) {
      throw ValidationError("set " + std::to_string(p) + " duplicates an earlier set");
    }
  }
  for (std::size_t k = 0; k < covered.size(); ++k) {
    if (!covered[k]) {
      throw ValidationError("element " + std::to_string(sc.universe[k]) +
                            " is covered by no set");
    }
  }
}

SetCoverInstance parse_set_cover(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("set-cover JSON: ") + e.what());
  }
  SetCoverInstance sc;
  try {
    sc.universe = doc.at("universe").get<std::vector<Element>>();
    sc.sets = doc.at("sets").get<std::vector<std::vector<Element>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("set-cover fields: ") + e.what());
  }
  sc = normalized(std::move(sc));
  validate_structure(sc);
  if (auto bad = find_intersection_violation(sc)) {
    throw ValidationError("sets " + std::to_string(bad->first) + " and " +
                          std::to_string(bad->second) + " share elements {" +
                          join(bad->shared) + "}");
  }
  return sc;
}

SetCoverInstance read_set_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open set-cover file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_set_cover(buf.str());
}

std::string to_json(const SetCoverInstance& sc) {
  nlohmann::ordered_json doc;
  doc["universe"] = sc.universe;
  doc["sets"] = sc.sets;
  return doc.dump() + "\n";
}

Vertex ReducedInstance::element_vertex(std::size_t idx) const {
  if (idx >= num_elements()) throw RangeError("element index out of range");
  return static_cast<Vertex>(idx);
}

Vertex ReducedInstance::set_vertex(std::size_t idx) const {
  if (idx >= num_sets()) throw RangeError("set index " + std::to_string(idx) + " out of range");
  return static_cast<Vertex>(num_elements() + idx);
}

std::optional<Element> ReducedInstance::element_of(Vertex v) const {
  if (!is_element_vertex(v)) return std::nullopt;
  return source_.universe[v];
}

std::optional<std::size_t> ReducedInstance::set_of(Vertex v) const {
  if (!is_set_vertex(v)) return std::nullopt;
  return v - num_elements();
}

std::string ReducedInstance::vertex_map_json() const {
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < graph_.num_vertices(); ++v) {
    nlohmann::ordered_json entry;
    entry["id"] = v;
    if (auto e = element_of(v)) {
      entry["role"] = "element";
      entry["element"] = *e;
    } else if (auto s = set_of(v)) {
      entry["role"] = "set";
      entry["set"] = *s;
    } else {
      entry["role"] = v == x_vertex() ? "x" : "y";
    }
    vertices.push_back(std::move(entry));
  }
  nlohmann::ordered_json doc;
  doc["vertices"] = std::move(vertices);
  return doc.dump(2) + "\n";
}

ReducedInstance reduce_set_cover(const SetCoverInstance& sc) {
  validate_structure(sc);
  if (auto bad = find_intersection_violation(sc)) {
    throw ValidationError("sets " + std::to_string(bad->first) + " and " +
                          std::to_string(bad->second) + " share elements {" +
                          join(bad->shared) + "}");
  }
  ReducedInstance ri;
  ri.source_ = sc;
  const std::size_t n = sc.universe.size() + sc.sets.size() + 2;
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < sc.sets.size(); ++p) {
    const Vertex fv = ri.set_vertex(p);
    for (Element e : sc.sets[p]) {
      auto it = std::lower_bound(sc.universe.begin(), sc.universe.end(), e);
      edges.emplace_back(static_cast<Vertex>(it - sc.universe.begin()), fv);
    }
    edges.emplace_back(fv, ri.x_vertex());
  }
  edges.emplace_back(ri.x_vertex(), ri.y_vertex());
  ri.graph_ = Graph::from_edges(n, edges);
  return ri;
}

bool is_set_cover(const SetCoverInstance& sc, const std::vector<std::size_t>& cover) {
  std::set<Element> hit;
  for (std::size_t p : cover) {
    if (p >= sc.sets.size()) return false;
    hit.insert(sc.sets[p].begin(), sc.sets[p].end());
  }
  return std::all_of(sc.universe.begin(), sc.universe.end(),
                     [&](Element e) { return hit.count(e) > 0; });
}

std::vector<std::size_t> map_solution_back(const ReducedInstance& ri, const VertexSet& d) {
  const Graph& g = ri.graph();
  check_range(g, d);
  if (!is_dominating(g, d, VertexSet::all(g.num_vertices()))) {
    throw ContractError("map_solution_back: the given set does not dominate the reduced graph");
  }
  std::vector<std::size_t> cover;
  for (Vertex v : d) {
    if (ri.is_element_vertex(v)) {
      // Neighbours of an element vertex are exactly its covering sets, in
      // family order.
      cover.push_back(*ri.set_of(g.neighbors(v).front()));
    } else if (auto s = ri.set_of(v)) {
      cover.push_back(*s);
    }
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  return cover;
}

VertexSet forward_solution(const ReducedInstance& ri, const std::vector<std::size_t>& cover) {
  for (std::size_t p : cover) {
    if (p >= ri.num_sets()) {
      throw ContractError("set index " + std::to_string(p) + " out of range");
    }
  }
  if (!is_set_cover(ri.source(), cover)) {
    throw ContractError("forward_solution: the given sets do not cover the universe");
  }
  std::vector<Vertex> ids;
  for (std::size_t p : cover) ids.push_back(ri.set_vertex(p));
  ids.push_back(ri.x_vertex());
  return VertexSet(std::move(ids));
}

}  // namespace bcdom
