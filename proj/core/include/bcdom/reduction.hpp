#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcdom/graph.hpp"

namespace bcdom {

using Element = std::int64_t;

/// Set family over a universe. A valid instance has sorted, duplicate-free
/// sets drawn from the universe, a universe equal to the union of the sets,
/// no repeated set, and pairwise intersections of size at most one.
struct SetCoverInstance {
  std::vector<Element> universe;
  std::vector<std::vector<Element>> sets;

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;
};

struct IntersectionViolation {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<Element> shared;
};

/// First pair (p < q, lexicographic) sharing two or more elements.
std::optional<IntersectionViolation> find_intersection_violation(const SetCoverInstance& sc);

bool validate_intersection_one(const SetCoverInstance& sc);

/// Structural checks only (membership, coverage, duplicates, ordering).
/// Throws ValidationError.
void validate_structure(const SetCoverInstance& sc);

/// Sorts the universe and every set. Throws ValidationError on repeats.
SetCoverInstance normalized(SetCoverInstance sc);

/// JSON {"universe": [...], "sets": [[...], ...]}. Enforces every invariant,
/// intersection-1 included; a violation names the offending pair.
SetCoverInstance parse_set_cover(std::string_view text);
SetCoverInstance read_set_cover_file(const std::string& path);
std::string to_json(const SetCoverInstance& sc);

/// Dominating-set instance built from an intersection-1 family.
///
/// Layout: element vertices 0..|A|-1 in universe order, then one vertex per
/// set in family order, then x, then y. Each set vertex is joined to its
/// elements and to x; y hangs off x.
class ReducedInstance {
 public:
  const Graph& graph() const noexcept { return graph_; }
  const SetCoverInstance& source() const noexcept { return source_; }

  std::size_t num_elements() const noexcept { return source_.universe.size(); }
  std::size_t num_sets() const noexcept { return source_.sets.size(); }

  Vertex element_vertex(std::size_t idx) const;
  Vertex set_vertex(std::size_t idx) const;
  Vertex x_vertex() const noexcept { return static_cast<Vertex>(num_elements() + num_sets()); }
  Vertex y_vertex() const noexcept { return x_vertex() + 1; }

  bool is_element_vertex(Vertex v) const noexcept { return v < num_elements(); }
  bool is_set_vertex(Vertex v) const noexcept {
    return v >= num_elements() && v < num_elements() + num_sets();
  }
  std::optional<Element> element_of(Vertex v) const;
  std::optional<std::size_t> set_of(Vertex v) const;

  /// {"vertices": [{"id", "role", "element"|"set"}...]} describing the layout.
  std::string vertex_map_json() const;

 private:
  friend ReducedInstance reduce_set_cover(const SetCoverInstance& sc);

  Graph graph_;
  SetCoverInstance source_;
};

/// Throws ValidationError when sc is not a valid intersection-1 instance.
ReducedInstance reduce_set_cover(const SetCoverInstance& sc);

/// Turns a dominating set of the reduced graph into a set cover: element
/// vertices become their lowest-index covering set, y becomes x, and the
/// set vertices that remain are returned as sorted family indices.
/// Throws ContractError when d does not dominate the graph.
std::vector<std::size_t> map_solution_back(const ReducedInstance& ri, const VertexSet& d);

/// Set vertices of `cover` plus x. Throws ContractError for an index out of
/// range or a family that misses some element.
VertexSet forward_solution(const ReducedInstance& ri, const std::vector<std::size_t>& cover);

/// True iff the chosen family indices cover the whole universe.
bool is_set_cover(const SetCoverInstance& sc, const std::vector<std::size_t>& cover);

}  // namespace bcdom
