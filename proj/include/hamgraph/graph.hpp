#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamgraph/rational.hpp"
#include "hamgraph/validation.hpp"

namespace hamgraph {

// Fixed-point graphs of Hamiltonian circle actions on compact symplectic
// four-manifolds. Thin vertices are isolated fixed points, fat vertices are
// fixed surfaces (labeled by genus and self-intersection), and an edge
// labeled k >= 2 is an isotropy Z_k-sphere joining two isolated fixed
// points. A decorated graph additionally carries exact moment values on all
// vertices and areas on fat vertices; DullGraph stores those fields as
// optionals and the dull-level operations ignore them.

enum class VertexKind { Thin, Fat };

// Min/Max marks are accepted in input files and preserved on output; at the
// dull level they mean nothing more than "extremal".
enum class ExtremalMark { None, Min, Max, Extremal };

struct Vertex {
  std::string id;
  VertexKind kind = VertexKind::Thin;
  ExtremalMark extremal = ExtremalMark::None;
  long long genus = 0;              // fat only
  long long self_intersection = 0;  // fat only
  std::optional<Rat> area;          // fat only, decoration
  std::optional<Rat> moment;        // decoration

  bool is_extremal() const { return extremal != ExtremalMark::None; }
  bool is_fat() const { return kind == VertexKind::Fat; }
};

struct GraphEdge {
  std::string a;
  std::string b;
  long long k = 2;

  bool touches(std::string_view v) const { return a == v || b == v; }
  const std::string& other(std::string_view v) const { return a == v ? b : a; }
};

struct DullGraph {
  std::vector<Vertex> vertices;
  std::vector<GraphEdge> edges;

  std::optional<std::size_t> vertex_index(std::string_view id) const;
  const Vertex& vertex(std::string_view id) const;  // throws Error on unknown id
  std::vector<std::size_t> edges_at(std::string_view id) const;
  std::size_t degree(std::string_view id) const { return edges_at(id).size(); }
  std::optional<std::size_t> edge_between(std::string_view a, std::string_view b) const;
  std::vector<std::string> extremal_ids() const;
};

// An orientation: min/max labels on the two extremal vertices plus a head
// choice per edge (aligned with the graph's edge order). Valid orientations
// direct every edge so the minimum is never a head, the maximum never a
// tail, and non-extremal vertices are head/tail of at most one edge each.
struct Orientation {
  std::string min_vertex;
  std::string max_vertex;
  std::vector<std::string> head;  // head[e] is an endpoint id of edges[e]

  bool operator==(const Orientation&) const = default;
};

// One connected component, walked end to end; edges[i] joins vertices[i]
// and vertices[i+1]. Cycles never appear in valid graphs but are detected
// during validation.
struct PathComponent {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  bool is_cycle = false;
};

std::vector<PathComponent> path_components(const DullGraph& g);

// A connected component containing neither extremal vertex. A free point is
// the trivial chain with one vertex and no edges.
struct FreeChain {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;

  bool is_free_point() const { return edges.empty(); }
  std::vector<long long> labels(const DullGraph& g) const;
  std::vector<std::string> vertex_ids(const DullGraph& g) const;
};

ValidationReport validate_dull(const DullGraph& g);
void require_valid_dull(const DullGraph& g);  // throws Error listing violations

// Throws Error on structural mismatch (unknown ids, direction list not
// matching the edge set); reports orientation-invariant violations.
ValidationReport validate_orientation(const DullGraph& g, const Orientation& o);
void require_valid_orientation(const DullGraph& g, const Orientation& o);

ValidationReport validate_decorated(const DullGraph& d);
void require_valid_decorated(const DullGraph& d);

// Strips moment values and areas from a valid decorated graph.
DullGraph dull_of(const DullGraph& decorated);

// Orients a valid decorated graph by its moment values: min/max at the
// extremal moment values, each edge directed toward the larger value.
// Throws Error on ties (degenerate input).
Orientation induced_orientation(const DullGraph& decorated);

// Isotropy weights at a thin vertex. Non-extremal: (+outgoing label or +1,
// -incoming label or -1). Minimum: both positive (edge labels padded with
// 1), maximum: both negative; magnitudes descending. Throws on fat vertices.
std::pair<long long, long long> weights_at(const DullGraph& g, const Orientation& o,
                                           std::string_view v);

// All free chains, each in a deterministic end-to-end order; free points
// are included as trivial chains.
std::vector<FreeChain> free_chains(const DullGraph& g);

// Finds the free chain containing the given vertex, in the same canonical
// order used by free_chains. Throws if the vertex is not on a free chain.
FreeChain free_chain_containing(const DullGraph& g, std::string_view v);

// Deterministic total encoding of the labeled graph: per component the
// lexicographically smaller of the two end-to-end label walks, components
// sorted. Two valid graphs have equal keys exactly when they are isomorphic
// as labeled graphs. Vertex ids never enter the encoding.
struct CanonicalKey {
  std::vector<std::vector<long long>> components;

  auto operator<=>(const CanonicalKey&) const = default;
  std::string to_string() const;
};

CanonicalKey canonical_key(const DullGraph& g);

struct Isomorphism {
  std::map<std::string, std::string> vertex_map;
};

// Explicit label-respecting bijection, or nullopt. Agrees with
// canonical_key equality.
std::optional<Isomorphism> find_isomorphism(const DullGraph& g1, const DullGraph& g2);

}  // namespace hamgraph
