#include "hamgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hamgraph {

std::optional<std::size_t> DullGraph::vertex_index(std::string_view id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return i;
  }
  return std::nullopt;
}

const Vertex& DullGraph::vertex(std::string_view id) const {
  const auto i = vertex_index(id);
  if (!i) throw Error("unknown vertex id '" + std::string(id) + "'");
  return vertices[*i];
}

std::vector<std::size_t> DullGraph::edges_at(std::string_view id) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].touches(id)) out.push_back(e);
  }
  return out;
}

std::optional<std::size_t> DullGraph::edge_between(std::string_view a, std::string_view b) const {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if ((edges[e].a == a && edges[e].b == b) || (edges[e].a == b && edges[e].b == a)) {
      return e;
    }
  }
  return std::nullopt;
}

std::vector<std::string> DullGraph::extremal_ids() const {
  std::vector<std::string> out;
  for (const auto& v : vertices) {
    if (v.is_extremal()) out.push_back(v.id);
  }
  return out;
}

namespace {

bool structurally_sound(const DullGraph& g) {
  std::set<std::string_view> ids;
  for (const auto& v : g.vertices) {
    if (v.id.empty() || !ids.insert(v.id).second) return false;
  }
  std::set<std::pair<std::string_view, std::string_view>> pairs;
  for (const auto& e : g.edges) {
    if (!ids.count(e.a) || !ids.count(e.b) || e.a == e.b) return false;
    auto key = std::minmax(std::string_view(e.a), std::string_view(e.b));
    if (!pairs.insert(key).second) return false;
  }
  for (const auto& v : g.vertices) {
    if (g.degree(v.id) > 2) return false;
  }
  return true;
}

}  // namespace

std::vector<PathComponent> path_components(const DullGraph& g) {
  if (!structurally_sound(g)) {
    throw Error("path decomposition requires a structurally sound graph "
                "(unique ids, simple edges, degrees <= 2)");
  }
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);  // edge indices per vertex
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    adj[*g.vertex_index(g.edges[e].a)].push_back(e);
    adj[*g.vertex_index(g.edges[e].b)].push_back(e);
  }

  std::vector<bool> seen(n, false);
  std::vector<PathComponent> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // Collect the component.
    std::vector<std::size_t> stack{start};
    std::vector<std::size_t> comp;
    seen[start] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const std::size_t e : adj[v]) {
        const std::size_t w = *g.vertex_index(g.edges[e].other(g.vertices[v].id));
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::size_t edge_count = 0;
    for (const std::size_t v : comp) edge_count += adj[v].size();
    edge_count /= 2;

    PathComponent pc;
    pc.is_cycle = (edge_count == comp.size());
    // Walk end to end (or around the cycle).
    std::size_t walk_start = comp.front();
    if (!pc.is_cycle) {
      for (const std::size_t v : comp) {
        if (adj[v].size() <= 1) {
          walk_start = v;
          break;
        }
      }
    }
    std::size_t cur = walk_start;
    std::optional<std::size_t> prev_edge;
    pc.vertices.push_back(cur);
    while (true) {
      std::optional<std::size_t> next;
      for (const std::size_t e : adj[cur]) {
        if (!prev_edge || e != *prev_edge) {
          next = e;
          break;
        }
      }
      if (!next) break;
      const std::size_t w = *g.vertex_index(g.edges[*next].other(g.vertices[cur].id));
      pc.edges.push_back(*next);
      if (w == walk_start) break;  // closed the cycle
      pc.vertices.push_back(w);
      prev_edge = next;
      cur = w;
    }
    out.push_back(std::move(pc));
  }
  return out;
}

std::vector<long long> FreeChain::labels(const DullGraph& g) const {
  std::vector<long long> out;
  out.reserve(edges.size());
  for (const std::size_t e : edges) out.push_back(g.edges[e].k);
  return out;
}

std::vector<std::string> FreeChain::vertex_ids(const DullGraph& g) const {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (const std::size_t v : vertices) out.push_back(g.vertices[v].id);
  return out;
}

namespace {

// Frozen label order for canonical encodings: vertices compare as tuples
// (kind, extremal flag, genus, self-intersection) with Thin < Fat, edges by
// their label k. Vertex ids never appear.
void append_vertex_tokens(std::vector<long long>& enc, const Vertex& v) {
  enc.push_back(v.kind == VertexKind::Fat ? 1 : 0);
  enc.push_back(v.is_extremal() ? 1 : 0);
  enc.push_back(v.kind == VertexKind::Fat ? v.genus : 0);
  enc.push_back(v.kind == VertexKind::Fat ? v.self_intersection : 0);
}

std::vector<long long> encode_walk(const DullGraph& g, const std::vector<std::size_t>& vs,
                                   const std::vector<std::size_t>& es, bool reversed) {
  std::vector<long long> enc;
  enc.reserve(vs.size() * 5);
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t vi = reversed ? vs[n - 1 - i] : vs[i];
    append_vertex_tokens(enc, g.vertices[vi]);
    if (i + 1 < n) {
      const std::size_t ei = reversed ? es[es.size() - 1 - i] : es[i];
      enc.push_back(g.edges[ei].k);
    }
  }
  return enc;
}

struct EncodedComponent {
  std::vector<long long> encoding;      // min of the two walk encodings
  std::vector<std::size_t> vertices;    // walk realizing the encoding
  std::vector<std::size_t> edges;
};

EncodedComponent encode_component(const DullGraph& g, const PathComponent& pc) {
  EncodedComponent out;
  auto fwd = encode_walk(g, pc.vertices, pc.edges, false);
  auto rev = encode_walk(g, pc.vertices, pc.edges, true);
  bool use_rev = rev < fwd;
  if (fwd == rev) {
    // Palindromic labels: break the tie by vertex id so listings stay stable.
    use_rev = g.vertices[pc.vertices.back()].id < g.vertices[pc.vertices.front()].id;
  }
  out.encoding = use_rev ? std::move(rev) : std::move(fwd);
  out.vertices = pc.vertices;
  out.edges = pc.edges;
  if (use_rev) {
    std::reverse(out.vertices.begin(), out.vertices.end());
    std::reverse(out.edges.begin(), out.edges.end());
  }
  return out;
}

bool component_is_free(const DullGraph& g, const PathComponent& pc) {
  for (const std::size_t v : pc.vertices) {
    if (g.vertices[v].is_extremal()) return false;
  }
  return true;
}

void check_chain_divisibility(const DullGraph& g, const PathComponent& pc,
                              ValidationReport& report) {
  // Labels m_1..m_n of a free chain must satisfy m_j | m_{j-1} + m_{j+1}
  // with the boundary convention m_0 = m_{n+1} = 1.
  const std::size_t n = pc.edges.size();
  for (std::size_t j = 0; j < n; ++j) {
    const long long m = g.edges[pc.edges[j]].k;
    const long long below = (j == 0) ? 1 : g.edges[pc.edges[j - 1]].k;
    const long long above = (j + 1 == n) ? 1 : g.edges[pc.edges[j + 1]].k;
    if ((below + above) % m != 0) {
      report.add("chain-divisibility",
                 "free-chain sphere " + g.edges[pc.edges[j]].a + "-" + g.edges[pc.edges[j]].b +
                     " (k=" + std::to_string(m) + ") does not divide neighbor sum " +
                     std::to_string(below + above));
    }
  }
}

}  // namespace

ValidationReport validate_dull(const DullGraph& g) {
  ValidationReport report;

  std::set<std::string> ids;
  for (const auto& v : g.vertices) {
    if (v.id.empty()) report.add("empty-id", "vertex with empty id");
    if (!ids.insert(v.id).second) report.add("duplicate-id", "duplicate vertex id '" + v.id + "'");
  }

  std::set<std::pair<std::string, std::string>> seen_pairs;
  for (const auto& e : g.edges) {
    const std::string name = e.a + "-" + e.b;
    if (!ids.count(e.a) || !ids.count(e.b)) {
      report.add("unknown-endpoint", "edge " + name + " references unknown vertex");
      continue;
    }
    if (e.a == e.b) report.add("self-loop", "edge " + name + " is a loop");
    if (e.k < 2) report.add("edge-label", "edge " + name + " has label k < 2");
    auto key = std::minmax(e.a, e.b);
    if (!seen_pairs.insert(key).second) {
      report.add("parallel-edges", "more than one edge between " + key.first + " and " + key.second);
    }
    for (const auto* end : {&e.a, &e.b}) {
      const auto idx = g.vertex_index(*end);
      if (idx && g.vertices[*idx].is_fat()) {
        report.add("fat-endpoint", "edge " + name + " touches fat vertex '" + *end + "'");
      }
    }
  }

  std::size_t extremal = 0;
  std::size_t fat = 0;
  std::vector<const Vertex*> fat_vertices;
  for (const auto& v : g.vertices) {
    if (v.is_extremal()) ++extremal;
    if (v.is_fat()) {
      ++fat;
      fat_vertices.push_back(&v);
      if (!v.is_extremal()) {
        report.add("fat-not-extremal", "fat vertex '" + v.id + "' is not marked extremal");
      }
      if (v.genus < 0) {
        report.add("genus-negative", "fat vertex '" + v.id + "' has negative genus");
      }
      if (v.area && *v.area <= Rat(0)) {
        report.add("area-nonpositive", "fat vertex '" + v.id + "' has non-positive area");
      }
      if (g.degree(v.id) > 0) {
        report.add("fat-degree", "fat vertex '" + v.id + "' has an adjacent edge");
      }
    } else {
      if (g.degree(v.id) > 2) {
        report.add("vertex-degree", "vertex '" + v.id + "' has degree > 2");
      }
    }
  }
  if (extremal != 2) {
    report.add("extremal-count", "graph must have exactly two extremal fixed components, found " +
                                     std::to_string(extremal));
  }
  if (fat > 2) {
    report.add("fat-count", "more than two fat vertices");
  }
  bool positive_genus = false;
  for (const auto* v : fat_vertices) positive_genus = positive_genus || v->genus > 0;
  if (positive_genus) {
    if (fat_vertices.size() != 2 || fat_vertices[0]->genus != fat_vertices[1]->genus) {
      report.add("genus-structure",
                 "positive genus requires exactly two fat vertices of equal genus");
    }
  }

  // Coprimality of the two edge labels at any thin vertex (this is the
  // gcd-1 condition on the derived weight pair; vertices with at most one
  // edge always pass).
  for (const auto& v : g.vertices) {
    if (v.is_fat()) continue;
    const auto at = g.edges_at(v.id);
    if (at.size() == 2) {
      const long long k1 = g.edges[at[0]].k;
      const long long k2 = g.edges[at[1]].k;
      if (std::gcd(k1, k2) != 1) {
        report.add("labels-not-coprime",
                   "adjacent labels not coprime at vertex '" + v.id + "' (" +
                       std::to_string(k1) + ", " + std::to_string(k2) + ")");
      }
    }
  }

  if (!structurally_sound(g)) {
    if (report.ok()) report.add("structure", "graph is not structurally sound");
    return report;  // path-based checks need sound structure
  }

  for (const auto& pc : path_components(g)) {
    if (pc.is_cycle) {
      report.add("component-not-path", "component not a simple path (cycle through '" +
                                           g.vertices[pc.vertices.front()].id + "')");
      continue;
    }
    if (component_is_free(g, pc)) {
      check_chain_divisibility(g, pc, report);
    }
  }

  return report;
}

void require_valid_dull(const DullGraph& g) {
  const auto report = validate_dull(g);
  if (!report.ok()) throw Error("invalid dull graph:\n" + report.summary());
}

ValidationReport validate_orientation(const DullGraph& g, const Orientation& o) {
  if (!g.vertex_index(o.min_vertex)) throw Error("orientation min references unknown vertex '" + o.min_vertex + "'");
  if (!g.vertex_index(o.max_vertex)) throw Error("orientation max references unknown vertex '" + o.max_vertex + "'");
  if (o.head.size() != g.edges.size()) {
    throw Error("orientation directs " + std::to_string(o.head.size()) + " edges, graph has " +
                std::to_string(g.edges.size()));
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (o.head[e] != g.edges[e].a && o.head[e] != g.edges[e].b) {
      throw Error("direction head '" + o.head[e] + "' is not an endpoint of edge " +
                  g.edges[e].a + "-" + g.edges[e].b);
    }
  }

  ValidationReport report;
  if (o.min_vertex == o.max_vertex) {
    report.add("min-max-equal", "minimum and maximum assigned to the same vertex");
  }
  for (const auto* id : {&o.min_vertex, &o.max_vertex}) {
    if (!g.vertex(*id).is_extremal()) {
      report.add("not-extremal", "vertex '" + *id + "' carries a min/max label but is not extremal");
    }
  }

  std::map<std::string, int> head_count, tail_count;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::string& head = o.head[e];
    const std::string& tail = g.edges[e].other(head);
    ++head_count[head];
    ++tail_count[tail];
  }
  if (head_count[o.min_vertex] > 0) {
    report.add("min-is-head", "the minimum is the head of an edge");
  }
  if (tail_count[o.max_vertex] > 0) {
    report.add("max-is-tail", "the maximum is the tail of an edge");
  }
  for (const auto& v : g.vertices) {
    if (v.is_extremal()) continue;
    if (head_count[v.id] > 1) {
      report.add("head-degree", "vertex '" + v.id + "' is the head of more than one edge");
    }
    if (tail_count[v.id] > 1) {
      report.add("tail-degree", "vertex '" + v.id + "' is the tail of more than one edge");
    }
  }
  return report;
}

void require_valid_orientation(const DullGraph& g, const Orientation& o) {
  const auto report = validate_orientation(g, o);
  if (!report.ok()) throw Error("invalid orientation:\n" + report.summary());
}

ValidationReport validate_decorated(const DullGraph& d) {
  ValidationReport report = validate_dull(d);

  bool moments_complete = true;
  for (const auto& v : d.vertices) {
    if (!v.moment) {
      report.add("missing-moment", "vertex '" + v.id + "' has no moment value");
      moments_complete = false;
    }
    if (v.is_fat() && !v.area) {
      report.add("missing-area", "fat vertex '" + v.id + "' has no area");
    }
    if (!v.is_fat() && v.area) {
      report.add("thin-area", "thin vertex '" + v.id + "' carries an area");
    }
  }
  if (!moments_complete || !report.ok()) return report;

  const auto extremals = d.extremal_ids();
  const Rat m0 = *d.vertex(extremals[0]).moment;
  const Rat m1 = *d.vertex(extremals[1]).moment;
  if (m0 == m1) {
    report.add("moment-extremal-tie", "extremal vertices share the moment value " + rat_to_string(m0));
    return report;
  }
  const Rat lo = std::min(m0, m1);
  const Rat hi = std::max(m0, m1);
  const std::string& lo_id = (m0 < m1) ? extremals[0] : extremals[1];
  const std::string& hi_id = (m0 < m1) ? extremals[1] : extremals[0];
  for (const auto& v : d.vertices) {
    if (v.is_extremal()) {
      // Min/Max marks, when present, must agree with the moment values.
      if ((v.extremal == ExtremalMark::Min && v.id != lo_id) ||
          (v.extremal == ExtremalMark::Max && v.id != hi_id)) {
        report.add("mark-moment-mismatch",
                   "vertex '" + v.id + "' carries a min/max mark contradicting its moment value");
      }
      continue;
    }
    if (!(*v.moment > lo && *v.moment < hi)) {
      report.add("moment-not-interior",
                 "vertex '" + v.id + "' has moment outside the open extremal range");
    }
  }
  for (const auto& e : d.edges) {
    if (*d.vertex(e.a).moment == *d.vertex(e.b).moment) {
      report.add("moment-tie-edge", "edge " + e.a + "-" + e.b + " joins equal moment values");
    }
  }
  if (!report.ok()) return report;

  const auto orientation_report = validate_orientation(d, induced_orientation(d));
  for (const auto& v : orientation_report.violations) {
    report.add("induced-orientation", v.code + ": " + v.detail);
  }
  return report;
}

void require_valid_decorated(const DullGraph& d) {
  const auto report = validate_decorated(d);
  if (!report.ok()) throw Error("invalid decorated graph:\n" + report.summary());
}

DullGraph dull_of(const DullGraph& decorated) {
  require_valid_decorated(decorated);
  DullGraph out = decorated;
  for (auto& v : out.vertices) {
    v.moment.reset();
    v.area.reset();
    if (v.extremal == ExtremalMark::Min || v.extremal == ExtremalMark::Max) {
      v.extremal = ExtremalMark::Extremal;
    }
  }
  return out;
}

Orientation induced_orientation(const DullGraph& decorated) {
  const auto extremals = decorated.extremal_ids();
  if (extremals.size() != 2) {
    throw Error("induced orientation requires exactly two extremal vertices");
  }
  for (const auto& v : decorated.vertices) {
    if (!v.moment) throw Error("vertex '" + v.id + "' has no moment value");
  }
  const Rat m0 = *decorated.vertex(extremals[0]).moment;
  const Rat m1 = *decorated.vertex(extremals[1]).moment;
  if (m0 == m1) throw Error("degenerate input: extremal moment values tie");

  Orientation o;
  o.min_vertex = (m0 < m1) ? extremals[0] : extremals[1];
  o.max_vertex = (m0 < m1) ? extremals[1] : extremals[0];
  o.head.reserve(decorated.edges.size());
  for (const auto& e : decorated.edges) {
    const Rat ma = *decorated.vertex(e.a).moment;
    const Rat mb = *decorated.vertex(e.b).moment;
    if (ma == mb) throw Error("degenerate input: edge " + e.a + "-" + e.b + " has equal moment values");
    o.head.push_back(ma < mb ? e.b : e.a);
  }
  return o;
}

std::pair<long long, long long> weights_at(const DullGraph& g, const Orientation& o,
                                           std::string_view v) {
  const Vertex& vx = g.vertex(v);
  if (vx.is_fat()) throw Error("weights_at is undefined on fat vertex '" + vx.id + "'");

  const auto at = g.edges_at(v);
  if (vx.id == o.min_vertex || vx.id == o.max_vertex) {
    long long k1 = at.size() >= 1 ? g.edges[at[0]].k : 1;
    long long k2 = at.size() >= 2 ? g.edges[at[1]].k : 1;
    if (k1 < k2) std::swap(k1, k2);
    if (vx.id == o.min_vertex) return {k1, k2};
    return {-k1, -k2};
  }

  long long outgoing = 1, incoming = 1;
  for (const std::size_t e : at) {
    if (o.head[e] == vx.id) {
      incoming = g.edges[e].k;
    } else {
      outgoing = g.edges[e].k;
    }
  }
  return {outgoing, -incoming};
}

std::vector<FreeChain> free_chains(const DullGraph& g) {
  std::vector<FreeChain> out;
  for (const auto& pc : path_components(g)) {
    if (pc.is_cycle || !component_is_free(g, pc)) continue;
    const auto enc = encode_component(g, pc);
    out.push_back(FreeChain{enc.vertices, enc.edges});
  }
  return out;
}

FreeChain free_chain_containing(const DullGraph& g, std::string_view v) {
  const auto idx = g.vertex_index(v);
  if (!idx) throw Error("unknown vertex id '" + std::string(v) + "'");
  for (const auto& chain : free_chains(g)) {
    if (std::find(chain.vertices.begin(), chain.vertices.end(), *idx) != chain.vertices.end()) {
      return chain;
    }
  }
  throw Error("vertex '" + std::string(v) + "' is not on a free chain");
}

CanonicalKey canonical_key(const DullGraph& g) {
  CanonicalKey key;
  for (const auto& pc : path_components(g)) {
    if (pc.is_cycle) throw Error("canonical key requires path components");
    key.components.push_back(encode_component(g, pc).encoding);
  }
  std::sort(key.components.begin(), key.components.end());
  return key;
}

std::string CanonicalKey::to_string() const {
  std::string out;
  for (const auto& comp : components) {
    if (!out.empty()) out += " ; ";
    // Tokens alternate: 4 per vertex, 1 per edge.
    std::size_t i = 0;
    bool vertex_next = true;
    while (i < comp.size()) {
      if (vertex_next) {
        const bool is_fat = comp[i] == 1;
        const bool ext = comp[i + 1] == 1;
        if (is_fat) {
          out += "F(g=" + std::to_string(comp[i + 2]) + ",e=" + std::to_string(comp[i + 3]) + ")";
        } else {
          out += ext ? "T*" : "T";
        }
        i += 4;
      } else {
        out += " -" + std::to_string(comp[i]) + "- ";
        i += 1;
      }
      vertex_next = !vertex_next;
    }
  }
  return out.empty() ? "(empty)" : out;
}

std::optional<Isomorphism> find_isomorphism(const DullGraph& g1, const DullGraph& g2) {
  require_valid_dull(g1);
  require_valid_dull(g2);

  std::vector<EncodedComponent> c1, c2;
  for (const auto& pc : path_components(g1)) c1.push_back(encode_component(g1, pc));
  for (const auto& pc : path_components(g2)) c2.push_back(encode_component(g2, pc));
  if (c1.size() != c2.size()) return std::nullopt;

  auto by_encoding = [](const EncodedComponent& a, const EncodedComponent& b) {
    return a.encoding < b.encoding;
  };
  std::sort(c1.begin(), c1.end(), by_encoding);
  std::sort(c2.begin(), c2.end(), by_encoding);

  Isomorphism iso;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c1[i].encoding != c2[i].encoding) return std::nullopt;
    for (std::size_t p = 0; p < c1[i].vertices.size(); ++p) {
      iso.vertex_map[g1.vertices[c1[i].vertices[p]].id] = g2.vertices[c2[i].vertices[p]].id;
    }
  }
  return iso;
}

}  // namespace hamgraph
