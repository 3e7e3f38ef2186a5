#pragma once

// Brute-force oracles and deterministic graph families shared by the unit
// and acceptance suites. Everything here is independent of the library's
// canonical-key / enumeration code paths it is used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hamgraph/graph.hpp"
#include "hamgraph/moves.hpp"

namespace oracles {

using hamgraph::DullGraph;
using hamgraph::ExtremalMark;
using hamgraph::FreeChain;
using hamgraph::GraphEdge;
using hamgraph::Orientation;
using hamgraph::Vertex;
using hamgraph::VertexKind;

inline Vertex thin(std::string id, ExtremalMark m = ExtremalMark::None) {
  Vertex v;
  v.id = std::move(id);
  v.kind = VertexKind::Thin;
  v.extremal = m;
  return v;
}

inline Vertex fat(std::string id, long long genus, long long e) {
  Vertex v;
  v.id = std::move(id);
  v.kind = VertexKind::Fat;
  v.extremal = ExtremalMark::Extremal;
  v.genus = genus;
  v.self_intersection = e;
  return v;
}

// Two extremal thin singletons plus one free chain with the given labels.
inline DullGraph ambient_with_chain(const std::vector<long long>& labels) {
  DullGraph g;
  g.vertices.push_back(thin("lo", ExtremalMark::Extremal));
  g.vertices.push_back(thin("hi", ExtremalMark::Extremal));
  for (std::size_t i = 0; i <= labels.size(); ++i) {
    g.vertices.push_back(thin("u" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    g.edges.push_back({"u" + std::to_string(i), "u" + std::to_string(i + 1), labels[i]});
  }
  return g;
}

// ---------------------------------------------------------------------------
// Brute-force labeled-graph isomorphism (backtracking over vertex bijections)
// ---------------------------------------------------------------------------

namespace detail {

inline std::tuple<int, int, long long, long long, std::size_t> vertex_signature(
    const DullGraph& g, const Vertex& v) {
  return {v.kind == VertexKind::Fat ? 1 : 0, v.is_extremal() ? 1 : 0,
          v.kind == VertexKind::Fat ? v.genus : 0,
          v.kind == VertexKind::Fat ? v.self_intersection : 0, g.degree(v.id)};
}

inline bool extend(const DullGraph& g1, const DullGraph& g2, std::vector<int>& map,
                   std::vector<bool>& used, std::size_t next) {
  const std::size_t n = g1.vertices.size();
  if (next == n) return true;
  const auto sig1 = vertex_signature(g1, g1.vertices[next]);
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (vertex_signature(g2, g2.vertices[cand]) != sig1) continue;
    // Edges between `next` and already-assigned vertices must match labels.
    bool ok = true;
    for (const auto& e : g1.edges) {
      if (!e.touches(g1.vertices[next].id)) continue;
      const std::string& other = e.other(g1.vertices[next].id);
      const auto oi = g1.vertex_index(other);
      if (*oi > next || map[*oi] < 0) continue;
      const auto target = g2.edge_between(g2.vertices[cand].id,
                                          g2.vertices[static_cast<std::size_t>(map[*oi])].id);
      if (!target || g2.edges[*target].k != e.k) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[next] = static_cast<int>(cand);
    used[cand] = true;
    if (extend(g1, g2, map, used, next + 1)) return true;
    map[next] = -1;
    used[cand] = false;
  }
  return false;
}

}  // namespace detail

inline bool brute_force_isomorphic(const DullGraph& g1, const DullGraph& g2) {
  if (g1.vertices.size() != g2.vertices.size() || g1.edges.size() != g2.edges.size()) {
    return false;
  }
  // Cheap multiset prechecks keep the quadratic pair sweep fast.
  auto signatures = [](const DullGraph& g) {
    std::vector<std::tuple<int, int, long long, long long, std::size_t>> out;
    for (const auto& v : g.vertices) out.push_back(detail::vertex_signature(g, v));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (signatures(g1) != signatures(g2)) return false;
  auto edge_labels = [](const DullGraph& g) {
    std::vector<long long> out;
    for (const auto& e : g.edges) out.push_back(e.k);
    std::sort(out.begin(), out.end());
    return out;
  };
  if (edge_labels(g1) != edge_labels(g2)) return false;

  std::vector<int> map(g1.vertices.size(), -1);
  std::vector<bool> used(g1.vertices.size(), false);
  return detail::extend(g1, g2, map, used, 0);
}

// ---------------------------------------------------------------------------
// Brute-force orientation enumeration (all min/max choices x all directions)
// ---------------------------------------------------------------------------

inline std::vector<Orientation> brute_force_orientations(const DullGraph& g) {
  std::vector<Orientation> out;
  const auto extremals = g.extremal_ids();
  if (extremals.size() != 2) return out;
  std::vector<std::pair<std::string, std::string>> assignments = {
      {extremals[0], extremals[1]}, {extremals[1], extremals[0]}};
  std::sort(assignments.begin(), assignments.end());
  for (const auto& [mn, mx] : assignments) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << g.edges.size()); ++mask) {
      Orientation o;
      o.min_vertex = mn;
      o.max_vertex = mx;
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        o.head.push_back(((mask >> e) & 1) ? g.edges[e].b : g.edges[e].a);
      }
      if (hamgraph::validate_orientation(g, o).ok()) out.push_back(std::move(o));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive valid free-chain label sequences (coprime + divisibility)
// ---------------------------------------------------------------------------

namespace detail {

inline void extend_chain(std::vector<long long>& prefix, long long max_label,
                         std::size_t max_edges, std::vector<std::vector<long long>>& out) {
  const long long last = prefix.back();
  const long long before = prefix.size() >= 2 ? prefix[prefix.size() - 2] : 1;
  if ((before + 1) % last == 0) out.push_back(prefix);
  if (prefix.size() == max_edges) return;
  // The next label must satisfy last | before + next and be coprime to last.
  for (long long next = ((-before) % last + last) % last; next <= max_label; next += last) {
    if (next < 2) continue;
    if (std::gcd(last, next) != 1) continue;
    prefix.push_back(next);
    extend_chain(prefix, max_label, max_edges, out);
    prefix.pop_back();
  }
}

}  // namespace detail

// All valid nonempty free-chain label sequences with labels <= max_label and
// at most max_edges edges.
inline std::vector<std::vector<long long>> valid_chains(long long max_label,
                                                        std::size_t max_edges) {
  std::vector<std::vector<long long>> out;
  for (long long first = 2; first <= max_label; ++first) {
    std::vector<long long> prefix{first};
    detail::extend_chain(prefix, max_label, max_edges, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic family of valid dull graphs (<= 8 vertices, labels <= 7)
// ---------------------------------------------------------------------------

struct ComponentSpec {
  // One path component: vertex marks (true = extremal) and edge labels.
  std::vector<bool> extremal;
  std::vector<long long> labels;
  bool is_fat = false;
  long long genus = 0;
  long long self_intersection = 0;

  std::size_t vertex_count() const { return is_fat ? 1 : extremal.size(); }
  std::size_t extremal_count() const {
    if (is_fat) return 1;
    std::size_t n = 0;
    for (const bool b : extremal) n += b;
    return n;
  }
};

namespace detail {

inline ComponentSpec fat_spec(long long genus, long long e) {
  ComponentSpec c;
  c.is_fat = true;
  c.genus = genus;
  c.self_intersection = e;
  return c;
}

inline ComponentSpec path_spec(std::vector<bool> extremal, std::vector<long long> labels) {
  ComponentSpec c;
  c.extremal = std::move(extremal);
  c.labels = std::move(labels);
  return c;
}

inline void append_component(DullGraph& g, const ComponentSpec& c, std::size_t index) {
  const std::string base = "c" + std::to_string(index) + "v";
  if (c.is_fat) {
    g.vertices.push_back(fat(base + "0", c.genus, c.self_intersection));
    return;
  }
  for (std::size_t i = 0; i < c.extremal.size(); ++i) {
    g.vertices.push_back(
        thin(base + std::to_string(i),
             c.extremal[i] ? ExtremalMark::Extremal : ExtremalMark::None));
  }
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    g.edges.push_back({base + std::to_string(i), base + std::to_string(i + 1), c.labels[i]});
  }
}

}  // namespace detail

// All valid dull graphs assembled from a frozen component universe:
// extremal parts of at most 3 vertices with labels <= 7, fat surfaces with
// genus <= 2, and up to two valid free chains; total size <= max_vertices.
inline std::vector<DullGraph> graph_family(std::size_t max_vertices = 8) {
  using detail::fat_spec;
  using detail::path_spec;

  const std::vector<std::pair<long long, long long>> coprime_pairs = [] {
    std::vector<std::pair<long long, long long>> out;
    for (long long k1 = 2; k1 <= 7; ++k1) {
      for (long long k2 = 2; k2 <= 7; ++k2) {
        if (std::gcd(k1, k2) == 1) out.push_back({k1, k2});
      }
    }
    return out;
  }();

  // Pieces that carry exactly one extremal vertex.
  std::vector<ComponentSpec> one_extremal;
  one_extremal.push_back(path_spec({true}, {}));
  for (long long k = 2; k <= 7; ++k) {
    one_extremal.push_back(path_spec({true, false}, {k}));
  }
  for (const auto& [k1, k2] : {std::pair<long long, long long>{2, 3}, {3, 2}, {2, 5}, {5, 2},
                               {3, 4}, {6, 7}}) {
    one_extremal.push_back(path_spec({true, false, false}, {k1, k2}));
  }
  for (const auto& [k1, k2] : {std::pair<long long, long long>{2, 3}, {2, 5}, {5, 6}}) {
    one_extremal.push_back(path_spec({false, true, false}, {k1, k2}));
  }

  // Pieces that carry both extremal vertices.
  std::vector<ComponentSpec> two_extremal;
  for (long long k = 2; k <= 7; ++k) {
    two_extremal.push_back(path_spec({true, true}, {k}));
  }
  for (const auto& [k1, k2] : coprime_pairs) {
    if (k1 <= k2) two_extremal.push_back(path_spec({true, false, true}, {k1, k2}));
    two_extremal.push_back(path_spec({true, true, false}, {k1, k2}));
  }

  const std::vector<std::pair<long long, long long>> fat_labels = {
      {0, -1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}};

  // Extremal configurations: fat/fat (equal positive genus), fat(genus 0) +
  // thin piece, one both-extremal piece, or two one-extremal pieces.
  std::vector<std::vector<ComponentSpec>> configs;
  for (std::size_t i = 0; i < fat_labels.size(); ++i) {
    for (std::size_t j = i; j < fat_labels.size(); ++j) {
      const auto [g1, e1] = fat_labels[i];
      const auto [g2, e2] = fat_labels[j];
      if ((g1 > 0 || g2 > 0) && g1 != g2) continue;
      configs.push_back({fat_spec(g1, e1), fat_spec(g2, e2)});
    }
  }
  for (const auto& [genus, e] : fat_labels) {
    if (genus != 0) continue;
    for (const auto& piece : one_extremal) {
      configs.push_back({fat_spec(genus, e), piece});
    }
  }
  for (const auto& piece : two_extremal) {
    configs.push_back({piece});
  }
  for (std::size_t i = 0; i < one_extremal.size(); ++i) {
    for (std::size_t j = i; j < one_extremal.size(); ++j) {
      if (one_extremal[i].vertex_count() > 2 || one_extremal[j].vertex_count() > 2) continue;
      configs.push_back({one_extremal[i], one_extremal[j]});
    }
  }

  // Free chains: the valid label sequences up to two edges, plus the point.
  std::vector<ComponentSpec> chains;
  chains.push_back(path_spec({false}, {}));
  for (const auto& labels : valid_chains(7, 2)) {
    std::vector<bool> marks(labels.size() + 1, false);
    chains.push_back(path_spec(marks, labels));
  }

  std::vector<DullGraph> family;
  auto emit = [&family, max_vertices](const std::vector<ComponentSpec>& parts) {
    std::size_t total = 0;
    for (const auto& part : parts) total += part.vertex_count();
    if (total > max_vertices) return;
    DullGraph g;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      detail::append_component(g, parts[i], i);
    }
    if (!hamgraph::validate_dull(g).ok()) return;
    family.push_back(std::move(g));

    // A relabeled, reordered copy: same graph up to isomorphism.
    DullGraph copy;
    for (std::size_t i = parts.size(); i-- > 0;) {
      detail::append_component(copy, parts[i], parts.size() + i + 17);
    }
    std::reverse(copy.vertices.begin(), copy.vertices.end());
    std::reverse(copy.edges.begin(), copy.edges.end());
    family.push_back(std::move(copy));
  };

  for (const auto& config : configs) {
    emit(config);
    for (std::size_t i = 0; i < chains.size(); ++i) {
      auto with_one = config;
      with_one.push_back(chains[i]);
      emit(with_one);
      for (std::size_t j = i; j < chains.size(); ++j) {
        auto with_two = with_one;
        with_two.push_back(chains[j]);
        emit(with_two);
      }
    }
  }
  return family;
}

}  // namespace oracles
