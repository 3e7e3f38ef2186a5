#include "hamgraph/moves.hpp"

#include <algorithm>
#include <set>

#include "hamgraph/localization.hpp"

namespace hamgraph {

namespace {

std::string fresh_id(const DullGraph& g, const std::set<std::string>& reserved) {
  for (long long n = 1;; ++n) {
    std::string candidate = "v" + std::to_string(n);
    if (!g.vertex_index(candidate) && !reserved.count(candidate)) return candidate;
  }
}

// Checks that `chain` really is a free chain of g (same vertex set as the
// component of its first vertex, which contains no extremal vertex).
void require_free_chain(const DullGraph& g, const FreeChain& chain) {
  if (chain.vertices.empty()) throw Error("empty chain");
  const auto actual = free_chain_containing(g, g.vertices[chain.vertices.front()].id);
  auto sorted = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(actual.vertices) != sorted(chain.vertices)) {
    throw Error("vertex list is not a free chain of the graph");
  }
}

}  // namespace

FreeChain chain_bottom_to_top(const DullGraph& g, const Orientation& o, const FreeChain& chain) {
  if (chain.edges.empty()) return chain;
  FreeChain out = chain;
  // Valid orientations direct a free chain end to end, so the first edge
  // tells the story: walking order is upward exactly when its head is the
  // second vertex of the walk.
  const std::size_t e = chain.edges.front();
  const bool upward = o.head[e] == g.vertices[chain.vertices[1]].id;
  if (!upward) {
    std::reverse(out.vertices.begin(), out.vertices.end());
    std::reverse(out.edges.begin(), out.edges.end());
  }
  return out;
}

Orientation opposite(const DullGraph& g, const Orientation& o) {
  require_valid_orientation(g, o);
  Orientation out;
  out.min_vertex = o.max_vertex;
  out.max_vertex = o.min_vertex;
  out.head.reserve(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    out.head.push_back(g.edges[e].other(o.head[e]));
  }
  return out;
}

Orientation partial_flip(const DullGraph& g, const Orientation& o, const FreeChain& chain) {
  require_valid_orientation(g, o);
  require_free_chain(g, chain);
  if (chain.is_free_point()) {
    throw Error("partial flip undefined on trivial chains");
  }
  Orientation out = o;
  for (const std::size_t e : chain.edges) {
    out.head[e] = g.edges[e].other(o.head[e]);
  }
  return out;
}

std::vector<Orientation> enumerate_orientations(const DullGraph& g) {
  require_valid_dull(g);
  auto extremals = g.extremal_ids();
  std::sort(extremals.begin(), extremals.end());

  const auto comps = path_components(g);
  std::vector<const PathComponent*> chains;  // nontrivial free chains
  for (const auto& pc : comps) {
    bool free = true;
    for (const std::size_t v : pc.vertices) {
      free = free && !g.vertices[v].is_extremal();
    }
    if (free && !pc.edges.empty()) chains.push_back(&pc);
  }

  std::vector<Orientation> out;
  for (int pick = 0; pick < 2; ++pick) {
    Orientation o;
    o.min_vertex = extremals[pick];
    o.max_vertex = extremals[1 - pick];
    o.head.assign(g.edges.size(), std::string());

    // Directions in components touching an extremal vertex are forced:
    // away from the minimum and toward the maximum.
    for (const auto& pc : comps) {
      std::optional<std::size_t> min_pos, max_pos;
      for (std::size_t i = 0; i < pc.vertices.size(); ++i) {
        const auto& id = g.vertices[pc.vertices[i]].id;
        if (id == o.min_vertex) min_pos = i;
        if (id == o.max_vertex) max_pos = i;
      }
      if (!min_pos && !max_pos) continue;
      for (std::size_t t = 0; t < pc.edges.size(); ++t) {
        const bool forward = (!min_pos || t >= *min_pos) && (!max_pos || t < *max_pos);
        o.head[pc.edges[t]] = g.vertices[pc.vertices[forward ? t + 1 : t]].id;
      }
    }

    for (std::size_t mask = 0; mask < (std::size_t{1} << chains.size()); ++mask) {
      Orientation cand = o;
      for (std::size_t c = 0; c < chains.size(); ++c) {
        const bool up = (mask >> c) & 1;
        const auto& pc = *chains[c];
        for (std::size_t t = 0; t < pc.edges.size(); ++t) {
          cand.head[pc.edges[t]] = g.vertices[pc.vertices[up ? t + 1 : t]].id;
        }
      }
      out.push_back(std::move(cand));
    }
  }
  return out;
}

MoveScript orientation_path(const DullGraph& g, const Orientation& from, const Orientation& to) {
  require_valid_orientation(g, from);
  require_valid_orientation(g, to);

  MoveScript script;
  Orientation cur = from;
  if (cur.min_vertex != to.min_vertex) {
    script.push_back(Move{MoveKind::Opposite, {}, {}, std::nullopt, {}});
    cur = opposite(g, cur);
  }
  for (const auto& chain : free_chains(g)) {
    if (chain.is_free_point()) continue;
    const std::size_t e = chain.edges.front();
    if (cur.head[e] != to.head[e]) {
      Move move;
      move.kind = MoveKind::PartialFlip;
      move.chain = chain.vertex_ids(g);
      script.push_back(move);
      cur = partial_flip(g, cur, chain);
    }
  }
  if (!(cur == to)) {
    throw Error("internal: orientation path did not reach the target orientation");
  }
  return script;
}

Orientation apply_orientation_moves(const DullGraph& g, const Orientation& o,
                                    const MoveScript& script) {
  Orientation cur = o;
  for (const auto& move : script) {
    switch (move.kind) {
      case MoveKind::Opposite:
        cur = opposite(g, cur);
        break;
      case MoveKind::PartialFlip: {
        if (move.chain.empty()) throw Error("partial flip move without a chain");
        const auto chain = free_chain_containing(g, move.chain.front());
        std::set<std::string> expect(move.chain.begin(), move.chain.end());
        std::set<std::string> actual;
        for (const auto& id : chain.vertex_ids(g)) actual.insert(id);
        if (expect != actual) throw Error("partial flip move names a stale chain");
        cur = partial_flip(g, cur, chain);
        break;
      }
      default:
        throw Error("orientation replay cannot apply surgery moves");
    }
  }
  return cur;
}

std::size_t find_exceptional_edge(const std::vector<long long>& labels) {
  if (labels.empty()) throw Error("chain has no edges");
  std::size_t j = 0;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] > labels[j]) j = i;
  }
  const long long below = (j == 0) ? 1 : labels[j - 1];
  const long long above = (j + 1 == labels.size()) ? 1 : labels[j + 1];
  if (below + above != labels[j]) {
    throw Error("chain is not realizable: neighbor sum " + std::to_string(below + above) +
                " of maximal label " + std::to_string(labels[j]) + " is off");
  }
  return j;
}

SurgeryResult chain_blowdown(const DullGraph& g, const Orientation& o, std::string_view a,
                             std::string_view b) {
  require_valid_orientation(g, o);
  const auto edge_idx = g.edge_between(a, b);
  if (!edge_idx) throw Error("no edge between '" + std::string(a) + "' and '" + std::string(b) + "'");

  const auto chain = free_chain_containing(g, a);  // throws when not on a free chain
  (void)chain;

  const long long m = g.edges[*edge_idx].k;
  long long neighbor_sum = 0;
  for (const auto* endpoint : {&a, &b}) {
    long long label = 1;
    for (const std::size_t e : g.edges_at(*endpoint)) {
      if (e != *edge_idx) label = g.edges[e].k;
    }
    neighbor_sum += label;
  }
  if (neighbor_sum != m) {
    throw Error("edge " + std::string(a) + "-" + std::string(b) +
                " is not exceptional: label " + std::to_string(m) + " != neighbor sum " +
                std::to_string(neighbor_sum));
  }

  SurgeryResult res;
  const std::string merged = fresh_id(g, {});
  res.new_vertices.push_back(merged);

  DullGraph out;
  for (const auto& v : g.vertices) {
    if (v.id == a) {
      Vertex w;
      w.id = merged;
      out.vertices.push_back(w);  // thin, non-extremal
      continue;
    }
    if (v.id == b) continue;
    out.vertices.push_back(v);
  }
  Orientation oo;
  oo.min_vertex = o.min_vertex;
  oo.max_vertex = o.max_vertex;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (e == *edge_idx) continue;
    GraphEdge edge = g.edges[e];
    std::string head = o.head[e];
    for (auto* id : {&edge.a, &edge.b}) {
      if (*id == a || *id == b) *id = merged;
    }
    if (head == a || head == b) head = merged;
    out.edges.push_back(edge);
    oo.head.push_back(head);
  }
  res.graph = std::move(out);
  res.orientation = std::move(oo);
  require_valid_orientation(res.graph, res.orientation);
  return res;
}

SurgeryResult chain_blowup(const DullGraph& g, const Orientation& o, std::string_view v) {
  require_valid_orientation(g, o);
  const Vertex& vx = g.vertex(v);
  if (vx.is_fat()) throw Error("cannot blow up at fat vertex '" + vx.id + "'");
  if (vx.is_extremal()) throw Error("cannot blow up at extremal vertex '" + vx.id + "'");
  const auto chain = free_chain_containing(g, v);
  (void)chain;

  // Weights (m2, -m1): outgoing label above, incoming label below.
  const auto [m2, neg_m1] = weights_at(g, o, v);
  const long long m1 = -neg_m1;
  const long long new_label = m1 + m2;

  SurgeryResult res;
  const std::string lo = fresh_id(g, {});
  const std::string hi = fresh_id(g, {lo});
  res.new_vertices = {lo, hi};

  DullGraph out;
  for (const auto& w : g.vertices) {
    if (w.id == v) {
      Vertex bottom, top;
      bottom.id = lo;
      top.id = hi;
      out.vertices.push_back(bottom);
      out.vertices.push_back(top);
      continue;
    }
    out.vertices.push_back(w);
  }
  Orientation oo;
  oo.min_vertex = o.min_vertex;
  oo.max_vertex = o.max_vertex;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    GraphEdge edge = g.edges[e];
    std::string head = o.head[e];
    if (edge.touches(v)) {
      // Incoming edge stays below, outgoing reattaches above.
      const bool incoming = (head == vx.id);
      const std::string& replacement = incoming ? lo : hi;
      if (edge.a == v) edge.a = replacement;
      if (edge.b == v) edge.b = replacement;
      if (incoming) head = replacement;
    }
    out.edges.push_back(edge);
    oo.head.push_back(head);
  }
  out.edges.push_back(GraphEdge{lo, hi, new_label});
  oo.head.push_back(hi);
  res.new_edge = out.edges.size() - 1;
  res.graph = std::move(out);
  res.orientation = std::move(oo);
  require_valid_orientation(res.graph, res.orientation);
  require_valid_dull(res.graph);
  return res;
}

InvertResult invert_chain(const DullGraph& g, const Orientation& o, const FreeChain& chain) {
  require_valid_orientation(g, o);
  require_free_chain(g, chain);

  const FreeChain oriented = chain_bottom_to_top(g, o, chain);
  const std::vector<long long> old_labels = oriented.labels(g);

  InvertResult res;
  res.graph = g;
  res.orientation = o;
  res.chain = oriented.vertex_ids(g);
  if (chain.is_free_point()) return res;

  // Blow the chain down to a free point. Removing edge j merges vertices
  // j and j+1, so the merged vertex sits at rank j+1 (bottom to top,
  // 1-based) of the smaller chain.
  std::vector<std::size_t> ranks;
  std::vector<std::string> ids = res.chain;
  while (ids.size() > 1) {
    std::vector<long long> labels;
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
      const auto e = res.graph.edge_between(ids[i], ids[i + 1]);
      labels.push_back(res.graph.edges[*e].k);
    }
    const std::size_t j = find_exceptional_edge(labels);
    auto step = chain_blowdown(res.graph, res.orientation, ids[j], ids[j + 1]);
    Move move;
    move.kind = MoveKind::Blowdown;
    move.edge = {ids[j], ids[j + 1]};
    res.script.push_back(move);
    ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(j));
    ids[j] = step.new_vertices.front();
    ranks.push_back(j + 1);
    res.graph = std::move(step.graph);
    res.orientation = std::move(step.orientation);
  }
  std::reverse(ranks.begin(), ranks.end());  // forward blowup order

  // Replay upside down: at step s the chain has s vertices and we blow up
  // where exactly ranks[s-1] of them sit at or above the target.
  for (std::size_t s = 1; s <= ranks.size(); ++s) {
    const std::size_t target = ids.size() - ranks[s - 1];  // 0-based from bottom
    auto step = chain_blowup(res.graph, res.orientation, ids[target]);
    Move move;
    move.kind = MoveKind::Blowup;
    move.vertex = ids[target];
    res.script.push_back(move);
    ids[target] = step.new_vertices[0];
    ids.insert(ids.begin() + static_cast<std::ptrdiff_t>(target) + 1, step.new_vertices[1]);
    res.graph = std::move(step.graph);
    res.orientation = std::move(step.orientation);
  }
  res.chain = ids;

  // The rebuilt graph must be isomorphic to the input, and the new chain
  // must read as the old one reversed: that is the partial flip.
  if (!(canonical_key(res.graph) == canonical_key(g))) {
    throw Error("internal: inverted chain changed the dull graph");
  }
  std::vector<long long> new_labels;
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    const auto e = res.graph.edge_between(ids[i], ids[i + 1]);
    new_labels.push_back(res.graph.edges[*e].k);
  }
  auto reversed = old_labels;
  std::reverse(reversed.begin(), reversed.end());
  if (new_labels != reversed) {
    throw Error("internal: inverted chain labels are not the reversal of the input chain");
  }
  return res;
}

DiffeoDecision decide_equivariant_diffeo(const DullGraph& g1, const DullGraph& g2) {
  DiffeoDecision decision;
  decision.isomorphism = find_isomorphism(g1, g2);
  if (!decision.isomorphism) {
    decision.verdict = DiffeoVerdict::No;
    return decision;
  }
  decision.b2 = betti(g1)[2];
  decision.verdict = decision.b2 == 2 ? DiffeoVerdict::YesBothOrientations
                                      : DiffeoVerdict::YesOrientationPreserving;
  return decision;
}

}  // namespace hamgraph
