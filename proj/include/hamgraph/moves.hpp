#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hamgraph/graph.hpp"

namespace hamgraph {

// Orientation moves and free-chain surgery. All functions take valid inputs
// (checked) and return new values; vertex ids created by surgery are fresh,
// surviving vertices keep their ids so scripts stay replayable.

enum class MoveKind { Opposite, PartialFlip, Blowup, Blowdown };

struct Move {
  MoveKind kind = MoveKind::Opposite;
  std::vector<std::string> chain;       // PartialFlip: vertex ids of the chain
  std::string vertex;                   // Blowup: target vertex (or corner rank in
                                        // polytope realizations, as a decimal string)
  std::optional<Rat> size;              // Blowup, decorated level only
  std::array<std::string, 2> edge{};    // Blowdown: endpoints
};

using MoveScript = std::vector<Move>;

// Swaps the min/max labels and reverses every edge.
Orientation opposite(const DullGraph& g, const Orientation& o);

// Reverses the edges of one nontrivial free chain. Throws
// "partial flip undefined on trivial chains" on free points.
Orientation partial_flip(const DullGraph& g, const Orientation& o, const FreeChain& chain);

// All valid orientations, no duplicates; the count is
// 2 * 2^(number of free chains with at least one edge).
std::vector<Orientation> enumerate_orientations(const DullGraph& g);

// A script of at most one Opposite followed by at most one PartialFlip per
// nontrivial free chain taking `from` to `to`.
MoveScript orientation_path(const DullGraph& g, const Orientation& from, const Orientation& to);

// Replays Opposite/PartialFlip moves. Blowup/Blowdown moves are rejected
// (they change the graph).
Orientation apply_orientation_moves(const DullGraph& g, const Orientation& o,
                                    const MoveScript& script);

// Index (0-based) of the exceptional sphere in a chain given by its labels
// m_1..m_n: the first label of maximal value. Asserts the self-intersection
// -1 identity m_{j-1} + m_{j+1} = m_j (boundary convention m_0 = m_{n+1} = 1)
// and throws if it fails, which means the chain is not realizable.
std::size_t find_exceptional_edge(const std::vector<long long>& labels);

struct SurgeryResult {
  DullGraph graph;
  Orientation orientation;
  std::vector<std::string> new_vertices;     // created ids (merged point, or bottom/top pair)
  std::optional<std::size_t> new_edge;       // blowup: index of the created edge
};

// Blows down an exceptional sphere of a free chain: the edge and its two
// endpoints are replaced by one non-extremal thin vertex inheriting the
// remaining adjacencies. The edge label must equal the sum of its neighbor
// labels (default 1 at chain ends).
SurgeryResult chain_blowdown(const DullGraph& g, const Orientation& o, std::string_view a,
                             std::string_view b);

// Blows up at a non-extremal thin vertex of a free chain with weights
// (m2, -m1): the vertex becomes two fixed points joined by a new sphere
// labeled m1 + m2, the incoming edge staying below and the outgoing above.
SurgeryResult chain_blowup(const DullGraph& g, const Orientation& o, std::string_view v);

struct InvertResult {
  DullGraph graph;
  Orientation orientation;
  MoveScript script;                     // the blowdowns and blowups performed
  std::vector<std::string> chain;        // the rebuilt chain, bottom to top
};

// Blows a free chain down to a free point, then replays the blowups upside
// down. The result is isomorphic as a dull graph to the input, and carries
// the orientation obtained from the old one by a partial flip along the
// chain (verified internally).
InvertResult invert_chain(const DullGraph& g, const Orientation& o, const FreeChain& chain);

enum class DiffeoVerdict { No, YesOrientationPreserving, YesBothOrientations };

struct DiffeoDecision {
  DiffeoVerdict verdict = DiffeoVerdict::No;
  std::optional<Isomorphism> isomorphism;
  long long b2 = 0;
};

// Equivariant diffeomorphism test: Yes exactly when the dull graphs are
// isomorphic; both orientations are realized exactly when additionally
// b2 = 2.
DiffeoDecision decide_equivariant_diffeo(const DullGraph& g1, const DullGraph& g2);

// Reorders a free chain bottom-to-top with respect to an orientation.
FreeChain chain_bottom_to_top(const DullGraph& g, const Orientation& o, const FreeChain& chain);

}  // namespace hamgraph
