#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "hamgraph/moves.hpp"
#include "hamgraph/rational.hpp"
#include "hamgraph/validation.hpp"

namespace hamgraph {

// Delzant polyhedral sets of corner shape: primitive integer inward normals
// v_0 = (1,0), ..., v_{n-1} = (0,1) in counter-clockwise order with
// det(v_i, v_{i+1}) = +1, rational constants with a_0 = a_{n-1} = 0, every
// facet nontrivial. Interior facets carry the isotropy spheres of the
// anti-diagonal circle action; facet indices are 0-based throughout, with
// the bottom of the chain at index 1 (nearest the w2-axis, where the
// anti-diagonal moment w1 - w2 is lowest).
struct CornerPolytope {
  std::vector<std::array<long long, 2>> normals;
  std::vector<Rat> constants;

  std::size_t facet_count() const { return normals.size(); }
  bool operator==(const CornerPolytope&) const = default;
};

// The flat quadrant (two facets, the model of C^2).
CornerPolytope quadrant();

ValidationReport validate_polytope(const CornerPolytope& p);
void require_valid_polytope(const CornerPolytope& p);

// Corner points P_{i,i+1} in counter-clockwise boundary order; corner i is
// the exact solution of <w, v_i> = a_i, <w, v_{i+1}> = a_{i+1}.
std::vector<std::array<Rat, 2>> polygon_vertices(const CornerPolytope& p);

// Inserts v_i + v_{i+1} with constant a_i + a_{i+1} + size at corner i.
// Throws if size <= 0 or if any facet of the result would collapse; the
// feasibility error names the maximal admissible size.
CornerPolytope blowup_at_corner(const CornerPolytope& p, std::size_t corner, const Rat& size);

// Largest admissible blowup size at the corner (nullopt when unbounded,
// which happens exactly when both adjacent facets are the axis rays).
std::optional<Rat> max_blowup_size(const CornerPolytope& p, std::size_t corner);

struct ExceptionalFacet {
  std::size_t index;  // interior facet with v_j = v_{j-1} + v_{j+1}
  Rat epsilon;        // a_j - (a_{j-1} + a_{j+1}), the sphere's area
};

std::vector<ExceptionalFacet> find_exceptional_facets(const CornerPolytope& p);

// Deletes an exceptional facet; inverse of blowup_at_corner with
// size = epsilon_j.
CornerPolytope blowdown_facet(const CornerPolytope& p, std::size_t facet);

// Reflection across the diagonal w1 = w2: v'_i = swap(v_{n-1-i}),
// a'_i = a_{n-1-i}. An involution.
CornerPolytope mirror(const CornerPolytope& p);

// Stabilizer orders alpha_i + beta_i of the interior facets, bottom to top.
std::vector<long long> stabilizer_labels(const CornerPolytope& p);

struct ChainRealization {
  CornerPolytope polytope;
  MoveScript script;  // corner blowups; `vertex` holds the 1-based fixed-point
                      // rank (bottom to top) and `size` the blowup size used
};

// Builds a corner polytope whose chain of isotropy spheres realizes the
// given free-chain labels (bottom to top), replaying the chain's blowdown
// ranks as corner blowups starting from the quadrant. Sizes default to half
// the maximal admissible size at each step (1 when unbounded).
ChainRealization realize_chain(const std::vector<long long>& labels,
                               const std::vector<Rat>* sizes = nullptr);

// Membership of w in the triangular neighborhood of size eps.
bool in_triangular_neighborhood(const CornerPolytope& p, const std::array<Rat, 2>& w,
                                const Rat& eps);

// Infimum threshold for triangular neighborhoods: the chain of isotropy
// spheres lies inside U_eps exactly when eps exceeds this value (the largest
// coordinate sum over the corner points).
Rat chain_threshold(const CornerPolytope& p);

}  // namespace hamgraph
