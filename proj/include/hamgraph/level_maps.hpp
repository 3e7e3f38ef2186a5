#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hamgraph/corner.hpp"

namespace hamgraph {

// Floating-point realization of the level set
//   U = { x in C^n : (alpha_i |x_1|^2 - |x_i|^2 + beta_i |x_n|^2)/2 = a_i }
// of a corner polytope, together with the explicit maps between a corner
// manifold, its blowdowns, and its mirror. Everything is sampled and checked
// to tolerance; exactness lives in the corner module.

using Cx = std::complex<double>;
using CxVec = std::vector<Cx>;

struct ToleranceConfig {
  double tol_level = 1e-12;     // level-set residuals and roundoff-exact identities
  double tol_identity = 1e-9;   // composed map identities
  double tol_fd = 1e-6;         // finite-difference form checks
  double fd_step = 1e-5;        // central-difference step
  std::uint64_t rng_seed = 1;
};

// Per-constraint defects of a point against the level-set equations.
std::vector<double> level_residuals(const CornerPolytope& p, const CxVec& x);

// The point with |x_1|^2 = 2 w1, |x_n|^2 = 2 w2, interior moduli determined
// by the level equations and the given phases (radians, one per coordinate).
// Throws unless w is strictly interior to the polytope.
CxVec sample_level(const CornerPolytope& p, double w1, double w2,
                   const std::vector<double>& phases);

// The blowup map to C^2, defined off the chain (all interior x_i nonzero):
//   z = ( x_1 prod x_i^{alpha_i} / |prod x_i^{alpha_i}|,
//         prod x_i^{beta_i} x_n / |prod x_i^{beta_i}| ).
std::array<Cx, 2> psi(const CornerPolytope& p, const CxVec& x);

// Gauge-fixed section of psi: interior coordinates positive real. Throws
// when z lies outside the strict image region.
CxVec psi_inverse(const CornerPolytope& p, const std::array<Cx, 2>& z);

// Margins (<(|z1|^2,|z2|^2), v_i>/2 - a_i of a C^2 point against the
// interior facets; these equal |x_i|^2 / 2 on the image of psi.
std::vector<double> image_margins(const CornerPolytope& p, const std::array<Cx, 2>& z);

// Single-step blowdown at an exceptional facet j:
//   (..., x_{j-1} x_j/|x_j|, x_j x_{j+1}/|x_j|, ...), deleting slot j.
// Throws when x_j = 0 (the point lies on the exceptional sphere).
CxVec blowdown_map(const CornerPolytope& p, std::size_t j, const CxVec& x);

// Smooth inverse: reinstates x_j = sqrt(|y_{j-1}|^2 + |y_j|^2 - 2 eps_j).
// `p` is the upstairs polytope (the one with facet j).
CxVec blowdown_inverse(const CornerPolytope& p, std::size_t j, const CxVec& y);

// (x_1, ..., x_n) -> (-conj(x_n), conj(x_{n-1}), ..., conj(x_1)); carries the
// level set of a polytope onto the level set of its mirror.
CxVec F_map(const CxVec& x);

// Rotation family: phi_0 = id, phi_1(z) = (-conj(z2), conj(z1)),
// phi_t^{-1} = phi_{-t}, norm preserving, equivariant for
// (z1, z2) -> (lambda z1, lambda^{-1} z2).
std::array<Cx, 2> phi_t(const std::array<Cx, 2>& z, double t);

// C^2 cutoff profile in the diagonal moment m = |z|^2/2: equals 1 for
// m <= alpha, 0 for m >= beta, smoothstep in between (C^2 contact at both
// ends). Requires 0 < alpha < beta.
double cutoff_profile(double m, double alpha, double beta);

// g(z) = phi_{rho(|z|^2/2)}(z) and its inverse phi_{-rho(|z|^2/2)}.
std::array<Cx, 2> g_map(const std::array<Cx, 2>& z, double alpha, double beta);
std::array<Cx, 2> g_inverse(const std::array<Cx, 2>& z, double alpha, double beta);

// The glued diffeomorphism onto the mirror model: F below diagonal moment
// alpha (with a small relative seam margin), psi'^{-1} . g . psi above.
// Requires the chain threshold of p to lie strictly below alpha < beta.
CxVec H_map(const CornerPolytope& p, const CxVec& x, double alpha, double beta,
            double seam_margin = 1e-4);

struct IdentityCheck {
  std::string name;
  std::size_t samples = 0;
  double max_defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

// Seeded verification of every map identity above on the given polytope.
VerificationReport run_verification_suite(const CornerPolytope& p,
                                          const ToleranceConfig& config = {});

}  // namespace hamgraph
