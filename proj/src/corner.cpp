#include "hamgraph/corner.hpp"

#include <algorithm>
#include <numeric>

namespace hamgraph {

namespace {

long long det(const std::array<long long, 2>& u, const std::array<long long, 2>& v) {
  return u[0] * v[1] - u[1] * v[0];
}

std::array<Rat, 2> corner_point(const CornerPolytope& p, std::size_t i) {
  const auto& u = p.normals[i];
  const auto& v = p.normals[i + 1];
  const long long d = det(u, v);
  if (d == 0) throw Error("parallel adjacent normals at facet " + std::to_string(i));
  const Rat ai = p.constants[i];
  const Rat aj = p.constants[i + 1];
  return {(ai * v[1] - aj * Rat(u[1])) / d, (Rat(u[0]) * aj - Rat(v[0]) * ai) / d};
}

// Signed parameter length of interior facet i: the step from P_{i-1,i} to
// P_{i,i+1} along the boundary direction (beta_i, -alpha_i). Positive for
// every nontrivial facet of a counter-clockwise polytope.
Rat facet_parameter_length(const CornerPolytope& p, std::size_t i) {
  const auto lo = corner_point(p, i - 1);
  const auto hi = corner_point(p, i);
  const long long alpha = p.normals[i][0];
  const long long beta = p.normals[i][1];
  if (beta != 0) return (hi[0] - lo[0]) / beta;
  if (alpha != 0) return (lo[1] - hi[1]) / alpha;
  throw Error("zero normal at facet " + std::to_string(i));
}

}  // namespace

CornerPolytope quadrant() {
  CornerPolytope p;
  p.normals = {{1, 0}, {0, 1}};
  p.constants = {Rat(0), Rat(0)};
  return p;
}

ValidationReport validate_polytope(const CornerPolytope& p) {
  ValidationReport report;
  const std::size_t n = p.normals.size();
  if (p.constants.size() != n) {
    report.add("size-mismatch", "normals and constants differ in length");
    return report;
  }
  if (n < 2) {
    report.add("too-few-facets", "a corner polytope needs at least the two axis facets");
    return report;
  }
  if (p.normals.front() != std::array<long long, 2>{1, 0} || p.constants.front() != Rat(0)) {
    report.add("first-facet", "the first facet must be v = (1,0), a = 0");
  }
  if (p.normals.back() != std::array<long long, 2>{0, 1} || p.constants.back() != Rat(0)) {
    report.add("last-facet", "the last facet must be v = (0,1), a = 0");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = p.normals[i];
    if (v[0] == 0 && v[1] == 0) {
      report.add("zero-normal", "facet " + std::to_string(i) + " has zero normal");
      continue;
    }
    if (std::gcd(std::abs(v[0]), std::abs(v[1])) != 1) {
      report.add("not-primitive", "facet " + std::to_string(i) + " normal is not primitive");
    }
    if (i > 0 && i + 1 < n && (v[0] < 1 || v[1] < 1)) {
      report.add("interior-normal", "interior facet " + std::to_string(i) +
                                        " normal must have both coordinates >= 1");
    }
  }
  if (!report.ok()) return report;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (det(p.normals[i], p.normals[i + 1]) != 1) {
      report.add("not-delzant", "adjacent normals at facets " + std::to_string(i) + "," +
                                    std::to_string(i + 1) + " do not form a positive basis of Z^2");
    }
  }
  if (!report.ok()) return report;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (facet_parameter_length(p, i) <= Rat(0)) {
      report.add("facet-trivial", "facet " + std::to_string(i) + " has no interior");
    }
  }
  return report;
}

void require_valid_polytope(const CornerPolytope& p) {
  const auto report = validate_polytope(p);
  if (!report.ok()) throw Error("invalid corner polytope:\n" + report.summary());
}

std::vector<std::array<Rat, 2>> polygon_vertices(const CornerPolytope& p) {
  std::vector<std::array<Rat, 2>> out;
  for (std::size_t i = 0; i + 1 < p.normals.size(); ++i) {
    out.push_back(corner_point(p, i));
  }
  return out;
}

namespace {

CornerPolytope insert_facet(const CornerPolytope& p, std::size_t corner, const Rat& size) {
  CornerPolytope out = p;
  const std::array<long long, 2> sum{p.normals[corner][0] + p.normals[corner + 1][0],
                                     p.normals[corner][1] + p.normals[corner + 1][1]};
  out.normals.insert(out.normals.begin() + static_cast<std::ptrdiff_t>(corner) + 1, sum);
  out.constants.insert(out.constants.begin() + static_cast<std::ptrdiff_t>(corner) + 1,
                       p.constants[corner] + p.constants[corner + 1] + size);
  return out;
}

}  // namespace

std::optional<Rat> max_blowup_size(const CornerPolytope& p, std::size_t corner) {
  require_valid_polytope(p);
  if (corner + 1 >= p.normals.size()) throw Error("corner index out of range");

  // The only facets whose length shrinks are the two adjacent to the new
  // one; their parameter lengths are affine in the blowup size.
  std::optional<Rat> bound;
  const CornerPolytope at1 = insert_facet(p, corner, Rat(1));
  const CornerPolytope at2 = insert_facet(p, corner, Rat(2));
  const std::size_t n_new = at1.normals.size();
  for (const std::size_t f : {corner, corner + 2}) {
    if (f == 0 || f + 1 >= n_new) continue;  // axis rays never collapse
    const Rat t1 = facet_parameter_length(at1, f);
    const Rat t2 = facet_parameter_length(at2, f);
    const Rat slope = t2 - t1;
    if (slope >= Rat(0)) continue;
    const Rat root = Rat(1) - t1 / slope;
    if (!bound || root < *bound) bound = root;
  }
  return bound;
}

CornerPolytope blowup_at_corner(const CornerPolytope& p, std::size_t corner, const Rat& size) {
  require_valid_polytope(p);
  if (corner + 1 >= p.normals.size()) throw Error("corner index out of range");
  if (size <= Rat(0)) throw Error("blowup size must be positive");

  CornerPolytope out = insert_facet(p, corner, size);
  const auto report = validate_polytope(out);
  if (!report.ok()) {
    const auto bound = max_blowup_size(p, corner);
    std::string message = "blowup size " + rat_to_string(size) + " is infeasible";
    if (bound) message += "; sizes must be smaller than " + rat_to_string(*bound);
    throw Error(message);
  }
  return out;
}

std::vector<ExceptionalFacet> find_exceptional_facets(const CornerPolytope& p) {
  require_valid_polytope(p);
  std::vector<ExceptionalFacet> out;
  for (std::size_t j = 1; j + 1 < p.normals.size(); ++j) {
    if (p.normals[j][0] == p.normals[j - 1][0] + p.normals[j + 1][0] &&
        p.normals[j][1] == p.normals[j - 1][1] + p.normals[j + 1][1]) {
      out.push_back({j, p.constants[j] - (p.constants[j - 1] + p.constants[j + 1])});
    }
  }
  return out;
}

CornerPolytope blowdown_facet(const CornerPolytope& p, std::size_t facet) {
  const auto exceptional = find_exceptional_facets(p);
  const bool ok = std::any_of(exceptional.begin(), exceptional.end(),
                              [facet](const ExceptionalFacet& e) { return e.index == facet; });
  if (!ok) throw Error("facet " + std::to_string(facet) + " is not exceptional");

  CornerPolytope out = p;
  out.normals.erase(out.normals.begin() + static_cast<std::ptrdiff_t>(facet));
  out.constants.erase(out.constants.begin() + static_cast<std::ptrdiff_t>(facet));
  require_valid_polytope(out);
  return out;
}

CornerPolytope mirror(const CornerPolytope& p) {
  require_valid_polytope(p);
  const std::size_t n = p.normals.size();
  CornerPolytope out;
  out.normals.resize(n);
  out.constants.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.normals[i] = {p.normals[n - 1 - i][1], p.normals[n - 1 - i][0]};
    out.constants[i] = p.constants[n - 1 - i];
  }
  return out;
}

std::vector<long long> stabilizer_labels(const CornerPolytope& p) {
  require_valid_polytope(p);
  std::vector<long long> out;
  for (std::size_t i = 1; i + 1 < p.normals.size(); ++i) {
    out.push_back(p.normals[i][0] + p.normals[i][1]);
  }
  return out;
}

ChainRealization realize_chain(const std::vector<long long>& labels,
                               const std::vector<Rat>* sizes) {
  if (sizes && sizes->size() != labels.size()) {
    throw Error("expected one blowup size per chain edge");
  }

  // Recover the blowup ranks by blowing the label sequence down: removing
  // edge j merges vertices j and j+1 into the vertex of rank j+1.
  std::vector<std::size_t> ranks;
  std::vector<long long> work = labels;
  while (!work.empty()) {
    const std::size_t j = find_exceptional_edge(work);
    ranks.push_back(j + 1);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
  }
  std::reverse(ranks.begin(), ranks.end());

  ChainRealization out;
  out.polytope = quadrant();
  for (std::size_t s = 0; s < ranks.size(); ++s) {
    const std::size_t corner = ranks[s] - 1;
    Rat size;
    if (sizes) {
      size = (*sizes)[s];
    } else {
      const auto bound = max_blowup_size(out.polytope, corner);
      size = bound ? *bound / 2 : Rat(1);
    }
    out.polytope = blowup_at_corner(out.polytope, corner, size);
    Move move;
    move.kind = MoveKind::Blowup;
    move.vertex = std::to_string(ranks[s]);
    move.size = size;
    out.script.push_back(move);
  }

  if (stabilizer_labels(out.polytope) != labels) {
    throw Error("internal: realized polytope labels do not match the chain");
  }
  return out;
}

bool in_triangular_neighborhood(const CornerPolytope& p, const std::array<Rat, 2>& w,
                                const Rat& eps) {
  require_valid_polytope(p);
  for (std::size_t i = 0; i < p.normals.size(); ++i) {
    if (Rat(p.normals[i][0]) * w[0] + Rat(p.normals[i][1]) * w[1] < p.constants[i]) {
      return false;
    }
  }
  return w[0] + w[1] < eps;
}

Rat chain_threshold(const CornerPolytope& p) {
  require_valid_polytope(p);
  Rat best(0);
  for (const auto& corner : polygon_vertices(p)) {
    best = std::max(best, corner[0] + corner[1]);
  }
  return best;
}

}  // namespace hamgraph
