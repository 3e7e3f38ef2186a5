#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hamgraph/graph.hpp"
#include "hamgraph/rational.hpp"
#include "hamgraph/validation.hpp"

namespace hamgraph {

// Equivariant classes and fixed-point integrals. Everything here is exact:
// classes are polynomials in the degree-2 generator t (surfaces carry an
// extra nilpotent generator u of degree 2 with integral 1 over the surface),
// and integration is the fixed-point residue sum.

enum class FixedRole { Min, Max, Interior };

struct IsolatedFixed {
  std::string id;
  long long w1 = 0;
  long long w2 = 0;
  FixedRole role = FixedRole::Interior;
};

struct SurfaceFixed {
  std::string id;
  long long genus = 0;
  long long self_intersection = 0;
  int normal_weight = 1;  // +1 at the minimum, -1 at the maximum
  FixedRole role = FixedRole::Min;
};

using FixedComponent = std::variant<IsolatedFixed, SurfaceFixed>;

struct FixedData {
  std::vector<FixedComponent> components;

  const std::string& id_of(std::size_t i) const;
  const FixedComponent* find(std::string_view id) const;
};

FixedData fixed_data_of(const DullGraph& g, const Orientation& o);

// Restriction of a class to one fixed component: t_poly[i] t^i, plus
// u_poly[i] t^i u on surfaces (u_poly must vanish on isolated points).
struct Restriction {
  std::vector<Rat> t_poly;
  std::vector<Rat> u_poly;

  bool is_zero() const;
};

struct EquivariantClass {
  std::map<std::string, Restriction> restrictions;  // component id -> value

  const Restriction* at(std::string_view id) const;
};

// The class restricting to 1 everywhere.
EquivariantClass unit_class(const FixedData& fd);

// The class restricting at the named component to the equivariant Euler
// class of its normal bundle (w1 w2 t^2 at isolated points, normal_weight t
// + e u on surfaces) and to zero elsewhere.
EquivariantClass epsilon_class(const FixedData& fd, std::string_view component);

// Componentwise product (u^2 = 0).
EquivariantClass multiply_classes(const FixedData& fd, const EquivariantClass& a,
                                  const EquivariantClass& b);

// Common homogeneous degree of all nonzero restrictions (t and u both have
// degree 2). Throws Error on mixed degrees or u-terms at isolated points.
long long class_degree(const FixedData& fd, const EquivariantClass& c);

// Laurent polynomial in t with rational coefficients; t has degree 2.
struct LaurentPoly {
  std::map<long long, Rat> coeff;  // exponent of t -> coefficient

  void add(long long exponent, const Rat& value);
  bool is_zero() const;
  std::string to_string() const;

  bool operator==(const LaurentPoly&) const = default;
};

// Fixed-point integration: sum over isolated points of c|_p / (w1 w2 t^2)
// plus, over surfaces, the u-coefficient slot of c|_F / (n t + e u) expanded
// with 1/(n t + e u) = (1/(n t))(1 - (e/(n t)) u). A degree-d class
// integrates to a homogeneous result of degree d - 4.
LaurentPoly integrate_abbv(const FixedData& fd, const EquivariantClass& c);

// (b0, b1, b2, b3, b4). b1 = b3 = twice the genus of the extremal surfaces,
// b2 = chi - 2 + 4g with chi = #isolated + sum over surfaces of (2 - 2g_F).
std::array<long long, 5> betti(const DullGraph& g);

enum class Parity { Even, Odd, Unknown };

// Parity of the intersection lattice, when the graph determines it: odd for
// b2 = 1 and b2 >= 3, the parity of a fixed surface's self-intersection for
// b2 = 2, and Unknown for b2 = 2 with only isolated fixed points.
Parity parity_from_graph(const DullGraph& g);

// Case analysis on (b1, b2, parity): CP^2, an S^2-bundle over a surface, or
// a blowup of the trivial bundle. Throws when b2 = 2 and the parity is
// Unknown.
std::string diffeotype(long long b1, long long b2, Parity parity);

bool orientation_reversing_exists(const DullGraph& g);

// Residue identities every realizable graph satisfies: the integral of 1
// vanishes, and so does the integral of every degree-2 epsilon class.
// Violations flag the fixed data as non-realizable.
ValidationReport localization_check(const FixedData& fd);
ValidationReport localization_consistency(const DullGraph& g, const Orientation& o);

}  // namespace hamgraph
