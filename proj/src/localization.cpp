#include "hamgraph/localization.hpp"

#include <algorithm>

namespace hamgraph {

namespace {

struct GetId {
  const std::string& operator()(const IsolatedFixed& f) const { return f.id; }
  const std::string& operator()(const SurfaceFixed& f) const { return f.id; }
};

}  // namespace

const std::string& FixedData::id_of(std::size_t i) const {
  return std::visit(GetId{}, components[i]);
}

const FixedComponent* FixedData::find(std::string_view id) const {
  for (const auto& c : components) {
    if (std::visit(GetId{}, c) == id) return &c;
  }
  return nullptr;
}

FixedData fixed_data_of(const DullGraph& g, const Orientation& o) {
  require_valid_dull(g);
  require_valid_orientation(g, o);

  FixedData fd;
  for (const auto& v : g.vertices) {
    FixedRole role = FixedRole::Interior;
    if (v.id == o.min_vertex) role = FixedRole::Min;
    if (v.id == o.max_vertex) role = FixedRole::Max;
    if (v.is_fat()) {
      SurfaceFixed s;
      s.id = v.id;
      s.genus = v.genus;
      s.self_intersection = v.self_intersection;
      s.normal_weight = (role == FixedRole::Min) ? 1 : -1;
      s.role = role;
      fd.components.emplace_back(s);
    } else {
      const auto [w1, w2] = weights_at(g, o, v.id);
      fd.components.emplace_back(IsolatedFixed{v.id, w1, w2, role});
    }
  }
  return fd;
}

bool Restriction::is_zero() const {
  auto all_zero = [](const std::vector<Rat>& p) {
    return std::all_of(p.begin(), p.end(), [](const Rat& c) { return c == Rat(0); });
  };
  return all_zero(t_poly) && all_zero(u_poly);
}

const Restriction* EquivariantClass::at(std::string_view id) const {
  const auto it = restrictions.find(std::string(id));
  return it == restrictions.end() ? nullptr : &it->second;
}

EquivariantClass unit_class(const FixedData& fd) {
  EquivariantClass c;
  for (const auto& comp : fd.components) {
    Restriction r;
    r.t_poly = {Rat(1)};
    c.restrictions[std::visit(GetId{}, comp)] = r;
  }
  return c;
}

EquivariantClass epsilon_class(const FixedData& fd, std::string_view component) {
  const FixedComponent* comp = fd.find(component);
  if (!comp) throw Error("unknown fixed component '" + std::string(component) + "'");

  EquivariantClass c;
  for (const auto& other : fd.components) {
    c.restrictions[std::visit(GetId{}, other)] = Restriction{};
  }
  Restriction r;
  if (const auto* iso = std::get_if<IsolatedFixed>(comp)) {
    r.t_poly = {Rat(0), Rat(0), Rat(iso->w1) * Rat(iso->w2)};
  } else {
    const auto& s = std::get<SurfaceFixed>(*comp);
    r.t_poly = {Rat(0), Rat(s.normal_weight)};
    r.u_poly = {Rat(s.self_intersection)};
  }
  c.restrictions[std::string(component)] = r;
  return c;
}

namespace {

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<Rat> poly_add(std::vector<Rat> a, const std::vector<Rat>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

EquivariantClass multiply_classes(const FixedData& fd, const EquivariantClass& a,
                                  const EquivariantClass& b) {
  EquivariantClass out;
  static const Restriction zero{};
  for (const auto& comp : fd.components) {
    const std::string& id = std::visit(GetId{}, comp);
    const Restriction& ra = a.at(id) ? *a.at(id) : zero;
    const Restriction& rb = b.at(id) ? *b.at(id) : zero;
    Restriction r;
    r.t_poly = poly_mul(ra.t_poly, rb.t_poly);
    r.u_poly = poly_add(poly_mul(ra.t_poly, rb.u_poly), poly_mul(ra.u_poly, rb.t_poly));
    out.restrictions[id] = std::move(r);
  }
  return out;
}

long long class_degree(const FixedData& fd, const EquivariantClass& c) {
  std::optional<long long> degree;
  auto note = [&degree](long long d, const std::string& id) {
    if (degree && *degree != d) {
      throw Error("class degrees are inconsistent at component '" + id + "'");
    }
    degree = d;
  };
  for (const auto& comp : fd.components) {
    const std::string& id = std::visit(GetId{}, comp);
    const Restriction* r = c.at(id);
    if (!r) continue;
    const bool isolated = std::holds_alternative<IsolatedFixed>(comp);
    for (std::size_t i = 0; i < r->t_poly.size(); ++i) {
      if (r->t_poly[i] != Rat(0)) note(2 * static_cast<long long>(i), id);
    }
    for (std::size_t i = 0; i < r->u_poly.size(); ++i) {
      if (r->u_poly[i] != Rat(0)) {
        if (isolated) {
          throw Error("u-terms are not allowed at isolated point '" + id + "'");
        }
        note(2 * static_cast<long long>(i) + 2, id);
      }
    }
  }
  return degree.value_or(0);
}

void LaurentPoly::add(long long exponent, const Rat& value) {
  if (value == Rat(0)) return;
  const auto it = coeff.find(exponent);
  if (it == coeff.end()) {
    coeff[exponent] = value;
    return;
  }
  it->second += value;
  if (it->second == Rat(0)) coeff.erase(it);
}

bool LaurentPoly::is_zero() const { return coeff.empty(); }

std::string LaurentPoly::to_string() const {
  if (coeff.empty()) return "0";
  std::string out;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += rat_to_string(it->second);
    if (it->first != 0) out += "*t^" + std::to_string(it->first);
  }
  return out;
}

LaurentPoly integrate_abbv(const FixedData& fd, const EquivariantClass& c) {
  class_degree(fd, c);  // throws on inconsistent input

  LaurentPoly out;
  for (const auto& comp : fd.components) {
    const std::string& id = std::visit(GetId{}, comp);
    const Restriction* r = c.at(id);
    if (!r || r->is_zero()) continue;
    if (const auto* iso = std::get_if<IsolatedFixed>(&comp)) {
      const Rat euler = Rat(iso->w1) * Rat(iso->w2);
      if (euler == Rat(0)) throw Error("zero weight at isolated point '" + id + "'");
      for (std::size_t i = 0; i < r->t_poly.size(); ++i) {
        out.add(static_cast<long long>(i) - 2, r->t_poly[i] / euler);
      }
    } else {
      const auto& s = std::get<SurfaceFixed>(comp);
      const Rat n(s.normal_weight);
      const Rat e(s.self_intersection);
      // 1/(n t + e u) = (1/(n t)) (1 - (e/(n t)) u); the surface integral
      // picks the u-coefficient of c|_F times that expansion.
      for (std::size_t i = 0; i < r->u_poly.size(); ++i) {
        out.add(static_cast<long long>(i) - 1, r->u_poly[i] / n);
      }
      for (std::size_t i = 0; i < r->t_poly.size(); ++i) {
        out.add(static_cast<long long>(i) - 2, -r->t_poly[i] * e / (n * n));
      }
    }
  }
  return out;
}

std::array<long long, 5> betti(const DullGraph& g) {
  require_valid_dull(g);
  long long isolated = 0;
  long long genus = 0;
  long long euler = 0;
  for (const auto& v : g.vertices) {
    if (v.is_fat()) {
      euler += 2 - 2 * v.genus;
      genus = std::max(genus, v.genus);
    } else {
      ++isolated;
      ++euler;
    }
  }
  const long long b1 = 2 * genus;
  const long long b2 = euler - 2 + 4 * genus;
  return {1, b1, b2, b1, 1};
}

Parity parity_from_graph(const DullGraph& g) {
  const long long b2 = betti(g)[2];
  if (b2 != 2) return Parity::Odd;
  std::optional<Parity> from_surface;
  for (const auto& v : g.vertices) {
    if (!v.is_fat()) continue;
    const Parity p = (v.self_intersection % 2 == 0) ? Parity::Even : Parity::Odd;
    if (from_surface && *from_surface != p) return Parity::Unknown;
    from_surface = p;
  }
  return from_surface.value_or(Parity::Unknown);
}

std::string diffeotype(long long b1, long long b2, Parity parity) {
  if (b1 < 0 || b1 % 2 != 0) throw Error("b1 must be even and nonnegative");
  if (b2 < 1) throw Error("b2 must be at least 1");
  const long long genus = b1 / 2;
  if (b2 == 1) {
    return "CP^2";
  }
  if (b2 == 2) {
    if (parity == Parity::Unknown) {
      throw Error("needs parity: b2 = 2 with unknown intersection-lattice parity");
    }
    const char* kind = (parity == Parity::Even) ? "trivial" : "nontrivial";
    return std::string(kind) + " S^2-bundle over Sigma_" + std::to_string(genus);
  }
  return std::to_string(b2 - 2) + "-fold blowup of S^2 x Sigma_" + std::to_string(genus);
}

bool orientation_reversing_exists(const DullGraph& g) { return betti(g)[2] == 2; }

ValidationReport localization_check(const FixedData& fd) {
  ValidationReport report;
  for (const auto& comp : fd.components) {
    if (const auto* iso = std::get_if<IsolatedFixed>(&comp)) {
      const long long product = iso->w1 * iso->w2;
      if (iso->role == FixedRole::Interior && product >= 0) {
        report.add("weight-signs", "non-extremal point '" + iso->id +
                                       "' must have one positive and one negative weight");
      }
      if (iso->role != FixedRole::Interior && product <= 0) {
        report.add("weight-signs",
                   "extremal point '" + iso->id + "' must have weights of equal sign");
      }
    } else {
      const auto& s = std::get<SurfaceFixed>(comp);
      const int expected = (s.role == FixedRole::Min) ? 1 : -1;
      if (s.role == FixedRole::Interior) {
        report.add("surface-role", "surface '" + s.id + "' must be extremal");
      } else if (s.normal_weight != expected) {
        report.add("normal-weight", "surface '" + s.id + "' has normal weight " +
                                        std::to_string(s.normal_weight) + ", expected " +
                                        std::to_string(expected));
      }
    }
  }
  if (!report.ok()) return report;

  const auto one = integrate_abbv(fd, unit_class(fd));
  if (!one.is_zero()) {
    report.add("residue-sum", "integral of 1 does not vanish: " + one.to_string());
  }
  for (const auto& comp : fd.components) {
    const auto* s = std::get_if<SurfaceFixed>(&comp);
    if (!s) continue;  // epsilon classes of isolated points have degree 4
    const auto integral = integrate_abbv(fd, epsilon_class(fd, s->id));
    if (!integral.is_zero()) {
      report.add("epsilon-integral", "integral of the degree-2 class at '" + s->id +
                                         "' does not vanish: " + integral.to_string());
    }
  }
  return report;
}

ValidationReport localization_consistency(const DullGraph& g, const Orientation& o) {
  return localization_check(fixed_data_of(g, o));
}

}  // namespace hamgraph
