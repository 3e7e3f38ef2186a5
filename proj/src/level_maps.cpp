#include "hamgraph/level_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace hamgraph {

namespace {

struct Geom {
  std::size_t n = 0;
  std::vector<double> alpha, beta, a;
};

Geom geom_of(const CornerPolytope& p) {
  require_valid_polytope(p);
  Geom g;
  g.n = p.facet_count();
  g.alpha.reserve(g.n);
  g.beta.reserve(g.n);
  g.a.reserve(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    g.alpha.push_back(static_cast<double>(p.normals[i][0]));
    g.beta.push_back(static_cast<double>(p.normals[i][1]));
    g.a.push_back(rat_to_double(p.constants[i]));
  }
  return g;
}

Cx int_pow(Cx base, long long e) {
  Cx out(1.0, 0.0);
  for (long long i = 0; i < e; ++i) out *= base;
  return out;
}

void require_point_size(const Geom& g, const CxVec& x) {
  if (x.size() != g.n) {
    throw Error("point has " + std::to_string(x.size()) + " coordinates, polytope has " +
                std::to_string(g.n) + " facets");
  }
}

double abs2(const Cx& z) { return std::norm(z); }

}  // namespace

std::vector<double> level_residuals(const CornerPolytope& p, const CxVec& x) {
  const Geom g = geom_of(p);
  require_point_size(g, x);
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < g.n; ++i) {
    out.push_back(0.5 * (g.alpha[i] * abs2(x.front()) - abs2(x[i]) + g.beta[i] * abs2(x.back())) -
                  g.a[i]);
  }
  return out;
}

CxVec sample_level(const CornerPolytope& p, double w1, double w2,
                   const std::vector<double>& phases) {
  const Geom g = geom_of(p);
  if (phases.size() != g.n) throw Error("expected one phase per coordinate");

  CxVec x(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    double radicand = 0.0;
    if (i == 0) {
      radicand = 2.0 * w1;
    } else if (i + 1 == g.n) {
      radicand = 2.0 * w2;
    } else {
      radicand = 2.0 * (g.alpha[i] * w1 + g.beta[i] * w2 - g.a[i]);
    }
    if (radicand <= 0.0) {
      throw Error("moment point is not strictly interior (facet " + std::to_string(i) + ")");
    }
    x[i] = std::polar(std::sqrt(radicand), phases[i]);
  }
  return x;
}

std::array<Cx, 2> psi(const CornerPolytope& p, const CxVec& x) {
  const Geom g = geom_of(p);
  require_point_size(g, x);
  Cx u(1.0, 0.0), v(1.0, 0.0);
  for (std::size_t i = 1; i + 1 < g.n; ++i) {
    if (x[i] == Cx(0.0, 0.0)) {
      throw Error("point lies on the chain (coordinate " + std::to_string(i) + " vanishes)");
    }
    u *= int_pow(x[i], p.normals[i][0]);
    v *= int_pow(x[i], p.normals[i][1]);
  }
  return {x.front() * (u / std::abs(u)), (v / std::abs(v)) * x.back()};
}

std::vector<double> image_margins(const CornerPolytope& p, const std::array<Cx, 2>& z) {
  const Geom g = geom_of(p);
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < g.n; ++i) {
    out.push_back(0.5 * (g.alpha[i] * abs2(z[0]) + g.beta[i] * abs2(z[1])) - g.a[i]);
  }
  return out;
}

CxVec psi_inverse(const CornerPolytope& p, const std::array<Cx, 2>& z) {
  const Geom g = geom_of(p);
  CxVec x(g.n);
  x.front() = z[0];
  x.back() = z[1];
  for (std::size_t i = 1; i + 1 < g.n; ++i) {
    const double m = g.alpha[i] * abs2(z[0]) + g.beta[i] * abs2(z[1]) - 2.0 * g.a[i];
    if (m <= 0.0) {
      throw Error("point lies outside the image region (facet " + std::to_string(i) + ")");
    }
    x[i] = Cx(std::sqrt(m), 0.0);
  }
  return x;
}

namespace {

void require_exceptional(const CornerPolytope& p, std::size_t j) {
  for (const auto& e : find_exceptional_facets(p)) {
    if (e.index == j) return;
  }
  throw Error("facet " + std::to_string(j) + " is not exceptional");
}

}  // namespace

CxVec blowdown_map(const CornerPolytope& p, std::size_t j, const CxVec& x) {
  const Geom g = geom_of(p);
  require_point_size(g, x);
  require_exceptional(p, j);
  if (x[j] == Cx(0.0, 0.0)) {
    throw Error("point lies on the exceptional sphere (coordinate " + std::to_string(j) + ")");
  }
  const Cx phase = x[j] / std::abs(x[j]);
  CxVec y;
  y.reserve(g.n - 1);
  for (std::size_t i = 0; i < g.n; ++i) {
    if (i == j) continue;
    if (i == j - 1) {
      y.push_back(x[i] * phase);
    } else if (i == j + 1) {
      y.push_back(phase * x[i]);
    } else {
      y.push_back(x[i]);
    }
  }
  return y;
}

CxVec blowdown_inverse(const CornerPolytope& p, std::size_t j, const CxVec& y) {
  const Geom g = geom_of(p);
  require_exceptional(p, j);
  if (y.size() + 1 != g.n) throw Error("blowdown inverse: dimension mismatch");
  const double eps =
      rat_to_double(p.constants[j] - (p.constants[j - 1] + p.constants[j + 1]));
  const double radicand = abs2(y[j - 1]) + abs2(y[j]) - 2.0 * eps;
  if (radicand <= 0.0) {
    throw Error("point lies outside the blowdown image (facet " + std::to_string(j) + ")");
  }
  CxVec x = y;
  x.insert(x.begin() + static_cast<std::ptrdiff_t>(j), Cx(std::sqrt(radicand), 0.0));
  return x;
}

CxVec F_map(const CxVec& x) {
  CxVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = std::conj(x[x.size() - 1 - i]);
  }
  out.front() = -out.front();
  return out;
}

std::array<Cx, 2> phi_t(const std::array<Cx, 2>& z, double t) {
  const double c = std::cos(std::numbers::pi * t / 2.0);
  const double s = std::sin(std::numbers::pi * t / 2.0);
  return {c * z[0] - s * std::conj(z[1]), c * z[1] + s * std::conj(z[0])};
}

double cutoff_profile(double m, double alpha, double beta) {
  if (!(0.0 < alpha && alpha < beta)) {
    throw Error("cutoff profile requires 0 < alpha < beta");
  }
  if (m <= alpha) return 1.0;
  if (m >= beta) return 0.0;
  const double u = (beta - m) / (beta - alpha);
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

std::array<Cx, 2> g_map(const std::array<Cx, 2>& z, double alpha, double beta) {
  const double m = 0.5 * (abs2(z[0]) + abs2(z[1]));
  return phi_t(z, cutoff_profile(m, alpha, beta));
}

std::array<Cx, 2> g_inverse(const std::array<Cx, 2>& z, double alpha, double beta) {
  const double m = 0.5 * (abs2(z[0]) + abs2(z[1]));
  return phi_t(z, -cutoff_profile(m, alpha, beta));
}

CxVec H_map(const CornerPolytope& p, const CxVec& x, double alpha, double beta,
            double seam_margin) {
  const Geom g = geom_of(p);
  require_point_size(g, x);
  const double threshold = rat_to_double(chain_threshold(p));
  if (!(threshold < alpha && alpha < beta)) {
    throw Error("H requires chain threshold < alpha < beta");
  }
  const double m = 0.5 * (abs2(x.front()) + abs2(x.back()));
  if (m < alpha * (1.0 + seam_margin)) {
    return F_map(x);
  }
  return psi_inverse(mirror(p), g_map(psi(p, x), alpha, beta));
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

// ---------------------------------------------------------------------------
// Verification suite
// ---------------------------------------------------------------------------

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Sampler {
  std::mt19937_64 rng;
  const CornerPolytope& p;
  Geom g;
  double threshold;
  double box;  // sampling box for moment points

  explicit Sampler(const CornerPolytope& poly, std::uint64_t seed)
      : rng(seed), p(poly), g(geom_of(poly)),
        threshold(rat_to_double(chain_threshold(poly))), box(threshold + 3.0) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }

  double margin_of(double w1, double w2) const {
    double m = std::min(w1, w2);
    for (std::size_t i = 1; i + 1 < g.n; ++i) {
      m = std::min(m, g.alpha[i] * w1 + g.beta[i] * w2 - g.a[i]);
    }
    return m;
  }

  std::pair<double, double> moment_point(double min_margin = 0.05) {
    for (int tries = 0; tries < 10000; ++tries) {
      const double w1 = uniform(0.0, box);
      const double w2 = uniform(0.0, box);
      if (margin_of(w1, w2) >= min_margin) return {w1, w2};
    }
    throw Error("sampling failed to find an interior moment point");
  }

  // A moment point on the diagonal line w1 + w2 = m.
  std::pair<double, double> moment_point_at(double m) {
    double best_s = 0.5, best_margin = -1.0;
    for (int tries = 0; tries < 256; ++tries) {
      const double s = uniform(0.05, 0.95);
      const double margin = margin_of(s * m, (1.0 - s) * m);
      if (margin > best_margin) {
        best_margin = margin;
        best_s = s;
      }
      if (margin >= 0.01) break;
    }
    if (best_margin <= 0.0) throw Error("no interior point on the requested diagonal level");
    return {best_s * m, (1.0 - best_s) * m};
  }

  std::vector<double> phases() {
    std::vector<double> out(g.n);
    for (auto& v : out) v = uniform(0.0, kTwoPi);
    return out;
  }

  CxVec level_point(double min_margin = 0.05) {
    const auto [w1, w2] = moment_point(min_margin);
    return sample_level(p, w1, w2, phases());
  }

  CxVec level_point_at(double m) {
    const auto [w1, w2] = moment_point_at(m);
    return sample_level(p, w1, w2, phases());
  }

  Cx unit_phase() { return std::polar(1.0, uniform(0.0, kTwoPi)); }

  std::array<Cx, 2> c2_point(double diag_moment) {
    const double share = uniform(0.1, 0.9);
    return {std::polar(std::sqrt(2.0 * diag_moment * share), uniform(0.0, kTwoPi)),
            std::polar(std::sqrt(2.0 * diag_moment * (1.0 - share)), uniform(0.0, kTwoPi))};
  }

  CxVec tangent(std::size_t n) {
    CxVec u(n);
    double norm2 = 0.0;
    for (auto& v : u) {
      v = Cx(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      norm2 += abs2(v);
    }
    for (auto& v : u) v /= std::sqrt(norm2);
    return u;
  }
};

double dist2(const std::array<Cx, 2>& a, const std::array<Cx, 2>& b) {
  return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
}

double distv(const CxVec& a, const CxVec& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (const double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Standard symplectic pairing sum Im(conj(u_i) v_i) on C^n = R^2n.
double omega(const CxVec& u, const CxVec& v) {
  double out = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    out += std::imag(std::conj(u[i]) * v[i]);
  }
  return out;
}

template <typename Map>
CxVec fd_directional(const Map& f, const CxVec& x, const CxVec& u, double h) {
  CxVec plus = x, minus = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    plus[i] += h * u[i];
    minus[i] -= h * u[i];
  }
  CxVec fp = f(plus), fm = f(minus);
  for (std::size_t i = 0; i < fp.size(); ++i) fp[i] = (fp[i] - fm[i]) / (2.0 * h);
  return fp;
}

struct SuiteRunner {
  const CornerPolytope& p;
  const ToleranceConfig& cfg;
  Sampler sampler;
  VerificationReport report;
  std::size_t samples = 100;

  SuiteRunner(const CornerPolytope& poly, const ToleranceConfig& config)
      : p(poly), cfg(config), sampler(poly, config.rng_seed) {}

  void record(const std::string& name, std::size_t n, double defect, double tol) {
    report.checks.push_back({name, n, defect, tol, defect <= tol});
  }

  template <typename Fn>
  void check(const std::string& name, double tol, Fn&& defect_of_sample) {
    double worst = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
      worst = std::max(worst, defect_of_sample());
    }
    record(name, samples, worst, tol);
  }
};

}  // namespace

VerificationReport run_verification_suite(const CornerPolytope& p, const ToleranceConfig& cfg) {
  SuiteRunner run(p, cfg);
  Sampler& S = run.sampler;
  const Geom g = S.g;
  const std::size_t n = g.n;
  const CornerPolytope mirrored = mirror(p);
  const double alpha = S.threshold + 1.0;
  const double beta = S.threshold + 2.0;
  const double seam = 1e-5;

  run.check("level-residual", cfg.tol_level, [&] {
    return max_abs(level_residuals(p, S.level_point()));
  });

  run.check("psi-moment-intertwining", cfg.tol_level, [&] {
    const CxVec x = S.level_point();
    const auto z = psi(p, x);
    return std::max(std::abs(std::abs(z[0]) - std::abs(x.front())),
                    std::abs(std::abs(z[1]) - std::abs(x.back())));
  });

  run.check("psi-image-margins", cfg.tol_identity, [&] {
    const CxVec x = S.level_point();
    const auto margins = image_margins(p, psi(p, x));
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      worst = std::max(worst, std::abs(margins[i - 1] - 0.5 * abs2(x[i])));
      if (margins[i - 1] <= 0.0) worst = 1.0;  // strict positivity must hold
    }
    return worst;
  });

  if (n > 2) {
    run.check("psi-k-invariance", cfg.tol_identity, [&] {
      const CxVec x = S.level_point();
      const auto z = psi(p, x);
      double worst = 0.0;
      for (std::size_t i = 1; i + 1 < n; ++i) {
        // Flow of the kernel generator alpha_i e_1 - e_i + beta_i e_n.
        const double theta = S.uniform(0.0, 1.0);
        CxVec y = x;
        y.front() *= std::polar(1.0, kTwoPi * g.alpha[i] * theta);
        y[i] *= std::polar(1.0, -kTwoPi * theta);
        y.back() *= std::polar(1.0, kTwoPi * g.beta[i] * theta);
        worst = std::max(worst, dist2(psi(p, y), z));
      }
      return worst;
    });
  } else {
    run.record("psi-k-invariance", 0, 0.0, cfg.tol_identity);  // kernel is trivial for n = 2
  }

  run.check("psi-equivariance", cfg.tol_identity, [&] {
    const CxVec x = S.level_point();
    const Cx l1 = S.unit_phase(), l2 = S.unit_phase();
    CxVec y = x;
    y.front() *= l1;
    y.back() *= l2;
    const auto z = psi(p, x);
    return dist2(psi(p, y), {l1 * z[0], l2 * z[1]});
  });

  run.check("psi-roundtrip", cfg.tol_identity, [&] {
    const auto z = psi(p, S.level_point());
    return dist2(psi(p, psi_inverse(p, z)), z);
  });

  run.check("psi-inverse-level", cfg.tol_level, [&] {
    const auto z = psi(p, S.level_point());
    return max_abs(level_residuals(p, psi_inverse(p, z)));
  });

  const auto exceptional = find_exceptional_facets(p);
  if (!exceptional.empty()) {
    std::size_t pick = 0;
    auto next_j = [&] { return exceptional[pick++ % exceptional.size()].index; };

    run.check("blowdown-level", cfg.tol_level, [&] {
      const std::size_t j = next_j();
      const auto down = blowdown_facet(p, j);
      return max_abs(level_residuals(down, blowdown_map(p, j, S.level_point())));
    });

    run.check("blowdown-margin", cfg.tol_identity, [&] {
      const std::size_t j = next_j();
      const CxVec y = blowdown_map(p, j, S.level_point());
      const double margin = 0.5 * g.alpha[j] * abs2(y.front()) +
                            0.5 * g.beta[j] * abs2(y.back()) - g.a[j];
      return margin > 0.0 ? 0.0 : 1.0;
    });

    run.check("blowdown-roundtrip", cfg.tol_identity, [&] {
      const std::size_t j = next_j();
      const CxVec x = S.level_point();
      const CxVec y = blowdown_map(p, j, x);
      const CxVec back = blowdown_inverse(p, j, y);
      // Round trips close up exactly downstairs, and upstairs up to the
      // kernel action, which psi quotients away.
      const double down = distv(blowdown_map(p, j, back), y);
      const double up = dist2(psi(p, back), psi(p, x));
      return std::max(down, up);
    });

    run.check("blowdown-psi-compose", cfg.tol_identity, [&] {
      const std::size_t j = next_j();
      const auto down = blowdown_facet(p, j);
      const CxVec x = S.level_point();
      return dist2(psi(down, blowdown_map(p, j, x)), psi(p, x));
    });

    run.check("blowdown-slice-form", cfg.tol_fd, [&] {
      const std::size_t j = next_j();
      const CxVec x = S.level_point();
      auto project = [&](CxVec u) {
        // Kill the component along d(|x_j|^2 - |x_{j-1}|^2 - |x_{j+1}|^2).
        auto pairing = [&](const CxVec& v) {
          return 2.0 * (std::real(std::conj(x[j]) * v[j]) -
                        std::real(std::conj(x[j - 1]) * v[j - 1]) -
                        std::real(std::conj(x[j + 1]) * v[j + 1]));
        };
        CxVec grad(x.size(), Cx(0.0, 0.0));
        grad[j] = 2.0 * x[j];
        grad[j - 1] = -2.0 * x[j - 1];
        grad[j + 1] = -2.0 * x[j + 1];
        const double c = pairing(u) / pairing(grad);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] -= c * grad[i];
        return u;
      };
      const CxVec u = project(S.tangent(n));
      const CxVec v = project(S.tangent(n));
      auto map = [&](const CxVec& q) { return blowdown_map(p, j, q); };
      const CxVec du = fd_directional(map, x, u, cfg.fd_step);
      const CxVec dv = fd_directional(map, x, v, cfg.fd_step);
      return std::abs(omega(du, dv) - omega(u, v));
    });
  }

  run.check("f-level", cfg.tol_level, [&] {
    return max_abs(level_residuals(mirrored, F_map(S.level_point())));
  });

  run.check("f-conjugation", cfg.tol_identity, [&] {
    const auto z = psi(p, S.level_point());
    const auto image = psi(mirrored, F_map(psi_inverse(p, z)));
    return dist2(image, {-std::conj(z[1]), std::conj(z[0])});
  });

  run.check("f-equivariance", cfg.tol_level, [&] {
    const CxVec x = S.level_point();
    const Cx lambda = S.unit_phase();
    CxVec acted = x;
    acted.front() *= lambda;
    acted.back() *= std::conj(lambda);
    CxVec expect = F_map(x);
    expect.front() *= lambda;
    expect.back() *= std::conj(lambda);
    return distv(F_map(acted), expect);
  });

  run.check("f-twist", cfg.tol_level, [&] {
    const CxVec x = S.level_point();
    CxVec twisted = x;
    twisted.front() = -twisted.front();
    twisted.back() = -twisted.back();
    return distv(F_map(F_map(x)), twisted);
  });

  run.check("f-negates-form", cfg.tol_fd, [&] {
    const CxVec x = S.level_point();
    const CxVec u = S.tangent(n);
    const CxVec v = S.tangent(n);
    auto map = [](const CxVec& q) { return F_map(q); };
    const CxVec du = fd_directional(map, x, u, cfg.fd_step);
    const CxVec dv = fd_directional(map, x, v, cfg.fd_step);
    return std::abs(omega(du, dv) + omega(u, v));
  });

  run.check("phi-endpoints", cfg.tol_level, [&] {
    const auto z = S.c2_point(S.uniform(0.2, 4.0));
    const double d0 = dist2(phi_t(z, 0.0), z);
    const double d1 = dist2(phi_t(z, 1.0), {-std::conj(z[1]), std::conj(z[0])});
    return std::max(d0, d1);
  });

  run.check("phi-inverse", cfg.tol_level, [&] {
    const auto z = S.c2_point(S.uniform(0.2, 4.0));
    const double t = S.uniform(-1.0, 1.0);
    return dist2(phi_t(phi_t(z, t), -t), z);
  });

  run.check("phi-norm", cfg.tol_level, [&] {
    const auto z = S.c2_point(S.uniform(0.2, 4.0));
    const double t = S.uniform(-1.0, 1.0);
    const auto w = phi_t(z, t);
    return std::abs(std::sqrt(abs2(w[0]) + abs2(w[1])) - std::sqrt(abs2(z[0]) + abs2(z[1])));
  });

  run.check("phi-equivariance", cfg.tol_level, [&] {
    const auto z = S.c2_point(S.uniform(0.2, 4.0));
    const double t = S.uniform(-1.0, 1.0);
    const Cx lambda = S.unit_phase();
    const auto acted = phi_t({lambda * z[0], std::conj(lambda) * z[1]}, t);
    const auto expect = phi_t(z, t);
    return dist2(acted, {lambda * expect[0], std::conj(lambda) * expect[1]});
  });

  run.check("g-cases", cfg.tol_level, [&] {
    const auto inner = S.c2_point(S.uniform(0.05, 1.0) * alpha);
    const auto outer = S.c2_point(beta * S.uniform(1.0, 2.0));
    const double d_in = dist2(g_map(inner, alpha, beta), {-std::conj(inner[1]), std::conj(inner[0])});
    const double d_out = dist2(g_map(outer, alpha, beta), outer);
    return std::max(d_in, d_out);
  });

  run.check("g-roundtrip", cfg.tol_identity, [&] {
    const auto z = S.c2_point(S.uniform(alpha, beta));
    return dist2(g_inverse(g_map(z, alpha, beta), alpha, beta), z);
  });

  run.check("g-norm", cfg.tol_level, [&] {
    const auto z = S.c2_point(S.uniform(alpha, beta));
    const auto w = g_map(z, alpha, beta);
    return std::abs(std::sqrt(abs2(w[0]) + abs2(w[1])) - std::sqrt(abs2(z[0]) + abs2(z[1])));
  });

  run.check("h-seam", cfg.tol_identity, [&] {
    // Both branch formulas are evaluated strictly inside the seam shell and
    // compared through the mirror-side blowup map.
    const double m = alpha * (1.0 + seam * S.uniform(0.05, 0.95));
    const CxVec x = S.level_point_at(m);
    const auto via_f = psi(mirrored, F_map(x));
    const auto via_g = psi(mirrored, psi_inverse(mirrored, g_map(psi(p, x), alpha, beta)));
    return dist2(via_f, via_g);
  });

  run.check("h-moment", cfg.tol_identity, [&] {
    const double m = S.uniform(S.threshold + 0.3, beta + 2.0);
    const CxVec x = S.level_point_at(m);
    const CxVec y = H_map(p, x, alpha, beta, seam);
    return std::abs(0.5 * (abs2(y.front()) + abs2(y.back())) -
                    0.5 * (abs2(x.front()) + abs2(x.back())));
  });

  run.check("h-far", cfg.tol_identity, [&] {
    const double m = beta + S.uniform(0.1, 2.0);
    const CxVec x = S.level_point_at(m);
    return dist2(psi(mirrored, H_map(p, x, alpha, beta, seam)), psi(p, x));
  });

  run.check("h-equivariance", cfg.tol_identity, [&] {
    const double m = S.uniform(S.threshold + 0.3, beta + 2.0);
    const CxVec x = S.level_point_at(m);
    const Cx lambda = S.unit_phase();
    CxVec acted = x;
    acted.front() *= lambda;
    acted.back() *= std::conj(lambda);
    const auto lhs = psi(mirrored, H_map(p, acted, alpha, beta, seam));
    auto rhs = psi(mirrored, H_map(p, x, alpha, beta, seam));
    rhs[0] *= lambda;
    rhs[1] *= std::conj(lambda);
    return dist2(lhs, rhs);
  });

  return run.report;
}

}  // namespace hamgraph
