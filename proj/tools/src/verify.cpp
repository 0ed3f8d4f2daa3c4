#include "hexbubble_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "hexbubble/constants.hpp"
#include "hexbubble/embedded.hpp"
#include "hexbubble/kissing.hpp"
#include "hexbubble/oracle.hpp"
#include "hexbubble/singlebubble.hpp"
#include "hexbubble/solver.hpp"

namespace hexbubble::cli {
namespace {

struct Sizes {
  int oracle_cases;
  int dominance_points;
  int geometry_cases;
  int perturb_trials;
  int geodesic_pairs;
  int polygons;
  int closed_form_cases;
  int degree8_cases;
};

Sizes sizes_for(Suite s) {
  if (s == Suite::Full) return {20, 1000, 50, 500, 10000, 1000, 20, 20};
  return {4, 200, 8, 200, 2000, 200, 20, 10};
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.next(); }
  int integer(int lo, int hi) { return std::min(hi, lo + static_cast<int>(rng_.next() * (hi - lo + 1))); }

 private:
  LcgUniform rng_;
};

CheckResult check(std::string name, bool ok, std::string detail) { return {std::move(name), ok, std::move(detail)}; }

CheckResult alpha0_check() {
  const double a0 = find_alpha0();
  const double gap = std::abs(phase_gap(a0));
  const bool ok = a0 >= 0.147 && a0 <= 0.157 && gap <= 1e-8 && solve(a0).kase == ConfigurationCase::Both;
  return check("alpha0-bracket", ok, fmt::format("alpha0={:.10f} |gap|<=1e-8:{}", a0, gap <= 1e-8));
}

CheckResult iso_check() {
  const auto iso = isoperimetric_optimum(1.0);
  const double expected = 2.0 * std::sqrt(2.0) * kFourthRoot3;
  const PolyChain hex = isoperimetric_polygon(1.0);
  double lo = 1e300;
  double hi = 0.0;
  for (std::size_t i = 0; i < hex.edge_count(); ++i) {
    const auto [p, q] = hex.edge(i);
    lo = std::min(lo, hex_norm(q - p));
    hi = std::max(hi, hex_norm(q - p));
  }
  const bool ok = std::abs(iso.perimeter - expected) <= 1e-12 && hex.edge_count() == 6 && hi - lo <= 1e-12 &&
                  std::abs(polygon_area(hex) - 1.0) <= 1e-12;
  return check("isoperimetric-constant", ok, fmt::format("perimeter={:.12f}", iso.perimeter));
}

CheckResult closed_form_check(Sampler& s, int n) {
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const double a = s.uniform(1e-4, 0.125 - 1e-6);
    const double expected = 2.0 * kFourthRoot3 * (std::sqrt(2.0) + std::sqrt(a));
    if (std::abs(kissing_minimum(a).perimeter - expected) > 1e-12) ++bad;
  }
  const auto c2 = unequal_candidates(0.125)[1];
  const double handoff = std::abs(kissing_perimeter_branch(c2.L1, c2.L2, 0.125, c2.regime) - p3_minimizer(0.125).value);
  return check("kissing-closed-form", bad == 0 && handoff <= 1e-10,
               fmt::format("{} alpha in (0,1/8), {} off; handoff<=1e-10:{}", n, bad, handoff <= 1e-10));
}

CheckResult oracle_eq1_check(Sampler& s, int n) {
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const double V = s.uniform(0.2, 2.0);
    const double L = s.uniform(0.1, 2.5) * std::sqrt(V);
    const auto sol = solve_fixed_side(L, V);
    const double span = sol.perimeter;
    const BoxSpec box(
        {0.0, 0.0}, {span, span},
        [&](std::span<const double> p) { return fixed_side_objective(p[0], p[1], L, V).has_value(); },
        {sol.x[0], sol.x[1]});
    const auto r = grid_refine_min([&](std::span<const double> p) { return *fixed_side_objective(p[0], p[1], L, V); },
                                   box, 200, 50);
    if (std::abs(r.value - sol.perimeter) > 1e-5) ++bad;
  }
  return check("oracle-fixed-side", bad == 0, fmt::format("{} (L,V) pairs, {} off", n, bad));
}

CheckResult oracle_eq2_check(Sampler& s, int n) {
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const double a = s.uniform(0.01, 1.0);
    const BoxSpec box({0.05, 0.05}, {3.0, 3.0}, nullptr, {1.0, 1.0});
    const auto r =
        grid_refine_min([&](std::span<const double> p) { return kissing_perimeter(p[0], p[1], a); }, box, 200, 50);
    if (std::abs(r.value - kissing_minimum(a).perimeter) > 1e-5) ++bad;
  }
  return check("oracle-kissing", bad == 0, fmt::format("{} alpha values, {} off", n, bad));
}

CheckResult oracle_eq9_check(Sampler& s, int n) {
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const double a = s.uniform(0.01, 1.0);
    auto value = [&](std::span<const double> p) { return rho1(p[0], p[1], a); };
    auto feasible = [&](std::span<const double> p) {
      try {
        (void)rho1(p[0], p[1], a);
        return true;
      } catch (const std::exception&) {
        return false;
      }
    };
    const double hi = inner_max_width(a);
    const EmbeddedMinimum m = minimize_rho1(a);
    const BoxSpec box({1e-3, 1e-3}, {hi, 4.0}, feasible, {m.L1, m.L2});
    const auto r = grid_refine_min(value, box, 200, 50);
    if (std::abs(r.value - m.value) > 1e-5) ++bad;
  }
  return check("oracle-embedded", bad == 0, fmt::format("{} alpha values, {} off", n, bad));
}

CheckResult degree8_check(Sampler& s, int n) {
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const double a = s.uniform(0.01, 1.0);
    const auto m = p3_minimizer(a);
    const Poly8 p = build_degree8(a);
    const auto roots = poly_real_roots(p);
    const bool near = std::any_of(roots.begin(), roots.end(), [&](double r) { return r > 0.0 && std::abs(r - m.L) <= 1e-8; });
    if (std::abs(p(m.L)) > 1e-6 * p.max_abs_coefficient() || !near) ++bad;
  }
  return check("degree8-consistency", bad == 0, fmt::format("{} alpha values, {} off", n, bad));
}

CheckResult p3_dominance_check(Sampler& s, int n, const VerifyOptions& o) {
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const double a = s.uniform(0.01, 1.0);
    const double L = s.uniform(0.05, 4.0);
    const double value = o.p3(L, a);
    const auto e = equal_perimeters(L, a);
    for (const auto& other : {e.p4, e.p5, e.p6}) {
      if (other && value > *other + 1e-12) ++bad;
    }
  }
  for (int i = 0; i < 50; ++i) {
    const double a = 0.125 + (1.0 - 0.125) * i / 49.0;
    const double best = o.p3(p3_minimizer(a).L, a);
    for (const auto& c : unequal_candidates(a)) {
      if (c.admissible && best > kissing_perimeter_branch(c.L1, c.L2, a, c.regime) + 1e-12) ++bad;
    }
  }
  return check("p3-dominance", bad == 0, fmt::format("{} violations", bad));
}

CheckResult p2_over_p1_check(Sampler& s, int n) {
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const double V = s.uniform(0.01, 2.0);
    const double L = s.uniform(p2_domain_min(V), 4.0 * std::sqrt(V) + p2_domain_min(V));
    if (perimeter_P2(L, V) < perimeter_P1(L, V) - 1e-12) ++bad;
  }
  return check("p2-over-p1", bad == 0, fmt::format("{} violations", bad));
}

CheckResult rho_dominance_check(Sampler& s, int n) {
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const double a = s.uniform(1e-3, 1.0);
    if (minimize_rho1(a).value > rho2_minimum(a).value + 1e-12) ++bad;
  }
  return check("rho1-over-rho2", bad == 0, fmt::format("{} violations", bad));
}

CheckResult geometry_check(Sampler& s, int n, int trials, std::uint64_t seed) {
  int bad = 0;
  int not_minimal = 0;
  for (int i = 0; i < n; ++i) {
    const double a = s.uniform(0.01, 1.0);
    const auto r = solve(a);
    for (const auto& sol : r.solutions) {
      const auto m = double_bubble_perimeter(sol.geometry_a, sol.geometry_b);
      if (std::abs(polygon_area(sol.geometry_a) - 1.0) > 1e-9 || std::abs(polygon_area(sol.geometry_b) - a) > 1e-9 ||
          std::abs(m.total - sol.perimeter) > 1e-9) {
        ++bad;
      }
    }
    const ParameterFamily family = r.kase == ConfigurationCase::Kissing ? kissing_family(kissing_minimum(a))
                                                                         : embedded_family(embedded_minimum(a));
    if (!perturb_local_min(family, trials, 1e-3, seed + static_cast<std::uint64_t>(i)).local_minimum) ++not_minimal;
  }
  return check("geometry-roundtrip", bad == 0 && not_minimal == 0,
               fmt::format("{} alpha values, {} off, {} not locally minimal", n, bad, not_minimal));
}

CheckResult geodesic_check(Sampler& s, int n) {
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const PlanePoint p{s.uniform(-5, 5), s.uniform(-5, 5)};
    const PlanePoint q{s.uniform(-5, 5), s.uniform(-5, 5)};
    const PolyChain g = geodesic_path(p, q);
    if (g.edge_count() > 2 || std::abs(polyline_length(g) - hex_norm(q - p)) > 1e-12) ++bad;
  }
  return check("geodesic-length", bad == 0, fmt::format("{} pairs, {} off", n, bad));
}

CheckResult circumscribe_check(Sampler& s, int n) {
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const int k = s.integer(3, 12);
    const double ax = s.uniform(0.3, 2.0);
    const double by = s.uniform(0.3, 2.0);
    const double rot = s.uniform(0.0, std::numbers::pi);
    std::vector<double> angles;
    for (int j = 0; j < k; ++j) angles.push_back(s.uniform(0.0, 2.0 * std::numbers::pi));
    std::sort(angles.begin(), angles.end());
    std::vector<PlanePoint> pts;
    for (double t : angles) {
      const double ex = ax * std::cos(t);
      const double ey = by * std::sin(t);
      const PlanePoint p{ex * std::cos(rot) - ey * std::sin(rot), ex * std::sin(rot) + ey * std::cos(rot)};
      if (pts.empty() || std::hypot(p.x - pts.back().x, p.y - pts.back().y) > 1e-6) pts.push_back(p);
    }
    if (pts.size() < 3) continue;
    try {
      const PolyChain poly = PolyChain::closed(pts);
      const PolyChain hex = circumscribing_hexagon(poly).boundary();
      if (polyline_length(hex) > polyline_length(poly) + 1e-12 || polygon_area(hex) < polygon_area(poly) - 1e-12) {
        ++bad;
      }
    } catch (const std::exception&) {
      // nearly collinear draws are not polygons; skip
    }
  }
  return check("circumscribing-hexagon", bad == 0, fmt::format("{} polygons, {} off", n, bad));
}

CheckResult phase_uniqueness_check() {
  int changes = 0;
  double prev = phase_gap(1e-3);
  for (int i = 1; i <= 1000; ++i) {
    const double g = phase_gap(i / 1000.0);
    if ((g < 0.0) != (prev < 0.0)) ++changes;
    prev = g;
  }
  return check("phase-uniqueness", changes == 1, fmt::format("{} sign changes", changes));
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::text(const VerifyOptions& options) const {
  std::string out = fmt::format("hexbubble verify suite={} seed={}\n",
                                options.suite == Suite::Full ? "full" : "quick", options.seed);
  int failed = 0;
  for (const auto& c : checks) {
    out += fmt::format("{} {:<24} {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
    if (!c.passed) ++failed;
  }
  out += fmt::format("{} checks, {} failed\n", checks.size(), failed);
  return out;
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyOptions o = options;
  if (!o.p3) o.p3 = [](double L, double a) { return p3(L, a); };
  const Sizes n = sizes_for(o.suite);
  Sampler s(o.seed);
  VerifyReport r;
  r.checks.push_back(alpha0_check());
  r.checks.push_back(iso_check());
  r.checks.push_back(closed_form_check(s, n.closed_form_cases));
  r.checks.push_back(oracle_eq1_check(s, n.oracle_cases));
  r.checks.push_back(oracle_eq2_check(s, n.oracle_cases));
  r.checks.push_back(oracle_eq9_check(s, n.oracle_cases));
  r.checks.push_back(degree8_check(s, n.degree8_cases));
  r.checks.push_back(p3_dominance_check(s, n.dominance_points, o));
  r.checks.push_back(p2_over_p1_check(s, n.dominance_points));
  r.checks.push_back(rho_dominance_check(s, n.dominance_points));
  r.checks.push_back(geometry_check(s, n.geometry_cases, n.perturb_trials, o.seed));
  r.checks.push_back(geodesic_check(s, n.geodesic_pairs));
  r.checks.push_back(circumscribe_check(s, n.polygons));
  r.checks.push_back(phase_uniqueness_check());
  return r;
}

}  // namespace hexbubble::cli
