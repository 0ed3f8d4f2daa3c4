// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hexbubble/embedded.hpp"
#include "hexbubble/error.hpp"
#include "hexbubble/hexnorm.hpp"
#include "hexbubble/kissing.hpp"
#include "hexbubble/oracle.hpp"
#include "hexbubble/singlebubble.hpp"
#include "hexbubble/solver.hpp"
#include "hexbubble_cli/app.hpp"
#include "hexbubble_cli/verify.hpp"
#include "test_support.hpp"

namespace hb = hexbubble;
using hb::testing::kS3;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome phase_transition() {
  const auto t0 = std::chrono::steady_clock::now();
  const double a0 = hb::find_alpha0();
  const double dt = seconds_since(t0);
  const double gap = std::abs(hb::embedded_minimum(a0).perimeter - hb::kissing_minimum(a0).perimeter);
  const bool ok = a0 >= 0.147 && a0 <= 0.157 && dt < 1.0 && gap <= 1e-8;
  return {ok, fmt("alpha0=%.12f time=%.3fs gap=%.2e", a0, dt, gap)};
}

Outcome isoperimetric_constant() {
  const double expected = 2.0 * std::sqrt(2.0) * std::pow(3.0, 0.25);
  const hb::IsoperimetricOptimum iso = hb::isoperimetric_optimum(1.0);
  const hb::PolyChain h = hb::isoperimetric_polygon(1.0);
  double lo = INFINITY;
  double hi = 0.0;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto [a, b] = h.edge(e);
    lo = std::min(lo, hb::hex_norm(b - a));
    hi = std::max(hi, hb::hex_norm(b - a));
  }
  const double err = std::abs(iso.perimeter - expected);
  const bool ok = err <= 1e-12 && h.edge_count() == 6 && hi - lo <= 1e-12;
  return {ok, fmt("|P-2sqrt2*3^(1/4)|=%.1e sides=%zu spread=%.1e", err, h.edge_count(), hi - lo)};
}

Outcome small_alpha_closed_form(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ua(0.0, 0.125);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    double a = ua(rng);
    while (a <= 0.0) a = ua(rng);
    const double closed = 2.0 * std::pow(3.0, 0.25) * (std::sqrt(2.0) + std::sqrt(a));
    worst = std::max(worst, std::abs(hb::kissing_minimum(a).perimeter - closed));
  }
  const auto c = hb::unequal_candidates(0.125)[1];
  const double unequal = hb::kissing_perimeter(c.L1, c.L2, 0.125);
  const double equal = hb::p3_minimizer(0.125).value;
  const double collapse = std::sqrt(2.0 * kS3) / 3.0;
  const double branch_gap = std::abs(unequal - equal);
  const double side_gap = std::max(std::abs(c.L1 - collapse), std::abs(c.L2 - collapse));
  const bool ok = worst <= 1e-12 && branch_gap <= 1e-10 && side_gap <= 1e-10;
  return {ok, fmt("20 alpha worst=%.1e branch gap=%.1e side gap=%.1e", worst, branch_gap, side_gap)};
}

Outcome oracle_equivalence(std::mt19937_64& rng) {
  const auto t0 = std::chrono::steady_clock::now();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst1 = 0.0;
  double worst2 = 0.0;
  double worst9 = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double V = 0.1 + 2.9 * u(rng);
    const double L = (0.05 + 2.5 * u(rng)) * std::sqrt(V);
    const hb::SingleBubbleSolution s = hb::solve_fixed_side(L, V);
    const double span = L + 4.0 * std::sqrt(V);
    const hb::BoxSpec box({0.0, 0.0}, {span, span},
                          [&](std::span<const double> p) { return hb::fixed_side_objective(p[0], p[1], L, V).has_value(); },
                          {s.x[0], s.x[1]});
    const auto r = hb::grid_refine_min(
        [&](std::span<const double> p) { return *hb::fixed_side_objective(p[0], p[1], L, V); }, box, 200, 60);
    worst1 = std::max(worst1, std::abs(r.value - s.perimeter));
  }
  for (int i = 0; i < 20; ++i) {
    const double a = 0.005 + 0.995 * u(rng);
    const hb::BoxSpec box({1e-3, 1e-3}, {3.5, 3.5}, nullptr, {1.0, 1.0});
    const auto r =
        hb::grid_refine_min([&](std::span<const double> p) { return hb::kissing_perimeter(p[0], p[1], a); }, box, 200, 60);
    worst2 = std::max(worst2, std::abs(r.value - hb::kissing_minimum(a).perimeter));

    const hb::EmbeddedMinimum m = hb::minimize_rho1(a);
    auto feasible = [&](std::span<const double> p) {
      try {
        return std::isfinite(hb::rho1(p[0], p[1], a));
      } catch (const hb::InfeasibleError&) {
        return false;
      }
    };
    const hb::BoxSpec ebox({1e-4, 1e-4}, {hb::inner_max_width(a), 4.0}, feasible, {m.L1, m.L2});
    const auto e = hb::grid_refine_min([&](std::span<const double> p) { return hb::rho1(p[0], p[1], a); }, ebox, 200, 60);
    worst9 = std::max(worst9, std::abs(e.value - m.value));
  }
  const double own = seconds_since(t0);

  const auto t1 = std::chrono::steady_clock::now();
  hb::cli::VerifyOptions opts;
  opts.suite = hb::cli::Suite::Full;
  const bool suite_ok = hb::cli::run_verify(opts).passed();
  const double suite_time = seconds_since(t1);

  const bool ok = worst1 <= 1e-5 && worst2 <= 1e-5 && worst9 <= 1e-5 && suite_ok && suite_time <= 300.0;
  return {ok, fmt("fixed-side=%.1e kissing=%.1e embedded=%.1e (%.2fs); full suite %s in %.2fs", worst1, worst2, worst9,
                  own, suite_ok ? "passed" : "FAILED", suite_time)};
}

Outcome degree8(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ua(0.0, 1.0);
  double worst_residual = 0.0;
  double worst_root = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = 1e-3 + (1.0 - 1e-3) * ua(rng);
    const hb::Poly8 p = hb::build_degree8(a);
    const hb::P3Minimum m = hb::p3_minimizer(a);
    worst_residual = std::max(worst_residual, std::abs(p(m.L)) / p.max_abs_coefficient());
    double nearest = INFINITY;
    for (double r : hb::poly_real_roots(p)) {
      if (r > 0.0) nearest = std::min(nearest, std::abs(r - m.L));
    }
    worst_root = std::max(worst_root, nearest);
  }
  const bool ok = worst_residual <= 1e-6 && worst_root <= 1e-8;
  return {ok, fmt("20 alpha: |p(L*)|/max|c|<=%.1e root distance<=%.1e", worst_residual, worst_root)};
}

Outcome dominance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int p5_points = 0, p6_points = 0, p5_bad = 0, p6_bad = 0;
  while (p5_points < 1000 || p6_points < 1000) {
    const double a = 1e-3 + (1.0 - 1e-3) * u(rng);
    const double L = 0.01 + 4.0 * u(rng);
    const hb::EqualPerimeters e = hb::equal_perimeters(L, a);
    if (e.p5 && p5_points < 1000) {
      ++p5_points;
      if (*e.p3 > *e.p5 + 1e-12) ++p5_bad;
    }
    if (e.p6 && p6_points < 1000) {
      ++p6_points;
      if (*e.p3 > *e.p6 + 1e-12) ++p6_bad;
    }
  }
  int p2_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const double V = 0.01 + 3.0 * u(rng);
    const double L = hb::p2_domain_min(V) * (1.0 + 3.0 * u(rng));
    if (!(hb::perimeter_P2(L, V) > hb::perimeter_P1(L, V) - 1e-12)) ++p2_bad;
  }
  int rho_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const double a = 1e-3 + (1.0 - 1e-3) * u(rng);
    if (hb::minimize_rho1(a).value > hb::rho2_minimum(a).value + 1e-12) ++rho_bad;
  }
  const bool ok = p5_bad + p6_bad + p2_bad + rho_bad == 0;
  return {ok, fmt("violations P3<=P5 %d/1000, P3<=P6 %d/1000, P2>P1 %d/1000, rho1<=rho2 %d/1000", p5_bad, p6_bad,
                  p2_bad, rho_bad)};
}

Outcome geometry_roundtrip(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_volume = 0.0;
  double worst_perimeter = 0.0;
  int not_minimal = 0;
  for (int i = 0; i < 50; ++i) {
    const double a = 1e-3 + (1.0 - 1e-3) * u(rng);
    const hb::DoubleBubbleResult r = hb::solve(a);
    for (const hb::CaseSolution& s : r.solutions) {
      worst_volume = std::max({worst_volume, std::abs(hb::polygon_area(s.geometry_a) - 1.0),
                               std::abs(hb::polygon_area(s.geometry_b) - a)});
      const double measured = hb::double_bubble_perimeter(s.geometry_a, s.geometry_b).total;
      worst_perimeter = std::max(worst_perimeter, std::abs(measured - s.perimeter));
      const hb::ParameterFamily fam = s.tag == hb::ConfigurationCase::Embedded
                                          ? hb::embedded_family(hb::embedded_minimum(a))
                                          : hb::kissing_family(hb::kissing_minimum(a));
      if (!hb::perturb_local_min(fam, 500, 1e-3, 1000u + static_cast<unsigned>(i)).local_minimum) ++not_minimal;
    }
  }
  const bool ok = worst_volume <= 1e-9 && worst_perimeter <= 1e-9 && not_minimal == 0;
  return {ok, fmt("50 alpha: volume err<=%.1e perimeter err<=%.1e, %d not locally minimal", worst_volume,
                  worst_perimeter, not_minimal)};
}

Outcome metric_core(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const hb::PlanePoint p{u(rng), u(rng)};
    const hb::PlanePoint q{u(rng), u(rng)};
    worst = std::max(worst, std::abs(hb::polyline_length(hb::geodesic_path(p, q)) - hb::hex_norm(q - p)));
  }
  int longer = 0;
  for (int i = 0; i < 1000; ++i) {
    const hb::PolyChain poly = hb::PolyChain::closed(hb::testing::random_convex_polygon(rng));
    const hb::PolyChain hull = hb::circumscribing_hexagon(poly).boundary();
    if (hb::polyline_length(hull) > hb::polyline_length(poly) + 1e-12) ++longer;
  }
  const bool ok = worst <= 1e-12 && longer == 0;
  return {ok, fmt("geodesic err<=%.1e over 1e4 pairs; hull longer on %d/1000 polygons", worst, longer)};
}

std::string capture(std::vector<std::string> args) {
  args.insert(args.begin(), "hexbubble");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hb::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

Outcome determinism() {
  const std::vector<std::string> sweep{"sweep", "--from", "0.01", "--to", "1", "--steps", "100"};
  const std::string s1 = capture(sweep);
  const std::string s2 = capture(sweep);
  const std::vector<std::string> verify{"verify", "--suite", "full", "--seed", "2024"};
  const std::string v1 = capture(verify);
  const std::string v2 = capture(verify);
  const bool ok = s1 == s2 && v1 == v2 && s1.rfind("0\n", 0) == 0 && v1.rfind("0\n", 0) == 0;
  return {ok, fmt("sweep %zu bytes %s; verify report %zu bytes %s", s1.size(), s1 == s2 ? "identical" : "DIFFERENT",
                  v1.size(), v1 == v2 ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"phase-transition", phase_transition},
      {"isoperimetric-constant", isoperimetric_constant},
      {"small-alpha-closed-form", [&] { return small_alpha_closed_form(rng); }},
      {"oracle-equivalence", [&] { return oracle_equivalence(rng); }},
      {"degree8-consistency", [&] { return degree8(rng); }},
      {"dominance-inequalities", [&] { return dominance(rng); }},
      {"geometry-roundtrip", [&] { return geometry_roundtrip(rng); }},
      {"metric-core", [&] { return metric_core(rng); }},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %d %-24s %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria, %d failed\n", index, failed);
  return failed == 0 ? 0 : 1;
}
