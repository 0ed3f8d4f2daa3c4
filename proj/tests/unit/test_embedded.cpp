#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hexbubble/embedded.hpp"
#include "hexbubble/error.hpp"
#include "hexbubble/kissing.hpp"
#include "hexbubble/oracle.hpp"
#include "hexbubble/singlebubble.hpp"
#include "test_support.hpp"

namespace hexbubble {
namespace {

using testing::kS3;

const double kR3 = std::pow(3.0, 0.25);

// Lattice hexagon of width L = x2 + x3 = x5 + x6 with x2 and x5 free; x1 is
// solved from the area, which is linear in it.
std::optional<double> free_inner_perimeter(double L, double V, double x2, double x5) {
  const double x3 = L - x2;
  const double x6 = L - x5;
  if (x2 < 0 || x3 < 0 || x5 < 0 || x6 < 0) return std::nullopt;
  auto area = [&](double x1) {
    const double x4 = x1 + x2 - x5;
    std::vector<PlanePoint> v{{0, 0}};
    const double lens[6] = {x1, x2, x3, x4, x5, x6};
    for (int k = 0; k < 5; ++k) v.push_back(v.back() + lens[k] * lattice_direction(k));
    double twice = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const PlanePoint a = v[i];
      const PlanePoint b = v[(i + 1) % v.size()];
      twice += a.x * b.y - a.y * b.x;
    }
    return twice / 2.0;  // signed, so it stays linear in x1
  };
  const double a0 = area(0.0);
  const double slope = area(1.0) - a0;
  const double x1 = (V - a0) / slope;
  const double x4 = x1 + x2 - x5;
  if (x1 < 0 || x4 < 0) return std::nullopt;
  return x1 + x2 + x3 + x4 + x5 + x6;
}

TEST(InnerHexagon, ClosedFormAndCollapse) {
  const InnerHexagon h = inner_hexagon(1.0, 1.0);
  EXPECT_NEAR(h.x[1], 0.5, 1e-15);
  EXPECT_NEAR(h.x[0], (8.0 * kS3 - 3.0) / 12.0, 1e-14);
  EXPECT_NEAR(h.perimeter, (9.0 + 8.0 * kS3) / 6.0, 1e-14);
  const double wmax = inner_max_width(1.0);
  EXPECT_NEAR(wmax, std::sqrt(8.0 * kS3 / 3.0), 1e-15);
  EXPECT_NEAR(inner_hexagon(wmax, 1.0).x[0], 0.0, 1e-12);
  EXPECT_THROW(inner_hexagon(1.01 * wmax, 1.0), InfeasibleError);
}

TEST(InnerHexagon, SymmetricSplitIsOptimal) {
  for (auto [L, V] : {std::pair{1.0, 1.0}, std::pair{0.3, 0.05}, std::pair{2.0, 1.5}}) {
    const InnerHexagon h = inner_hexagon(L, V);
    double best = INFINITY;
    const int n = 400;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const auto p = free_inner_perimeter(L, V, L * i / n, L * j / n);
        if (p) best = std::min(best, *p);
      }
    }
    EXPECT_NEAR(h.perimeter, best, 1e-9) << L << " " << V;
    EXPECT_LE(h.perimeter, best + 1e-12);
  }
}

TEST(OuterNotched, FlushAndFullWidthNotch) {
  const OuterNotched flush = outer_notched(0.8, 0.8, 1.0);
  EXPECT_NEAR(flush.y[1], 0.0, 1e-15);
  EXPECT_NEAR(flush.y[2], 0.0, 1e-15);
  const OuterNotched none = outer_notched(0.0, 1.2, 1.0);
  EXPECT_NEAR(none.perimeter, inner_hexagon(1.2, 1.0).perimeter, 1e-12);
  EXPECT_THROW(outer_notched(1.0, 0.9, 1.0), InfeasibleError);
  EXPECT_THROW(outer_notched(0.1, 4.0, 0.1), InfeasibleError);
}

TEST(OuterNotched, PolygonMatchesReportedValues) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int built = 0;
  for (int i = 0; i < 500; ++i) {
    const double V = 0.2 + 2.0 * u(rng);
    const double L2 = (0.4 + 1.2 * u(rng)) * std::sqrt(V);
    const double L1 = L2 * u(rng);
    OuterNotched o;
    try {
      o = outer_notched(L1, L2, V);
    } catch (const InfeasibleError&) {
      continue;
    }
    const double alpha = 0.01 + 0.2 * u(rng);
    std::array<double, 6> inner{};
    inner[1] = inner[2] = inner[4] = inner[5] = L1 / 2.0;
    inner[0] = inner[3] = 0.0;
    try {
      const InnerHexagon h = inner_hexagon(L1, alpha);
      inner = h.x;
    } catch (const InfeasibleError&) {
      continue;
    }
    if (L1 < 1e-6) continue;
    const auto [outer, in] = embedded_geometry(inner, o.y);
    ++built;
    ASSERT_NEAR(polygon_area(outer), V, 1e-9);
    ASSERT_NEAR(polyline_length(outer), o.perimeter, 1e-9);
    ASSERT_NEAR(o.hull_volume, V + kS3 / 2.0 * (L1 / 2.0) * (L1 / 2.0), 1e-12);
  }
  EXPECT_GT(built, 100);
}

TEST(OuterNotched, SymmetricOffsetIsOptimal) {
  const double L1 = 0.5;
  const double L2 = 1.1;
  const double V = 1.0;
  const double sym = (L2 - L1) / 2.0;
  const double p0 = outer_perimeter_at_offset(L1, L2, sym, V);
  EXPECT_NEAR(p0, outer_notched(L1, L2, V).perimeter, 1e-12);
  for (double d : {0.01, 0.05, 0.2}) {
    EXPECT_GE(outer_perimeter_at_offset(L1, L2, sym + d, V), p0 - 1e-12);
    EXPECT_GE(outer_perimeter_at_offset(L1, L2, sym - d, V), p0 - 1e-12);
  }
}

TEST(Rho, OptimalSpanMinimizesRho1) {
  const double alpha = 0.05;
  for (double L1 : {0.1, 0.25, 0.4}) {
    const double span = optimal_outer_span(L1, 1.0);
    const long double g = testing::golden_min_ld(
        [&](long double L2) { return static_cast<long double>(rho1(L1, static_cast<double>(L2), alpha)); },
        static_cast<long double>(L1), 3.0L);
    EXPECT_NEAR(span, static_cast<double>(g), 1e-6) << L1;
  }
}

TEST(Rho, SymmetricAtOne) {
  for (double L1 : {0.3, 0.6, 0.9}) {
    const double L2 = optimal_outer_span(L1, 1.0);
    EXPECT_NEAR(rho1(L1, L2, 1.0), rho2(L1, L2, 1.0), 1e-12);
  }
}

TEST(Rho2, ClosedFormAtHalf) {
  const EmbeddedMinimum m = rho2_minimum(0.5);
  EXPECT_NEAR(m.value, 2.0 * std::sqrt(15.0) / kR3, 1e-12);
  EXPECT_NEAR(m.L1, m.L2, 1e-12);
  EXPECT_NEAR(rho2(m.L1, m.L2, 0.5), m.value, 1e-12);
}

TEST(Rho2, ClosedFormMatchesNumeric) {
  for (double alpha : {0.05, 0.2, 0.4, 0.6, 2.0 / 3.0}) {
    EXPECT_NEAR(rho2_minimum(alpha).value, minimize_rho2_numeric(alpha).value, 1e-8) << alpha;
  }
}

TEST(Rho, FirstMinimumAlwaysSmaller) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ua(1e-3, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double alpha = ua(rng);
    ASSERT_LE(minimize_rho1(alpha).value, rho2_minimum(alpha).value + 1e-12) << alpha;
  }
}

TEST(Rho1, MatchesGridOracle) {
  for (double alpha : {0.01, 0.05, 0.15, 0.5}) {
    const double hi = 3.0;
    const Feasibility ok = [alpha](std::span<const double> x) {
      if (x[1] < x[0]) return false;
      try {
        return std::isfinite(rho1(x[0], x[1], alpha));
      } catch (const InfeasibleError&) {
        return false;
      }
    };
    const Objective f = [alpha](std::span<const double> x) { return rho1(x[0], x[1], alpha); };
    const EmbeddedMinimum m = minimize_rho1(alpha);
    const BoxSpec box({1e-4, 1e-4}, {hi, hi}, ok, {m.L1, m.L2});
    EXPECT_NEAR(m.value, grid_refine_min(f, box, 200, 60).value, 1e-5) << alpha;
  }
}

TEST(Case2, MinimizerHasEqualSides) {
  for (double alpha : {0.1, 0.5, 1.0}) {
    const Case2Report r = case2_report(alpha);
    EXPECT_TRUE(r.l2_form_equal) << alpha;
    EXPECT_TRUE(r.l1_variant_equal) << alpha;
    EXPECT_TRUE(case2_check(alpha)) << alpha;
  }
}

TEST(EmbeddedMinimum, SmallAlphaKnownValues) {
  const EmbeddedSolution s = embedded_minimum(0.05);
  EXPECT_EQ(s.branch, EmbeddedBranch::Rho1);
  EXPECT_NEAR(s.perimeter, 4.2740277740, 1e-9);
  EXPECT_EQ(s.geometry_a.size(), 8u);
  EXPECT_EQ(s.geometry_b.size(), 6u);
  EXPECT_NEAR(polygon_area(s.geometry_a), 1.0, 1e-9);
  EXPECT_NEAR(polygon_area(s.geometry_b), 0.05, 1e-9);
  const DoubleBubblePerimeter m = double_bubble_perimeter(s.geometry_a, s.geometry_b);
  EXPECT_NEAR(m.total, s.perimeter, 1e-9);
  EXPECT_NEAR(m.joint, s.L1, 1e-9);
}

TEST(EmbeddedMinimum, VanishingInnerBubble) {
  // The inner bubble adds sqrt(8 sqrt3 / 3) sqrt(alpha) + O(alpha) to the single-bubble perimeter.
  const double single = 2.0 * std::sqrt(2.0) * kR3;
  for (double alpha : {1e-4, 1e-5, 1e-6}) {
    const double expected = single + std::sqrt(8.0 * kS3 / 3.0) * std::sqrt(alpha);
    EXPECT_NEAR(embedded_minimum(alpha).perimeter, expected, 3.0 * alpha) << alpha;
  }
  EXPECT_NEAR(embedded_minimum(1e-5).perimeter, single, 1e-2);
}

TEST(EmbeddedMinimum, LosesToKissingAtOne) {
  EXPECT_NEAR(embedded_minimum(1.0).perimeter, 6.7767406336, 1e-9);
  EXPECT_GT(embedded_minimum(1.0).perimeter, kissing_minimum(1.0).perimeter);
}

TEST(EmbeddedFamily, LocalMinimumBelowTransition) {
  for (double alpha : {0.01, 0.05, 0.12}) {
    const EmbeddedSolution s = embedded_minimum(alpha);
    const PerturbationReport r = perturb_local_min(embedded_family(s), 500, 1e-3, 42);
    EXPECT_TRUE(r.local_minimum) << alpha << " worst " << r.worst_change;
    EXPECT_LT(r.skipped, r.trials / 2) << alpha;
  }
}

}  // namespace
}  // namespace hexbubble
