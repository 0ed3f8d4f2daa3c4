#include "hexbubble/embedded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hexbubble/constants.hpp"
#include "hexbubble/error.hpp"
#include "hexbubble/numeric.hpp"

namespace hexbubble {
namespace {

constexpr int kScanPoints = 1000;
constexpr double kGoldenTol = 1e-10;
constexpr double kSideSlack = 1e-12;

void require_alpha(double alpha, const char* who) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0) {
    throw DomainError(std::string(who) + ": alpha must lie in (0, 1]");
  }
}

double clamp_side(double s) { return (s < 0.0 && s > -kSideSlack) ? 0.0 : s; }

// Bottom and top sides of a lattice hexagon with the four slanted sides given,
// chosen so the hexagon encloses V. Area is linear in the bottom side with
// slope equal to the height.
std::optional<std::pair<double, double>> bottom_and_top(double s60, double s120, double s240, double s300, double V) {
  const double top_offset = (s60 - s120 - s240 + s300) / 2.0;
  const std::array<std::pair<int, double>, 6> steps{
      {{0, 0.0}, {1, s60}, {2, s120}, {3, top_offset}, {4, s240}, {5, s300}}};
  PlanePoint cur{0.0, 0.0};
  double twice = 0.0;
  for (const auto& [dir, len] : steps) {
    const PlanePoint next = cur + len * lattice_direction(dir);
    twice += cur.x * next.y - cur.y * next.x;
    cur = next;
  }
  const double height = (s60 + s120) * kSqrt3 / 2.0;
  if (height <= 0.0) return std::nullopt;
  const double bottom = clamp_side((V - twice / 2.0) / height);
  const double top = clamp_side(bottom + top_offset);
  if (bottom < 0.0 || top < 0.0) return std::nullopt;
  return std::make_pair(bottom, top);
}

double reduced_objective(double L1, double outer_volume, double inner_volume) {
  const double L2 = std::max(L1, optimal_outer_span(L1, outer_volume));
  return outer_notched(L1, L2, outer_volume).perimeter + inner_hexagon(L1, inner_volume).perimeter - L1;
}

// Minimum over L1 of the embedded perimeter with the outer span chosen
// optimally for each L1.
EmbeddedMinimum minimize_embedded(double outer_volume, double inner_volume) {
  const double hi = inner_max_width(inner_volume);
  auto f = [&](double L1) { return reduced_objective(L1, outer_volume, inner_volume); };
  std::vector<double> xs(kScanPoints);
  std::vector<double> fs(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) {
    xs[static_cast<std::size_t>(i)] = hi * (i + 1) / kScanPoints;
    fs[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
  }
  EmbeddedMinimum best{0.0, 0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const bool left_ok = i == 0 || fs[i] <= fs[i - 1];
    const bool right_ok = i + 1 == xs.size() || fs[i] <= fs[i + 1];
    if (!left_ok || !right_ok) continue;
    const double a = i == 0 ? xs[0] / 2.0 : xs[i - 1];
    const double b = i + 1 == xs.size() ? hi : xs[i + 1];
    const auto m = numeric::golden_section_min(f, a, b, kGoldenTol);
    if (m.value < best.value) {
      best = {m.x, std::max(m.x, optimal_outer_span(m.x, outer_volume)), m.value};
    }
  }
  return best;
}

}  // namespace

InnerHexagon inner_hexagon(double L, double V) {
  if (!std::isfinite(L) || L <= 0.0) throw DomainError("inner_hexagon: L must be positive");
  if (!std::isfinite(V) || V <= 0.0) throw DomainError("inner_hexagon: volume must be positive");
  const double x1 = clamp_side((8.0 * kSqrt3 * V - 3.0 * L * L) / (12.0 * L));
  if (x1 < 0.0) throw InfeasibleError("inner_hexagon: L too wide for the volume (x1 < 0)");
  InnerHexagon h;
  h.L = L;
  h.V = V;
  h.x = {x1, L / 2.0, L / 2.0, x1, L / 2.0, L / 2.0};
  h.perimeter = (9.0 * L * L + 8.0 * kSqrt3 * V) / (6.0 * L);
  return h;
}

double inner_max_width(double V) { return std::sqrt(8.0 * kSqrt3 * V / 3.0); }

OuterNotched outer_notched(double L1, double L2, double V) {
  if (!std::isfinite(L1) || L1 < 0.0) throw DomainError("outer_notched: L1 must be nonnegative");
  if (!std::isfinite(L2) || L2 <= 0.0) throw DomainError("outer_notched: L2 must be positive");
  if (!std::isfinite(V) || V <= 0.0) throw DomainError("outer_notched: volume must be positive");
  if (L2 < L1) throw InfeasibleError("outer_notched: L2 < L1 leaves y3 < 0");
  OuterNotched o;
  o.L1 = L1;
  o.L2 = L2;
  o.V = V;
  o.notch = L1 / 2.0;
  o.hull_volume = V + kSqrt3 / 2.0 * o.notch * o.notch;
  const double y1 = clamp_side(2.0 * o.hull_volume / (kSqrt3 * L2) - L2 / 4.0);
  if (y1 < 0.0) throw InfeasibleError("outer_notched: L2 too wide for the volume (y1 < 0)");
  const double y2 = (L2 - L1) / 2.0;
  o.y = {y1, y2, y2, y1, L2 / 2.0, L2 / 2.0};
  o.perimeter = (9.0 * L2 * L2 + 8.0 * kSqrt3 * o.hull_volume) / (6.0 * L2);
  return o;
}

double outer_perimeter_at_offset(double L1, double L2, double y2, double V) {
  const double notch = L1 / 2.0;
  const double y3 = L2 - L1 - y2;
  if (y2 < 0.0 || y3 < 0.0) throw InfeasibleError("outer_perimeter_at_offset: notch leaves the hull side");
  const double a = y2 + notch;
  const double b = notch + y3;
  const double hull_volume = V + kSqrt3 / 2.0 * notch * notch;
  const auto bt = bottom_and_top(a, b, L2 / 2.0, L2 / 2.0, hull_volume);
  if (!bt) throw InfeasibleError("outer_perimeter_at_offset: volume cannot be restored");
  return bt->first + a + b + bt->second + L2;
}

double rho1(double L1, double L2, double alpha) {
  return outer_notched(L1, L2, 1.0).perimeter + inner_hexagon(L1, alpha).perimeter - L1;
}

double rho2(double L1, double L2, double alpha) {
  return outer_notched(L1, L2, alpha).perimeter + inner_hexagon(L1, 1.0).perimeter - L1;
}

double optimal_outer_span(double L1, double outer_volume) {
  return std::sqrt(8.0 * kSqrt3 * outer_volume + 3.0 * L1 * L1) / 3.0;
}

EmbeddedMinimum minimize_rho1(double alpha) {
  require_alpha(alpha, "minimize_rho1");
  return minimize_embedded(1.0, alpha);
}

EmbeddedMinimum minimize_rho2_numeric(double alpha) {
  require_alpha(alpha, "minimize_rho2_numeric");
  return minimize_embedded(alpha, 1.0);
}

EmbeddedMinimum rho2_minimum(double alpha) {
  require_alpha(alpha, "rho2_minimum");
  if (alpha > 2.0 / 3.0) return minimize_rho2_numeric(alpha);
  const double L = 2.0 * std::sqrt(2.0 / 5.0) * std::sqrt(1.0 + alpha) / kFourthRoot3;
  return {L, L, 2.0 * std::sqrt(10.0 * (1.0 + alpha)) / kFourthRoot3};
}

double rho1_case2(double L1, double L2, double alpha, bool use_l1_variant) {
  if (!(L1 > 0.0) || !(L2 > 0.0)) throw DomainError("rho1_case2: side lengths must be positive");
  const double removed = use_l1_variant ? L1 : L2;
  const double joint = use_l1_variant ? L1 : L2;
  const double outer =
      (9.0 * L2 * L2 + 8.0 * kSqrt3 * (1.0 + kSqrt3 / 2.0 * (removed / 2.0) * (removed / 2.0))) / (6.0 * L2);
  const double inner = (9.0 * L1 * L1 + 8.0 * kSqrt3 * alpha) / (6.0 * L1);
  return outer + inner - joint;
}

Case2Report case2_report(double alpha) {
  require_alpha(alpha, "case2_report");
  const double hi = inner_max_width(alpha);
  const double lo = 1e-3 * hi;
  const BoxSpec box({lo, lo}, {hi, hi}, [](std::span<const double> p) { return p[1] <= p[0]; }, {hi, lo});
  auto run = [&](bool variant) {
    return grid_refine_min([&](std::span<const double> p) { return rho1_case2(p[0], p[1], alpha, variant); }, box,
                           200, 60);
  };
  auto equal = [](const OracleResult& r) {
    return std::abs(r.argmin[1] - r.argmin[0]) <= 1e-6 * (1.0 + r.argmin[0]);
  };
  Case2Report report;
  report.l2_form = run(false);
  report.l1_variant = run(true);
  report.l2_form_equal = equal(report.l2_form);
  report.l1_variant_equal = equal(report.l1_variant);
  return report;
}

bool case2_check(double alpha) { return case2_report(alpha).l2_form_equal; }

std::pair<PolyChain, PolyChain> embedded_geometry(const std::array<double, 6>& x, const std::array<double, 6>& y) {
  const std::array<std::pair<int, double>, 8> outer_steps{
      {{0, y[0]}, {1, y[1]}, {2, x[5]}, {1, x[4]}, {2, y[2]}, {3, y[3]}, {4, y[4]}, {5, y[5]}}};
  const PlanePoint start = y[0] * lattice_direction(0) + y[1] * lattice_direction(1);
  const std::array<std::pair<int, double>, 6> inner_steps{
      {{0, x[0]}, {1, x[1]}, {2, x[2]}, {3, x[3]}, {4, x[4]}, {5, x[5]}}};
  return {PolyChain::from_steps({0.0, 0.0}, outer_steps), PolyChain::from_steps(start, inner_steps)};
}

EmbeddedSolution embedded_minimum(double alpha) {
  require_alpha(alpha, "embedded_minimum");
  const EmbeddedMinimum r1 = minimize_rho1(alpha);
  const EmbeddedMinimum r2 = rho2_minimum(alpha);
  const bool use_rho1 = r1.value <= r2.value;
  const EmbeddedMinimum& m = use_rho1 ? r1 : r2;
  const double outer_volume = use_rho1 ? 1.0 : alpha;
  const double inner_volume = use_rho1 ? alpha : 1.0;
  const InnerHexagon inner = inner_hexagon(m.L1, inner_volume);
  const OuterNotched outer = outer_notched(m.L1, m.L2, outer_volume);
  auto polys = embedded_geometry(inner.x, outer.y);
  if (!use_rho1) std::swap(polys.first, polys.second);
  return EmbeddedSolution{alpha,   use_rho1 ? EmbeddedBranch::Rho1 : EmbeddedBranch::Rho2,
                          m.L1,    m.L2,
                          inner.x, outer.y,
                          m.value, std::move(polys.first),
                          std::move(polys.second)};
}

ParameterFamily embedded_family(const EmbeddedSolution& s) {
  const bool rho1_branch = s.branch == EmbeddedBranch::Rho1;
  const double outer_volume = rho1_branch ? 1.0 : s.alpha;
  const double inner_volume = rho1_branch ? s.alpha : 1.0;
  ParameterFamily family;
  family.base = {s.L1, s.inner_sides[1], s.inner_sides[4], s.L2, s.outer_sides[1], s.outer_sides[4]};
  family.build = [outer_volume, inner_volume,
                  rho1_branch](std::span<const double> p) -> std::optional<std::pair<PolyChain, PolyChain>> {
    const double L1 = p[0], x2 = p[1], x5 = p[2], L2 = p[3], y2 = p[4], y5 = p[5];
    const double x3 = L1 - x2;
    const double x6 = L1 - x5;
    const double y6 = L2 - y5;
    const double a = y2 + x5;
    const double b = L2 - a;
    const double y3 = b - x6;
    for (double side : {L1, x2, x3, x5, x6, L2, y2, y3, y5, y6}) {
      if (side < 0.0) return std::nullopt;
    }
    const auto inner = bottom_and_top(x2, x3, x5, x6, inner_volume);
    const auto hull = bottom_and_top(a, b, y5, y6, outer_volume + kSqrt3 / 2.0 * x5 * x6);
    if (!inner || !hull) return std::nullopt;
    const std::array<double, 6> xs{inner->first, x2, x3, inner->second, x5, x6};
    const std::array<double, 6> ys{hull->first, y2, y3, hull->second, y5, y6};
    auto [outer_poly, inner_poly] = embedded_geometry(xs, ys);
    if (rho1_branch) return std::make_pair(std::move(outer_poly), std::move(inner_poly));
    return std::make_pair(std::move(inner_poly), std::move(outer_poly));
  };
  return family;
}

}  // namespace hexbubble
