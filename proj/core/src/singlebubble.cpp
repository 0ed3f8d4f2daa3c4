#include "hexbubble/singlebubble.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hexbubble/constants.hpp"
#include "hexbubble/error.hpp"

namespace hexbubble {
namespace {

// Sides this close to zero are rounding noise from closed forms that vanish exactly.
constexpr double kSideSlack = 1e-12;

void require_positive(double L, double V, const char* who) {
  if (!std::isfinite(L) || L < kMinFixedSide) throw DomainError(std::string(who) + ": fixed side L must be >= 1e-8");
  if (!std::isfinite(V) || V <= 0.0) throw DomainError(std::string(who) + ": volume must be positive");
}

double clamp_side(double s) { return (s < 0.0 && s > -kSideSlack) ? 0.0 : s; }

}  // namespace

const char* to_string(Regime r) noexcept { return r == Regime::SixSided ? "six-sided" : "four-sided"; }

Regime regime_for(double L, double V) noexcept {
  return 3.0 * kSqrt3 * L * L < 16.0 * V ? Regime::SixSided : Regime::FourSided;
}

double x4_from_volume(double x1, double x2, double L, double V) {
  const double radicand = x1 * x1 + 2.0 * x1 * x2 + 2.0 * L * (x1 + x2) - 4.0 * V / kSqrt3;
  if (radicand < 0.0) throw InfeasibleError("x4_from_volume: infeasible volume (negative radicand)");
  return std::sqrt(radicand);
}

double perimeter_P1(double L, double V) {
  require_positive(L, V, "perimeter_P1");
  return 7.0 * std::sqrt((3.0 * L * L + 4.0 * kSqrt3 * V) / 21.0) - L;
}

double p2_domain_min(double V) { return 2.0 * std::sqrt(V) / kFourthRoot3; }

double perimeter_P2(double L, double V) {
  require_positive(L, V, "perimeter_P2");
  const double radicand = L * L - 4.0 * V / kSqrt3;
  // p2_domain_min itself rounds to a radicand of about -1e-16.
  if (radicand < -1e-14 * L * L) throw InfeasibleError("perimeter_P2: L below the four-sided domain");
  return 3.0 * L - std::sqrt(std::max(radicand, 0.0));
}

double fixed_side_perimeter(double L, double V) {
  return regime_for(L, V) == Regime::SixSided ? perimeter_P1(L, V) : perimeter_P2(L, V);
}

SingleBubbleSolution solve_fixed_side(double L, double V) {
  require_positive(L, V, "solve_fixed_side");
  SingleBubbleSolution s;
  s.L = L;
  s.V = V;
  s.regime = regime_for(L, V);
  if (s.regime == Regime::SixSided) {
    const double mid = std::sqrt((3.0 * L * L + 4.0 * kSqrt3 * V) / 21.0);
    const double end = clamp_side(2.0 * mid - L);
    s.x = {end, mid, mid, mid, end};
    s.perimeter = 7.0 * mid - L;
  } else {
    const double x3 = std::sqrt(L * L - 4.0 * V / kSqrt3);
    const double x2 = clamp_side(L - x3);
    s.x = {0.0, x2, x3, x2, 0.0};
    s.perimeter = 3.0 * L - x3;
  }
  for (double side : s.x) {
    if (side < 0.0) throw InfeasibleError("solve_fixed_side: negative side length");
  }
  return s;
}

std::optional<std::array<double, 5>> fixed_side_sides(double x1, double x2, double L, double V) {
  if (x1 < 0.0 || x2 < 0.0) return std::nullopt;
  const double radicand = x1 * x1 + 2.0 * x1 * x2 + 2.0 * L * (x1 + x2) - 4.0 * V / kSqrt3;
  if (radicand < 0.0) return std::nullopt;
  const double x4 = std::sqrt(radicand);
  const double x3 = L + x1 - x4;
  const double x5 = x1 + x2 - x4;
  // Closed-form optima sit on x5 = 0; allow rounding there.
  const double slack = 1e-12 * (1.0 + L + x4);
  if (x3 < -slack || x5 < -slack) return std::nullopt;
  return std::array<double, 5>{x1, x2, std::max(x3, 0.0), x4, std::max(x5, 0.0)};
}

std::optional<double> fixed_side_objective(double x1, double x2, double L, double V) {
  const auto sides = fixed_side_sides(x1, x2, L, V);
  if (!sides) return std::nullopt;
  return 3.0 * x1 + 2.0 * x2 - (*sides)[3] + 2.0 * L;
}

PolyChain fixed_side_polygon(double L, const std::array<double, 5>& x) {
  const std::array<std::pair<int, double>, 6> steps{{{0, L}, {1, x[0]}, {2, x[1]}, {3, x[2]}, {4, x[3]}, {5, x[4]}}};
  return PolyChain::from_steps({0.0, 0.0}, steps);
}

IsoperimetricOptimum isoperimetric_optimum(double V) {
  if (!std::isfinite(V) || V <= 0.0) throw DomainError("isoperimetric_optimum: volume must be positive");
  const double L0 = std::sqrt(2.0 * V) / (kSqrt3 * kFourthRoot3);
  return {L0, 2.0 * std::sqrt(2.0 * V) * kFourthRoot3};
}

PolyChain isoperimetric_polygon(double V) {
  const double s = isoperimetric_optimum(V).L0;
  return fixed_side_polygon(s, {s, s, s, s, s});
}

}  // namespace hexbubble
