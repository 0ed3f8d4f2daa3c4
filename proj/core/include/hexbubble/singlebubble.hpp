#pragma once

// Single bubble with one side of prescribed length: the perimeter-minimizing
// lattice hexagon of volume V whose bottom side has length L.
//
// Sides run counterclockwise from the origin: L along 0 degrees, then
// x1..x5 along 60, 120, 180, 240 and 300 degrees.

#include <array>
#include <optional>

#include "hexbubble/hexnorm.hpp"

namespace hexbubble {

enum class Regime { SixSided, FourSided };

const char* to_string(Regime r) noexcept;

struct SingleBubbleSolution {
  double L = 0.0;
  double V = 0.0;
  Regime regime = Regime::SixSided;
  std::array<double, 5> x{};  // x1..x5
  double perimeter = 0.0;
};

/// SixSided iff 3 sqrt3 L^2 < 16 V.
Regime regime_for(double L, double V) noexcept;

/// x4 = sqrt(x1^2 + 2 x1 x2 + 2L(x1 + x2) - 4V/sqrt3). Throws InfeasibleError
/// on a negative radicand.
double x4_from_volume(double x1, double x2, double L, double V);

/// Closed-form minimizer for the fixed side. Throws DomainError for
/// L < kMinFixedSide or V <= 0.
SingleBubbleSolution solve_fixed_side(double L, double V);

/// 7 sqrt((3L^2 + 4 sqrt3 V)/21) - L.
double perimeter_P1(double L, double V);

/// 3L - sqrt(L^2 - 4V/sqrt3). Throws InfeasibleError below p2_domain_min(V).
double perimeter_P2(double L, double V);

/// Smallest L for which perimeter_P2 is defined: 2 sqrt(V) / 3^(1/4).
double p2_domain_min(double V);

/// P1 or P2, whichever regime (L, V) falls in.
double fixed_side_perimeter(double L, double V);

/// 3x1 + 2x2 - x4 + 2L over the feasible set (x1, x2, x3, x5 >= 0 and a real
/// x4); nullopt outside it.
std::optional<double> fixed_side_objective(double x1, double x2, double L, double V);

/// All five free sides from (x1, x2), or nullopt when infeasible.
std::optional<std::array<double, 5>> fixed_side_sides(double x1, double x2, double L, double V);

/// Counterclockwise polygon with the fixed side from (0,0) to (L,0).
/// Zero-length sides are dropped.
PolyChain fixed_side_polygon(double L, const std::array<double, 5>& x);

struct IsoperimetricOptimum {
  double L0 = 0.0;
  double perimeter = 0.0;
};

/// Regular hexagon of volume V: side sqrt(2V)/3^(3/4), perimeter 2 sqrt(2V) 3^(1/4).
IsoperimetricOptimum isoperimetric_optimum(double V);

/// The regular hexagon of volume V as a polygon, bottom-left vertex at the origin.
PolyChain isoperimetric_polygon(double V);

}  // namespace hexbubble
