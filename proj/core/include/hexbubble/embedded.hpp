#pragma once

// One bubble pressed into a notch on the right-hand side of the other.
//
// Inner bubble sides x1..x6 run along 0, 60, ..., 300 degrees from its
// bottom-left vertex; its width parameter is L1 = x2 + x3 = x5 + x6. The outer
// bubble's convex hull has sides y1 (0), a = y2 + x5 (60), b = x6 + y3 (120),
// y4 (180), y5 (240), y6 (300) with L2 = a + b = y5 + y6. The notch replaces
// the hull corner between a and b by the inner bubble's x6 and x5 sides, so
// the outer boundary runs y1, y2, x6 (120), x5 (60), y3, y4, y5, y6.

#include <array>
#include <optional>

#include "hexbubble/hexnorm.hpp"
#include "hexbubble/oracle.hpp"

namespace hexbubble {

struct InnerHexagon {
  double L = 0.0;
  double V = 0.0;
  std::array<double, 6> x{};  // x1..x6
  double perimeter = 0.0;
};

/// x2 = x3 = x5 = x6 = L/2, x1 = x4 = (8 sqrt3 V - 3L^2)/(12L),
/// perimeter (9L^2 + 8 sqrt3 V)/(6L). Throws InfeasibleError when x1 < 0.
InnerHexagon inner_hexagon(double L, double V);

/// Largest L with x1 >= 0: sqrt(8 sqrt3 V / 3).
double inner_max_width(double V);

struct OuterNotched {
  double L1 = 0.0;
  double L2 = 0.0;
  double V = 0.0;
  std::array<double, 6> y{};  // y1..y6
  double notch = 0.0;         // x5 = x6 = L1/2
  double hull_volume = 0.0;   // V + (sqrt3/2) x5 x6
  double perimeter = 0.0;     // 2 y1 + 2 L2
};

/// Symmetric notch placement y2 = y3 = (L2 - L1)/2. Throws InfeasibleError for
/// L2 < L1 or y1 < 0.
OuterNotched outer_notched(double L1, double L2, double V);

/// Outer perimeter with the notch slid to an arbitrary y2 (y3 = L2 - L1 - y2),
/// hull volume restored through y1.
double outer_perimeter_at_offset(double L1, double L2, double y2, double V);

/// Volume 1 outside, alpha inside.
double rho1(double L1, double L2, double alpha);
/// Volume alpha outside, 1 inside.
double rho2(double L1, double L2, double alpha);

struct EmbeddedMinimum {
  double L1 = 0.0;
  double L2 = 0.0;
  double value = 0.0;
};

/// Optimal outer span for a given notch: sqrt(8 sqrt3 V_out + 3 L1^2)/3.
double optimal_outer_span(double L1, double outer_volume);

EmbeddedMinimum minimize_rho1(double alpha);
EmbeddedMinimum minimize_rho2_numeric(double alpha);
/// Closed form 2 sqrt(10(1 + alpha))/3^(1/4) at L1 = L2 for alpha <= 2/3,
/// numeric otherwise.
EmbeddedMinimum rho2_minimum(double alpha);

/// Case-2 expressions: outer side carries the removed volume of an L2-wide
/// notch and the joint is L2 (the L2 form), or both use L1 (the L1 variant).
double rho1_case2(double L1, double L2, double alpha, bool use_l1_variant);

struct Case2Report {
  OracleResult l2_form;
  OracleResult l1_variant;
  bool l2_form_equal = false;
  bool l1_variant_equal = false;
};

Case2Report case2_report(double alpha);
/// Whether the L2-form case-2 minimizer has |L2 - L1| <= 1e-6 (1 + L1).
bool case2_check(double alpha);

enum class EmbeddedBranch { Rho1, Rho2 };

struct EmbeddedSolution {
  double alpha = 0.0;
  EmbeddedBranch branch = EmbeddedBranch::Rho1;
  double L1 = 0.0;
  double L2 = 0.0;
  std::array<double, 6> inner_sides{};
  std::array<double, 6> outer_sides{};
  double perimeter = 0.0;
  PolyChain geometry_a;  // volume 1
  PolyChain geometry_b;  // volume alpha
};

EmbeddedSolution embedded_minimum(double alpha);

/// Outer (notched) and inner polygons; the inner bubble's bottom-left vertex
/// sits at y1 e0 + y2 e60. Returns {outer, inner}.
std::pair<PolyChain, PolyChain> embedded_geometry(const std::array<double, 6>& inner_sides,
                                                  const std::array<double, 6>& outer_sides);

/// Perturbation family (L1, x2, x5, L2, y2, y5); x1 and y1 restore the volumes
/// and the opposite sides follow from closure.
ParameterFamily embedded_family(const EmbeddedSolution& s);

}  // namespace hexbubble
