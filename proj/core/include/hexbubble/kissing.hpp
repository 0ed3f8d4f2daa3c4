#pragma once

// Two hexagons sharing part of one horizontal side. Bubble A (volume 1) sits
// above the shared side with fixed side L1; bubble B (volume alpha) hangs below
// it with fixed side L2, centred on A's side.

#include <array>
#include <optional>
#include <vector>

#include "hexbubble/hexnorm.hpp"
#include "hexbubble/oracle.hpp"
#include "hexbubble/singlebubble.hpp"

namespace hexbubble {

/// Which closed form is active on each side: a for (L1, 1), b for (L2, alpha).
struct KissingRegime {
  bool a_six_sided = true;
  bool b_six_sided = true;

  friend bool operator==(KissingRegime, KissingRegime) = default;
};

KissingRegime kissing_regime(double L1, double L2, double alpha) noexcept;

/// P(L1, 1) + P(L2, alpha) - min(L1, L2) with each P picked by its own regime.
double kissing_perimeter(double L1, double L2, double alpha);

/// Same sum with the closed forms forced to `branch`. Throws InfeasibleError if
/// a forced four-sided radicand is negative.
double kissing_perimeter_branch(double L1, double L2, double alpha, KissingRegime branch);

struct UnequalCandidate {
  int row = 0;  // 1..8
  KissingRegime regime;
  bool l1_shorter = false;
  double L1 = 0.0;
  double L2 = 0.0;
  /// The ordering holds for alpha above (l1_shorter) or below this value.
  double alpha_threshold = 0.0;
  bool admissible = false;
};

/// The eight stationary pairs of the unequal-side problem, one per choice of
/// regime on each side and of the shorter side.
std::array<UnequalCandidate, 8> unequal_candidates(double alpha);

struct EqualPerimeters {
  std::optional<double> p3;  // both six-sided
  std::optional<double> p4;  // A six-sided, B four-sided
  std::optional<double> p5;  // A four-sided, B six-sided
  std::optional<double> p6;  // both four-sided
};

/// Kissing perimeter at L1 = L2 = L under each forced branch; entries whose
/// radicand is negative are empty.
EqualPerimeters equal_perimeters(double L, double alpha);

double p3(double L, double alpha);
double p3_derivative(double L, double alpha);

struct P3Minimum {
  double L = 0.0;
  double value = 0.0;
};

/// Root of p3_derivative on [1e-8, 10] by bisection to 1e-12.
P3Minimum p3_minimizer(double alpha);

/// Degree-8 polynomial in L, ascending coefficients.
struct Poly8 {
  std::array<double, 9> c{};

  [[nodiscard]] double operator()(double L) const noexcept;
  [[nodiscard]] double max_abs_coefficient() const noexcept;
};

/// 4L^4 Q/441 - (Q/49 - R/21)^2 with
/// Q = 9L^4 + 12 sqrt3 (1 + alpha) L^2 + 48 alpha and R = 6L^4 + 4 sqrt3 (1 + alpha) L^2.
Poly8 build_degree8(double alpha);

/// Real roots at sign changes of a dense scan over the Cauchy bound, refined
/// by bisection. Sorted ascending. Roots of even multiplicity are not reported.
std::vector<double> poly_real_roots(const Poly8& p);

enum class KissingBranch { UnequalCandidate, EqualP3 };

struct KissingSolution {
  double alpha = 0.0;
  double L1 = 0.0;
  double L2 = 0.0;
  double perimeter = 0.0;
  KissingBranch branch = KissingBranch::EqualP3;
  int row = 0;  // candidate row for UnequalCandidate
  SingleBubbleSolution side_a;
  SingleBubbleSolution side_b;
  PolyChain geometry_a;
  PolyChain geometry_b;
};

/// Row-2 candidate for alpha < 1/8, the equal-side P3 minimum otherwise.
KissingSolution kissing_minimum(double alpha);

/// Bubbles for explicit fixed sides, each with its closed-form optimal shape.
std::pair<PolyChain, PolyChain> kissing_geometry(const SingleBubbleSolution& a, const SingleBubbleSolution& b);

/// Perturbation family (L1, L2, x1 and x2 of each bubble) around a solution;
/// x4 is recovered from the volume constraint.
ParameterFamily kissing_family(const KissingSolution& s);

}  // namespace hexbubble
