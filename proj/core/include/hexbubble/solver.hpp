#pragma once

// Global minimizer over the embedded and kissing configurations.

#include <string>
#include <utility>
#include <vector>

#include "hexbubble/embedded.hpp"
#include "hexbubble/hexnorm.hpp"
#include "hexbubble/kissing.hpp"

namespace hexbubble {

enum class ConfigurationCase { Embedded, Kissing, Both };

/// "embedded", "kissing" or "both".
const char* to_string(ConfigurationCase c) noexcept;

/// Perimeters closer than this are reported as a tie.
inline constexpr double kTieTolerance = 1e-9;

struct NamedSide {
  std::string name;
  double length = 0.0;
};

struct CaseSolution {
  ConfigurationCase tag = ConfigurationCase::Kissing;
  double perimeter = 0.0;
  double L1 = 0.0;
  double L2 = 0.0;
  double joint_length = 0.0;
  std::vector<NamedSide> sides;
  PolyChain geometry_a;  // volume 1, leftmost-lowest vertex at the origin
  PolyChain geometry_b;  // volume alpha
};

struct DoubleBubbleResult {
  double alpha = 0.0;
  ConfigurationCase kase = ConfigurationCase::Kissing;
  double perimeter = 0.0;
  double embedded_perimeter = 0.0;
  double kissing_perimeter = 0.0;
  /// One entry, or two (embedded first) for a tie.
  std::vector<CaseSolution> solutions;
  double joint_length = 0.0;
};

/// Throws DomainError for alpha outside (0, 1].
DoubleBubbleResult solve(double alpha);

/// embedded_minimum(alpha).perimeter - kissing_minimum(alpha).perimeter.
double phase_gap(double alpha);

/// Root of phase_gap on [0.1, 0.3]. Throws DomainError without a sign change.
double find_alpha0(double tol = 1e-12);

/// `steps` evenly spaced values from alpha_min to alpha_max inclusive.
std::vector<double> sweep_grid(double alpha_min, double alpha_max, int steps);
std::vector<DoubleBubbleResult> sweep(double alpha_min, double alpha_max, int steps);

/// Geometry of the first reported solution.
std::pair<PolyChain, PolyChain> build_figure_geometry(const DoubleBubbleResult& result);

/// Translate both chains so that a's leftmost-lowest vertex is the origin.
std::pair<PolyChain, PolyChain> anchor_pair(const PolyChain& a, const PolyChain& b);

CaseSolution embedded_case(const EmbeddedSolution& s);
CaseSolution kissing_case(const KissingSolution& s);

}  // namespace hexbubble
