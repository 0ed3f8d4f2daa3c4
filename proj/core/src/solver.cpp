#include "hexbubble/solver.hpp"

#include <algorithm>
#include <cmath>

#include "hexbubble/error.hpp"
#include "hexbubble/numeric.hpp"

namespace hexbubble {
namespace {

void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0) throw DomainError("solve: alpha must lie in (0, 1]");
}

}  // namespace

const char* to_string(ConfigurationCase c) noexcept {
  switch (c) {
    case ConfigurationCase::Embedded:
      return "embedded";
    case ConfigurationCase::Kissing:
      return "kissing";
    case ConfigurationCase::Both:
      return "both";
  }
  return "unknown";
}

std::pair<PolyChain, PolyChain> anchor_pair(const PolyChain& a, const PolyChain& b) {
  const auto& v = a.vertices();
  const auto it = std::min_element(v.begin(), v.end(), [](PlanePoint p, PlanePoint q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  const PlanePoint shift = -*it;
  return {a.translated(shift).counterclockwise(), b.translated(shift).counterclockwise()};
}

CaseSolution embedded_case(const EmbeddedSolution& s) {
  auto [a, b] = anchor_pair(s.geometry_a, s.geometry_b);
  std::vector<NamedSide> sides;
  for (int i = 0; i < 6; ++i) sides.push_back({"x" + std::to_string(i + 1), s.inner_sides[static_cast<std::size_t>(i)]});
  for (int i = 0; i < 6; ++i) sides.push_back({"y" + std::to_string(i + 1), s.outer_sides[static_cast<std::size_t>(i)]});
  return CaseSolution{ConfigurationCase::Embedded, s.perimeter, s.L1, s.L2, s.L1, std::move(sides), std::move(a),
                      std::move(b)};
}

CaseSolution kissing_case(const KissingSolution& s) {
  auto [a, b] = anchor_pair(s.geometry_a, s.geometry_b);
  std::vector<NamedSide> sides;
  sides.push_back({"L1", s.L1});
  for (int i = 0; i < 5; ++i) sides.push_back({"a.x" + std::to_string(i + 1), s.side_a.x[static_cast<std::size_t>(i)]});
  sides.push_back({"L2", s.L2});
  for (int i = 0; i < 5; ++i) sides.push_back({"b.x" + std::to_string(i + 1), s.side_b.x[static_cast<std::size_t>(i)]});
  return CaseSolution{ConfigurationCase::Kissing, s.perimeter,      s.L1,         s.L2, std::min(s.L1, s.L2),
                      std::move(sides),           std::move(a),     std::move(b)};
}

DoubleBubbleResult solve(double alpha) {
  require_alpha(alpha);
  const EmbeddedSolution e = embedded_minimum(alpha);
  const KissingSolution k = kissing_minimum(alpha);
  DoubleBubbleResult r;
  r.alpha = alpha;
  r.embedded_perimeter = e.perimeter;
  r.kissing_perimeter = k.perimeter;
  if (std::abs(e.perimeter - k.perimeter) <= kTieTolerance) {
    r.kase = ConfigurationCase::Both;
    r.solutions.push_back(embedded_case(e));
    r.solutions.push_back(kissing_case(k));
  } else if (e.perimeter < k.perimeter) {
    r.kase = ConfigurationCase::Embedded;
    r.solutions.push_back(embedded_case(e));
  } else {
    r.kase = ConfigurationCase::Kissing;
    r.solutions.push_back(kissing_case(k));
  }
  r.perimeter = std::min(e.perimeter, k.perimeter);
  r.joint_length = r.solutions.front().joint_length;
  return r;
}

double phase_gap(double alpha) { return embedded_minimum(alpha).perimeter - kissing_minimum(alpha).perimeter; }

double find_alpha0(double tol) { return numeric::bisect_root(phase_gap, 0.1, 0.3, tol); }

std::vector<double> sweep_grid(double alpha_min, double alpha_max, int steps) {
  if (steps < 1) throw DomainError("sweep: steps must be >= 1");
  if (!(alpha_min > 0.0) || !(alpha_max <= 1.0) || alpha_min > alpha_max) {
    throw DomainError("sweep: need 0 < alpha_min <= alpha_max <= 1");
  }
  if (steps == 1) {
    if (alpha_min != alpha_max) throw DomainError("sweep: a single step needs alpha_min == alpha_max");
    return {alpha_min};
  }
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        i + 1 == steps ? alpha_max : alpha_min + (alpha_max - alpha_min) * i / (steps - 1);
  }
  return grid;
}

std::vector<DoubleBubbleResult> sweep(double alpha_min, double alpha_max, int steps) {
  std::vector<DoubleBubbleResult> out;
  for (double a : sweep_grid(alpha_min, alpha_max, steps)) out.push_back(solve(a));
  return out;
}

std::pair<PolyChain, PolyChain> build_figure_geometry(const DoubleBubbleResult& result) {
  if (result.solutions.empty()) throw DomainError("build_figure_geometry: result has no solution");
  const CaseSolution& s = result.solutions.front();
  return {s.geometry_a, s.geometry_b};
}

}  // namespace hexbubble
