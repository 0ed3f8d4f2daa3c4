#include "hexbubble/kissing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hexbubble/constants.hpp"
#include "hexbubble/error.hpp"
#include "hexbubble/numeric.hpp"

namespace hexbubble {
namespace {

constexpr double kRegimeRelTol = 1e-12;
constexpr double kHandoffTol = 1e-12;

void require_alpha(double alpha, const char* who) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0) {
    throw DomainError(std::string(who) + ": alpha must lie in (0, 1]");
  }
}

double branch_perimeter(double L, double V, bool six_sided) {
  return six_sided ? perimeter_P1(L, V) : perimeter_P2(L, V);
}

bool regime_consistent(double L, double V, bool six_sided) {
  const double lhs = 3.0 * kSqrt3 * L * L;
  const double rhs = 16.0 * V;
  return six_sided ? lhs <= rhs * (1.0 + kRegimeRelTol) : lhs >= rhs * (1.0 - kRegimeRelTol);
}

// Squared stationary side length (divided by V) of one bubble, from
// d/dL [P(L) - min(L1, L2)] = 0.
double critical_square(bool six_sided, bool shorter) {
  if (six_sided) {
    const double m = shorter ? 2.0 : 1.0;
    return 4.0 * kSqrt3 * m * m / (21.0 - 3.0 * m * m);
  }
  const double n = shorter ? 2.0 : 3.0;
  return n * n * (4.0 / kSqrt3) / (n * n - 1.0);
}

using Coeffs = std::array<double, 9>;

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  Coeffs out{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

double bisect_poly(const Poly8& p, double lo, double hi) {
  return numeric::bisect_root([&](double x) { return p(x); }, lo, hi, 0.0, 2000);
}

}  // namespace

KissingRegime kissing_regime(double L1, double L2, double alpha) noexcept {
  return {regime_for(L1, 1.0) == Regime::SixSided, regime_for(L2, alpha) == Regime::SixSided};
}

double kissing_perimeter(double L1, double L2, double alpha) {
  return kissing_perimeter_branch(L1, L2, alpha, kissing_regime(L1, L2, alpha));
}

double kissing_perimeter_branch(double L1, double L2, double alpha, KissingRegime branch) {
  return branch_perimeter(L1, 1.0, branch.a_six_sided) + branch_perimeter(L2, alpha, branch.b_six_sided) -
         std::min(L1, L2);
}

std::array<UnequalCandidate, 8> unequal_candidates(double alpha) {
  require_alpha(alpha, "unequal_candidates");
  std::array<UnequalCandidate, 8> rows{};
  const std::array<KissingRegime, 4> regimes{{{true, true}, {false, false}, {true, false}, {false, true}}};
  int row = 0;
  for (const auto& regime : regimes) {
    for (bool l1_shorter : {true, false}) {
      UnequalCandidate& c = rows[static_cast<std::size_t>(row)];
      c.row = ++row;
      c.regime = regime;
      c.l1_shorter = l1_shorter;
      const double k1 = critical_square(regime.a_six_sided, l1_shorter);
      const double k2 = critical_square(regime.b_six_sided, !l1_shorter);
      c.L1 = std::sqrt(k1);
      c.L2 = std::sqrt(k2 * alpha);
      c.alpha_threshold = k1 / k2;
      const bool ordered = l1_shorter ? c.L1 < c.L2 : c.L2 < c.L1;
      c.admissible = ordered && regime_consistent(c.L1, 1.0, regime.a_six_sided) &&
                     regime_consistent(c.L2, alpha, regime.b_six_sided);
    }
  }
  return rows;
}

EqualPerimeters equal_perimeters(double L, double alpha) {
  if (!std::isfinite(L) || L <= 0.0) throw DomainError("equal_perimeters: L must be positive");
  auto eval = [&](KissingRegime r) -> std::optional<double> {
    try {
      return kissing_perimeter_branch(L, L, alpha, r);
    } catch (const InfeasibleError&) {
      return std::nullopt;
    }
  };
  return {eval({true, true}), eval({true, false}), eval({false, true}), eval({false, false})};
}

double p3(double L, double alpha) {
  return 7.0 * std::sqrt((3.0 * L * L + 4.0 * kSqrt3) / 21.0) +
         7.0 * std::sqrt((3.0 * L * L + 4.0 * kSqrt3 * alpha) / 21.0) - 3.0 * L;
}

double p3_derivative(double L, double alpha) {
  return L / std::sqrt((3.0 * L * L + 4.0 * kSqrt3) / 21.0) +
         L / std::sqrt((3.0 * L * L + 4.0 * kSqrt3 * alpha) / 21.0) - 3.0;
}

P3Minimum p3_minimizer(double alpha) {
  require_alpha(alpha, "p3_minimizer");
  const double L = numeric::bisect_root([&](double x) { return p3_derivative(x, alpha); }, 1e-8, 10.0, 1e-12);
  return {L, p3(L, alpha)};
}

double Poly8::operator()(double L) const noexcept {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * L + *it;
  return acc;
}

double Poly8::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

Poly8 build_degree8(double alpha) {
  require_alpha(alpha, "build_degree8");
  Coeffs q{};
  q[0] = 48.0 * alpha;
  q[2] = 12.0 * kSqrt3 * (1.0 + alpha);
  q[4] = 9.0;
  Coeffs r{};
  r[2] = 4.0 * kSqrt3 * (1.0 + alpha);
  r[4] = 6.0;

  Coeffs s{};
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = q[i] / 49.0 - r[i] / 21.0;
  const Coeffs s2 = mul(s, s);
  Poly8 p;
  for (std::size_t i = 0; i + 4 < p.c.size(); ++i) p.c[i + 4] = 4.0 * q[i] / 441.0;
  for (std::size_t i = 0; i < p.c.size(); ++i) p.c[i] -= s2[i];
  return p;
}

std::vector<double> poly_real_roots(const Poly8& p) {
  std::size_t deg = 8;
  while (deg > 0 && p.c[deg] == 0.0) --deg;
  if (deg == 0) return {};
  double bound = 0.0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::abs(p.c[i] / p.c[deg]));
  bound += 1.0;

  constexpr int kScan = 400000;
  std::vector<double> roots;
  double x_prev = -bound;
  double f_prev = p(x_prev);
  for (int i = 1; i <= kScan; ++i) {
    const double x = -bound + 2.0 * bound * i / kScan;
    const double f = p(x);
    if (f_prev == 0.0) {
      roots.push_back(x_prev);
    } else if ((f_prev < 0.0) != (f < 0.0) && f != 0.0) {
      roots.push_back(bisect_poly(p, x_prev, x));
    }
    x_prev = x;
    f_prev = f;
  }
  if (f_prev == 0.0) roots.push_back(x_prev);
  return roots;
}

std::pair<PolyChain, PolyChain> kissing_geometry(const SingleBubbleSolution& a, const SingleBubbleSolution& b) {
  const PolyChain upper = fixed_side_polygon(a.L, a.x);
  const PolyChain lower = fixed_side_polygon(b.L, b.x);
  const double shift = (a.L - b.L) / 2.0;
  std::vector<PlanePoint> mirrored;
  mirrored.reserve(lower.size());
  for (auto it = lower.vertices().rbegin(); it != lower.vertices().rend(); ++it) {
    mirrored.push_back({it->x + shift, -it->y});
  }
  return {upper, PolyChain::closed(std::move(mirrored))};
}

KissingSolution kissing_minimum(double alpha) {
  require_alpha(alpha, "kissing_minimum");
  double L1 = 0.0;
  double L2 = 0.0;
  double perimeter = std::numeric_limits<double>::infinity();
  KissingBranch branch = KissingBranch::EqualP3;
  int row = 0;
  if (alpha < 0.125 - kHandoffTol) {
    for (const auto& c : unequal_candidates(alpha)) {
      if (!c.admissible) continue;
      const double value = kissing_perimeter_branch(c.L1, c.L2, alpha, c.regime);
      // Rows that coincide (a side on its regime boundary) resolve to the lower row.
      if (row == 0 || value < perimeter - 1e-12 * perimeter) {
        perimeter = value;
        L1 = c.L1;
        L2 = c.L2;
        row = c.row;
        branch = KissingBranch::UnequalCandidate;
      }
    }
  }
  if (branch == KissingBranch::EqualP3) {
    const P3Minimum m = p3_minimizer(alpha);
    L1 = L2 = m.L;
    perimeter = m.value;
  }
  SingleBubbleSolution side_a = solve_fixed_side(L1, 1.0);
  SingleBubbleSolution side_b = solve_fixed_side(L2, alpha);
  auto [ga, gb] = kissing_geometry(side_a, side_b);
  return KissingSolution{alpha, L1, L2, perimeter, branch, row, side_a, side_b, std::move(ga), std::move(gb)};
}

ParameterFamily kissing_family(const KissingSolution& s) {
  ParameterFamily family;
  family.base = {s.L1, s.L2, s.side_a.x[0], s.side_a.x[1], s.side_b.x[0], s.side_b.x[1]};
  const double alpha = s.alpha;
  family.build = [alpha](std::span<const double> p) -> std::optional<std::pair<PolyChain, PolyChain>> {
    if (p[0] < kMinFixedSide || p[1] < kMinFixedSide) return std::nullopt;
    const auto xa = fixed_side_sides(p[2], p[3], p[0], 1.0);
    const auto xb = fixed_side_sides(p[4], p[5], p[1], alpha);
    if (!xa || !xb) return std::nullopt;
    SingleBubbleSolution a{p[0], 1.0, Regime::SixSided, *xa, 0.0};
    SingleBubbleSolution b{p[1], alpha, Regime::SixSided, *xb, 0.0};
    return kissing_geometry(a, b);
  };
  return family;
}

}  // namespace hexbubble
