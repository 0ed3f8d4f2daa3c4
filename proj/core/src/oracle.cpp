#include "hexbubble/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hexbubble/error.hpp"

namespace hexbubble {
namespace {

constexpr double kDecreaseSlack = 1e-10;
constexpr int kMaxMovesPerRound = 100000;

// Park-Miller minimal standard constants (std::minstd_rand).
constexpr std::uint32_t kLcgA = 48271;
constexpr std::uint32_t kLcgM = 2147483647;

std::vector<std::vector<double>> pattern_moves(std::size_t dim) {
  std::vector<std::vector<double>> moves;
  for (std::size_t i = 0; i < dim; ++i) {
    for (double s : {1.0, -1.0}) {
      std::vector<double> m(dim, 0.0);
      m[i] = s;
      moves.push_back(std::move(m));
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (double si : {1.0, -1.0}) {
        for (double sj : {1.0, -1.0}) {
          std::vector<double> m(dim, 0.0);
          m[i] = si;
          m[j] = sj;
          moves.push_back(std::move(m));
        }
      }
    }
  }
  return moves;
}

}  // namespace

BoxSpec::BoxSpec(std::vector<double> lower, std::vector<double> upper, Feasibility feasible,
                 std::vector<double> witness)
    : lower_(std::move(lower)), upper_(std::move(upper)), feasible_(std::move(feasible)) {
  if (lower_.empty() || lower_.size() != upper_.size() || witness.size() != lower_.size()) {
    throw DomainError("BoxSpec: dimension mismatch");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]) || lower_[i] > upper_[i]) {
      throw DomainError("BoxSpec: bounds must be finite and ordered");
    }
  }
  if (!feasible_) feasible_ = [](std::span<const double>) { return true; };
  if (!admits(witness)) throw DomainError("BoxSpec: witness is not a feasible point of the box");
}

bool BoxSpec::admits(std::span<const double> x) const {
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
  }
  return feasible_(x);
}

OracleResult grid_refine_min(const Objective& objective, const BoxSpec& box, int grid, int refine_iters) {
  if (grid < 16) throw DomainError("grid_refine_min: grid must be >= 16");
  const std::size_t dim = box.dimension();
  const auto& lo = box.lower();
  const auto& hi = box.upper();

  std::vector<double> step(dim);
  for (std::size_t i = 0; i < dim; ++i) step[i] = (hi[i] - lo[i]) / (grid - 1);

  OracleResult best{{}, std::numeric_limits<double>::infinity()};
  std::vector<std::size_t> idx(dim, 0);
  std::vector<double> x(dim);
  for (;;) {
    for (std::size_t i = 0; i < dim; ++i) {
      x[i] = idx[i] + 1 == static_cast<std::size_t>(grid) ? hi[i] : lo[i] + idx[i] * step[i];
    }
    if (box.admits(x)) {
      const double v = objective(x);
      if (std::isfinite(v) && v < best.value) best = {x, v};
    }
    std::size_t k = 0;
    while (k < dim && ++idx[k] == static_cast<std::size_t>(grid)) idx[k++] = 0;
    if (k == dim) break;
  }
  if (best.argmin.empty()) throw InfeasibleError("grid_refine_min: no feasible grid point");

  const auto moves = pattern_moves(dim);
  std::vector<double> trial(dim);
  for (int round = 0; round < refine_iters; ++round) {
    for (int n = 0; n < kMaxMovesPerRound; ++n) {
      bool improved = false;
      for (const auto& m : moves) {
        for (std::size_t i = 0; i < dim; ++i) trial[i] = best.argmin[i] + step[i] * m[i];
        if (!box.admits(trial)) continue;
        const double v = objective(trial);
        if (std::isfinite(v) && v < best.value) {
          best = {trial, v};
          improved = true;
        }
      }
      if (!improved) break;
    }
    for (double& s : step) s *= 0.5;
  }
  return best;
}

LcgUniform::LcgUniform(std::uint64_t seed) {
  const auto s = static_cast<std::uint32_t>(seed % kLcgM);
  state_ = s == 0 ? 1u : s;
}

double LcgUniform::next() {
  state_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(state_) * kLcgA) % kLcgM);
  return static_cast<double>(state_ - 1) / static_cast<double>(kLcgM - 1);
}

double LcgUniform::normal() {
  double u1 = 1.0 - next();
  while (u1 <= 0.0) u1 = 1.0 - next();
  const double u2 = next();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

PerturbationReport perturb_local_min(const ParameterFamily& family, int trials, double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps <= 1e-2)) throw DomainError("perturb_local_min: eps must lie in (0, 1e-2]");
  if (trials < 1) throw DomainError("perturb_local_min: trials must be positive");
  const auto base = family.build(family.base);
  if (!base) throw GeometryError("perturb_local_min: base parameters do not build a configuration");

  PerturbationReport report;
  report.base_perimeter = double_bubble_perimeter(base->first, base->second).total;
  report.trials = trials;

  LcgUniform rng(seed);
  const std::size_t dim = family.base.size();
  std::vector<double> dir(dim);
  std::vector<double> params(dim);
  for (int t = 0; t < trials; ++t) {
    double norm = 0.0;
    do {
      norm = 0.0;
      for (double& d : dir) {
        d = rng.normal();
        norm += d * d;
      }
      norm = std::sqrt(norm);
    } while (norm == 0.0);
    for (std::size_t i = 0; i < dim; ++i) params[i] = family.base[i] + eps * dir[i] / norm;

    double perimeter = 0.0;
    try {
      const auto pair = family.build(params);
      if (!pair) {
        ++report.skipped;
        continue;
      }
      perimeter = double_bubble_perimeter(pair->first, pair->second).total;
    } catch (const GeometryError&) {
      ++report.skipped;
      continue;
    } catch (const InfeasibleError&) {
      ++report.skipped;
      continue;
    }
    const double change = perimeter - report.base_perimeter;
    if (change < report.worst_change) {
      report.worst_change = change;
      report.worst_parameters = params;
    }
    if (change < -kDecreaseSlack) report.local_minimum = false;
  }
  return report;
}

}  // namespace hexbubble
