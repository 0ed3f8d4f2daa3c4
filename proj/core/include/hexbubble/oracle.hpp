#pragma once

// Brute-force checks: a derivative-free grid + pattern-search minimizer and a
// random-perturbation probe for local minimality of explicit configurations.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hexbubble/hexnorm.hpp"

namespace hexbubble {

using Objective = std::function<double(std::span<const double>)>;
using Feasibility = std::function<bool(std::span<const double>)>;

/// Axis-aligned box with a feasibility predicate. The constructor checks that
/// `witness` lies in the box and is feasible, so the region is never empty.
class BoxSpec {
 public:
  BoxSpec(std::vector<double> lower, std::vector<double> upper, Feasibility feasible,
          std::vector<double> witness);

  [[nodiscard]] std::size_t dimension() const noexcept { return lower_.size(); }
  [[nodiscard]] const std::vector<double>& lower() const noexcept { return lower_; }
  [[nodiscard]] const std::vector<double>& upper() const noexcept { return upper_; }
  [[nodiscard]] bool admits(std::span<const double> x) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  Feasibility feasible_;
};

struct OracleResult {
  std::vector<double> argmin;
  double value = 0.0;
};

/// Scan `grid` points per axis (bounds included), then pattern search from the
/// best feasible point over the moves +-e_i and +-e_i +- e_j. Each of the
/// `refine_iters` rounds repeats moves while they improve, then halves the step.
/// Throws DomainError for grid < 16 and InfeasibleError if no grid point is feasible.
OracleResult grid_refine_min(const Objective& objective, const BoxSpec& box, int grid, int refine_iters);

/// A parameterized pair of bubbles. `build` returns nullopt (or throws
/// GeometryError) for parameters it cannot realise; volumes are restored inside
/// `build`, so every returned pair is volume-feasible.
struct ParameterFamily {
  std::vector<double> base;
  std::function<std::optional<std::pair<PolyChain, PolyChain>>(std::span<const double>)> build;
};

struct PerturbationReport {
  bool local_minimum = true;
  int trials = 0;
  int skipped = 0;
  double base_perimeter = 0.0;
  /// Most negative change of the double-bubble perimeter seen (0 if none decreased).
  double worst_change = 0.0;
  std::vector<double> worst_parameters;
};

/// Draws `trials` random directions of length `eps` around `family.base` and
/// measures the double-bubble perimeter of each rebuilt pair. A decrease by
/// more than 1e-10 marks the base as not locally minimal; infeasible trials
/// are skipped. Directions come from LcgUniform seeded with `seed`.
PerturbationReport perturb_local_min(const ParameterFamily& family, int trials, double eps, std::uint64_t seed);

/// Uniform draws in [0, 1] from a Park-Miller generator: (x - 1) / (m - 1).
class LcgUniform {
 public:
  explicit LcgUniform(std::uint64_t seed);
  double next();
  /// Standard normal via Box-Muller on two uniforms.
  double normal();

 private:
  std::uint32_t state_;
};

}  // namespace hexbubble
