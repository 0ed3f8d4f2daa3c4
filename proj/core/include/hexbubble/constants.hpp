#pragma once

#include <cmath>
#include <numbers>

namespace hexbubble {

inline constexpr double kSqrt3 = std::numbers::sqrt3;

/// 3^(1/4)
inline const double kFourthRoot3 = std::sqrt(kSqrt3);

/// Absolute tolerance in plane units for collinearity and shared-edge detection.
inline constexpr double kGeometryTolerance = 1e-9;

/// Shortest fixed side accepted by the single-bubble solvers.
inline constexpr double kMinFixedSide = 1e-8;

}  // namespace hexbubble
