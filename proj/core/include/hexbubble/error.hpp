#pragma once

#include <stdexcept>
#include <string>

namespace hexbubble {

/// Input outside an operation's documented domain (bad alpha, nonpositive volume, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A requested configuration cannot be realised (negative radicand, negative side length).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed geometry: degenerate chains, self-intersections, overlapping bubbles.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hexbubble
