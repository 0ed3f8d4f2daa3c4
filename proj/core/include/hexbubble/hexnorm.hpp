#pragma once

// Metric core: the hexagonal norm, its geodesics, polygonal length and area,
// the lattice-aligned circumscribing hexagon, and the double-bubble perimeter
// of explicit polygon pairs.

#include <array>
#include <span>
#include <utility>
#include <vector>

namespace hexbubble {

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  friend constexpr PlanePoint operator+(PlanePoint a, PlanePoint b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr PlanePoint operator-(PlanePoint a, PlanePoint b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr PlanePoint operator-(PlanePoint a) { return {-a.x, -a.y}; }
  friend constexpr PlanePoint operator*(double t, PlanePoint p) { return {t * p.x, t * p.y}; }
  friend constexpr bool operator==(PlanePoint, PlanePoint) = default;
};

/// Unit vector of lattice direction `k` (k * 60 degrees, k taken mod 6).
PlanePoint lattice_direction(int k);

/// Ordered vertex chain, optionally closed. Validated on construction.
///
/// Invariants: at least two vertices (a single vertex is allowed only for the
/// degenerate open chain of a zero-length geodesic), no repeated consecutive
/// vertices, finite coordinates, and closed chains are simple with at least
/// three vertices.
class PolyChain {
 public:
  static PolyChain open(std::vector<PlanePoint> vertices);
  static PolyChain closed(std::vector<PlanePoint> vertices);

  /// Closed chain from a start point and (direction index, length) steps.
  /// Steps shorter than `skip_below` are dropped so zero-length sides never
  /// produce repeated vertices. The final step must return to `start`.
  static PolyChain from_steps(PlanePoint start, std::span<const std::pair<int, double>> steps,
                              double skip_below = 1e-12);

  [[nodiscard]] const std::vector<PlanePoint>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] bool is_closed() const noexcept { return closed_; }
  [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept;
  [[nodiscard]] std::pair<PlanePoint, PlanePoint> edge(std::size_t i) const;

  [[nodiscard]] PolyChain translated(PlanePoint offset) const;
  /// Counterclockwise copy of a closed chain.
  [[nodiscard]] PolyChain counterclockwise() const;

 private:
  PolyChain(std::vector<PlanePoint> vertices, bool closed);
  std::vector<PlanePoint> vertices_;
  bool closed_ = false;
};

/// The six supporting intercepts of the lattice line families.
///
/// Lines of slope sqrt(3) are y = sqrt(3) x + b, lines of slope -sqrt(3) are
/// y = -sqrt(3) x + b and horizontal lines are y = b; each pair holds the
/// lowest and highest intercept touching the set.
struct HexRegion {
  double rising_lo = 0.0;
  double rising_hi = 0.0;
  double falling_lo = 0.0;
  double falling_hi = 0.0;
  double flat_lo = 0.0;
  double flat_hi = 0.0;

  /// Whether `p` lies in the region, with absolute slack `tol` on each intercept.
  [[nodiscard]] bool contains(PlanePoint p, double tol = 1e-9) const;
  /// Counterclockwise boundary with zero-length sides removed.
  [[nodiscard]] PolyChain boundary() const;
};

/// D(x, y) = max(|x| + |y|/sqrt3, 2|y|/sqrt3).
double hex_norm(PlanePoint p);

/// 60-degree sector (1..6) containing `p`; points on a shared ray resolve to
/// the smaller index. Throws DomainError at the origin.
int sextant(PlanePoint p);

/// Two-segment lattice-direction path from p to q with length hex_norm(q - p).
PolyChain geodesic_path(PlanePoint p, PlanePoint q);

/// Sum of hex_norm over edges, including the closing edge of a closed chain.
double polyline_length(const PolyChain& chain);

/// Positive for counterclockwise chains. Throws GeometryError on open chains.
double signed_area(const PolyChain& chain);
/// Shoelace area, orientation independent. Throws GeometryError on open chains.
double polygon_area(const PolyChain& chain);

/// Tight supporting intercepts over the vertex set of a closed chain.
HexRegion circumscribing_hexagon(const PolyChain& chain);

struct SharedSegment {
  PlanePoint from;
  PlanePoint to;
};

struct DoubleBubblePerimeter {
  double total = 0.0;
  double joint = 0.0;
};

/// Maximal collinear overlaps between the boundaries of two closed chains.
/// Overlaps must run along lattice directions; any other shared direction
/// throws GeometryError.
std::vector<SharedSegment> shared_segments(const PolyChain& a, const PolyChain& b);

/// rho(a) + rho(b) - rho(joint). Throws GeometryError if the interiors overlap.
DoubleBubblePerimeter double_bubble_perimeter(const PolyChain& a, const PolyChain& b);

/// Whether `p` lies strictly inside closed chain `c` (farther than `tol` from its boundary).
bool strictly_inside(const PolyChain& c, PlanePoint p, double tol = 1e-9);

}  // namespace hexbubble
