#include "hexbubble/hexnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hexbubble/constants.hpp"
#include "hexbubble/error.hpp"

namespace hexbubble {
namespace {

constexpr double kSelfIntersectionTol = 1e-13;

double cross(PlanePoint a, PlanePoint b) { return a.x * b.y - a.y * b.x; }
double dot(PlanePoint a, PlanePoint b) { return a.x * b.x + a.y * b.y; }
double euclid(PlanePoint a) { return std::hypot(a.x, a.y); }

double point_segment_distance(PlanePoint p, PlanePoint a, PlanePoint b) {
  const PlanePoint ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return euclid(p - (a + t * ab));
}

int orientation(PlanePoint a, PlanePoint b, PlanePoint c, double tol) {
  const double o = cross(b - a, c - a);
  if (std::abs(o) <= tol) return 0;
  return o > 0.0 ? 1 : -1;
}

bool segments_touch(PlanePoint a0, PlanePoint a1, PlanePoint b0, PlanePoint b1, double tol) {
  const int o1 = orientation(a0, a1, b0, 0.0);
  const int o2 = orientation(a0, a1, b1, 0.0);
  const int o3 = orientation(b0, b1, a0, 0.0);
  const int o4 = orientation(b0, b1, a1, 0.0);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return point_segment_distance(b0, a0, a1) <= tol || point_segment_distance(b1, a0, a1) <= tol ||
         point_segment_distance(a0, b0, b1) <= tol || point_segment_distance(a1, b0, b1) <= tol;
}

bool segments_cross_properly(PlanePoint a0, PlanePoint a1, PlanePoint b0, PlanePoint b1, double tol) {
  const int o1 = orientation(a0, a1, b0, tol);
  const int o2 = orientation(a0, a1, b1, tol);
  const int o3 = orientation(b0, b1, a0, tol);
  const int o4 = orientation(b0, b1, a1, tol);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

void check_finite(const std::vector<PlanePoint>& vertices) {
  for (const auto& v : vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw GeometryError("PolyChain: non-finite coordinate");
    }
  }
}

void check_simple(const std::vector<PlanePoint>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint a0 = v[i];
    const PlanePoint a1 = v[(i + 1) % n];
    // Adjacent edge folding back onto this one.
    const PlanePoint next = v[(i + 2) % n];
    const PlanePoint back = a0 - a1;
    const PlanePoint fwd = next - a1;
    if (std::abs(cross(back, fwd)) <= kSelfIntersectionTol * euclid(back) * euclid(fwd) &&
        dot(back, fwd) > 0.0) {
      throw GeometryError("PolyChain: closed chain folds back on itself");
    }
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_touch(a0, a1, v[j], v[(j + 1) % n], kSelfIntersectionTol)) {
        throw GeometryError("PolyChain: closed chain is not simple");
      }
    }
  }
}

// Direction class 0, 1 or 2 (0, 60 or 120 degrees mod 180) or -1 if not a lattice direction.
int lattice_class(PlanePoint d) {
  const double len = euclid(d);
  for (int k = 0; k < 3; ++k) {
    if (std::abs(cross(d, lattice_direction(k))) <= kGeometryTolerance * std::max(1.0, len)) return k;
  }
  return -1;
}

}  // namespace

PlanePoint lattice_direction(int k) {
  static constexpr double h = std::numbers::sqrt3 / 2.0;
  static constexpr std::array<PlanePoint, 6> dirs{{
      {1.0, 0.0}, {0.5, h}, {-0.5, h}, {-1.0, 0.0}, {-0.5, -h}, {0.5, -h}}};
  return dirs[static_cast<std::size_t>(((k % 6) + 6) % 6)];
}

// --- PolyChain ---------------------------------------------------------------

PolyChain::PolyChain(std::vector<PlanePoint> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {}

PolyChain PolyChain::open(std::vector<PlanePoint> vertices) {
  if (vertices.empty()) throw GeometryError("PolyChain: no vertices");
  check_finite(vertices);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) throw GeometryError("PolyChain: repeated consecutive vertex");
  }
  return PolyChain(std::move(vertices), false);
}

PolyChain PolyChain::closed(std::vector<PlanePoint> vertices) {
  if (vertices.size() < 3) throw GeometryError("PolyChain: closed chain needs at least 3 vertices");
  check_finite(vertices);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[(i + 1) % vertices.size()]) {
      throw GeometryError("PolyChain: repeated consecutive vertex");
    }
  }
  check_simple(vertices);
  return PolyChain(std::move(vertices), true);
}

PolyChain PolyChain::from_steps(PlanePoint start, std::span<const std::pair<int, double>> steps,
                                double skip_below) {
  std::vector<PlanePoint> out{start};
  PlanePoint cur = start;
  for (const auto& [dir, len] : steps) {
    if (len < -skip_below) throw GeometryError("PolyChain::from_steps: negative side length");
    if (len <= skip_below) continue;
    cur = cur + len * lattice_direction(dir);
    out.push_back(cur);
  }
  if (out.size() < 2 || euclid(out.back() - start) > 1e-9 * std::max(1.0, euclid(start))) {
    throw GeometryError("PolyChain::from_steps: steps do not close");
  }
  out.pop_back();
  return closed(std::move(out));
}

std::size_t PolyChain::edge_count() const noexcept {
  if (vertices_.size() < 2) return 0;
  return closed_ ? vertices_.size() : vertices_.size() - 1;
}

std::pair<PlanePoint, PlanePoint> PolyChain::edge(std::size_t i) const {
  return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
}

PolyChain PolyChain::translated(PlanePoint offset) const {
  std::vector<PlanePoint> moved;
  moved.reserve(vertices_.size());
  for (const auto& v : vertices_) moved.push_back(v + offset);
  return PolyChain(std::move(moved), closed_);
}

PolyChain PolyChain::counterclockwise() const {
  if (!closed_ || signed_area(*this) >= 0.0) return *this;
  std::vector<PlanePoint> rev(vertices_.rbegin(), vertices_.rend());
  return PolyChain(std::move(rev), true);
}

// --- HexRegion ---------------------------------------------------------------

bool HexRegion::contains(PlanePoint p, double tol) const {
  const double r = p.y - kSqrt3 * p.x;
  const double f = p.y + kSqrt3 * p.x;
  return r >= rising_lo - tol && r <= rising_hi + tol && f >= falling_lo - tol &&
         f <= falling_hi + tol && p.y >= flat_lo - tol && p.y <= flat_hi + tol;
}

PolyChain HexRegion::boundary() const {
  if (rising_lo > rising_hi || falling_lo > falling_hi || flat_lo > flat_hi) {
    throw GeometryError("HexRegion: empty region");
  }
  // Clip a large square by the six half-planes a.x * x + a.y * y >= c.
  struct HalfPlane {
    PlanePoint a;
    double c;
  };
  const std::array<HalfPlane, 6> planes{{
      {{-kSqrt3, 1.0}, rising_lo},
      {{kSqrt3, -1.0}, -rising_hi},
      {{kSqrt3, 1.0}, falling_lo},
      {{-kSqrt3, -1.0}, -falling_hi},
      {{0.0, 1.0}, flat_lo},
      {{0.0, -1.0}, -flat_hi},
  }};
  double r = 1.0;
  for (double v : {rising_lo, rising_hi, falling_lo, falling_hi, flat_lo, flat_hi}) r = std::max(r, std::abs(v));
  r *= 10.0;
  std::vector<PlanePoint> poly{{-r, -r}, {r, -r}, {r, r}, {-r, r}};
  for (const auto& hp : planes) {
    std::vector<PlanePoint> next;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const PlanePoint p = poly[i];
      const PlanePoint q = poly[(i + 1) % n];
      const double sp = dot(hp.a, p) - hp.c;
      const double sq = dot(hp.a, q) - hp.c;
      if (sp >= 0.0) next.push_back(p);
      if ((sp >= 0.0) != (sq >= 0.0)) {
        const double t = sp / (sp - sq);
        next.push_back(p + t * (q - p));
      }
    }
    poly = std::move(next);
  }
  std::vector<PlanePoint> clean;
  for (const auto& p : poly) {
    if (clean.empty() || euclid(p - clean.back()) > 1e-12) clean.push_back(p);
  }
  while (clean.size() > 1 && euclid(clean.front() - clean.back()) <= 1e-12) clean.pop_back();
  return PolyChain::closed(std::move(clean));
}

// --- norm and metric operations ---------------------------------------------

double hex_norm(PlanePoint p) {
  const double ax = std::abs(p.x);
  const double ay = std::abs(p.y);
  return std::max(ax + ay / kSqrt3, 2.0 * ay / kSqrt3);
}

int sextant(PlanePoint p) {
  if (p.x == 0.0 && p.y == 0.0) throw DomainError("sextant: undefined sector at the origin");
  double theta = std::atan2(p.y, p.x);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  const double t = theta / (std::numbers::pi / 3.0);
  const double nearest = std::round(t);
  if (std::abs(t - nearest) <= 1e-12) {
    const int j = static_cast<int>(nearest);
    // Ray j*60 deg is shared by sectors j and j+1; ray 0 is shared by 1 and 6.
    return (j == 0 || j == 6) ? 1 : j;
  }
  return static_cast<int>(std::floor(t)) + 1;
}

PolyChain geodesic_path(PlanePoint p, PlanePoint q) {
  const PlanePoint d = q - p;
  if (d.x == 0.0 && d.y == 0.0) return PolyChain::open({p});
  const int k = sextant(d);
  const PlanePoint u0 = lattice_direction(k - 1);
  const PlanePoint u1 = lattice_direction(k);
  const double det = cross(u0, u1);
  const double a = std::max(0.0, cross(d, u1) / det);
  const double b = std::max(0.0, cross(u0, d) / det);
  const double scale = std::max(a, b);
  if (a <= 1e-15 * scale || b <= 1e-15 * scale) return PolyChain::open({p, q});
  const PlanePoint corner = p + a * u0;
  if (corner == p || corner == q) return PolyChain::open({p, q});
  return PolyChain::open({p, corner, q});
}

double polyline_length(const PolyChain& chain) {
  double total = 0.0;
  for (std::size_t i = 0; i < chain.edge_count(); ++i) {
    const auto [a, b] = chain.edge(i);
    total += hex_norm(b - a);
  }
  return total;
}

double signed_area(const PolyChain& chain) {
  if (!chain.is_closed()) throw GeometryError("polygon_area: chain is not closed");
  const auto& v = chain.vertices();
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    twice += cross(v[i], v[(i + 1) % v.size()]);
  }
  return twice / 2.0;
}

double polygon_area(const PolyChain& chain) { return std::abs(signed_area(chain)); }

HexRegion circumscribing_hexagon(const PolyChain& chain) {
  if (!chain.is_closed() || chain.size() < 3) {
    throw GeometryError("circumscribing_hexagon: needs a closed chain with at least 3 vertices");
  }
  HexRegion h;
  bool first = true;
  for (const auto& v : chain.vertices()) {
    const double r = v.y - kSqrt3 * v.x;
    const double f = v.y + kSqrt3 * v.x;
    if (first) {
      h = {r, r, f, f, v.y, v.y};
      first = false;
      continue;
    }
    h.rising_lo = std::min(h.rising_lo, r);
    h.rising_hi = std::max(h.rising_hi, r);
    h.falling_lo = std::min(h.falling_lo, f);
    h.falling_hi = std::max(h.falling_hi, f);
    h.flat_lo = std::min(h.flat_lo, v.y);
    h.flat_hi = std::max(h.flat_hi, v.y);
  }
  return h;
}

bool strictly_inside(const PolyChain& c, PlanePoint p, double tol) {
  const auto& v = c.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (point_segment_distance(p, v[i], v[(i + 1) % n]) <= tol) return false;
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      const double x_cross = v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

std::vector<SharedSegment> shared_segments(const PolyChain& a, const PolyChain& b) {
  std::vector<SharedSegment> out;
  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    const auto [a0, a1] = a.edge(i);
    const PlanePoint da = a1 - a0;
    const double len_a = euclid(da);
    if (len_a <= 0.0) continue;
    const PlanePoint ua = (1.0 / len_a) * da;
    for (std::size_t j = 0; j < b.edge_count(); ++j) {
      const auto [b0, b1] = b.edge(j);
      // Collinear: both endpoints of b's edge on a's supporting line.
      if (std::abs(cross(ua, b0 - a0)) > kGeometryTolerance || std::abs(cross(ua, b1 - a0)) > kGeometryTolerance) {
        continue;
      }
      double t0 = dot(b0 - a0, ua);
      double t1 = dot(b1 - a0, ua);
      if (t0 > t1) std::swap(t0, t1);
      const double lo = std::max(0.0, t0);
      const double hi = std::min(len_a, t1);
      if (hi - lo <= kGeometryTolerance) continue;
      if (lattice_class(da) < 0) {
        throw GeometryError("double_bubble_perimeter: shared boundary along a non-lattice direction");
      }
      out.push_back({a0 + lo * ua, a0 + hi * ua});
    }
  }
  return out;
}

DoubleBubblePerimeter double_bubble_perimeter(const PolyChain& a, const PolyChain& b) {
  if (!a.is_closed() || !b.is_closed()) throw GeometryError("double_bubble_perimeter: chains must be closed");

  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    const auto [a0, a1] = a.edge(i);
    for (std::size_t j = 0; j < b.edge_count(); ++j) {
      const auto [b0, b1] = b.edge(j);
      if (segments_cross_properly(a0, a1, b0, b1, 1e-12)) {
        throw GeometryError("double_bubble_perimeter: boundaries cross");
      }
    }
  }
  // Points just inside each edge of one bubble must not lie inside the other.
  auto probe = [](const PolyChain& inner, const PolyChain& other) {
    const PolyChain ccw = inner.counterclockwise();
    for (std::size_t i = 0; i < ccw.edge_count(); ++i) {
      const auto [p0, p1] = ccw.edge(i);
      const PlanePoint d = p1 - p0;
      const double len = euclid(d);
      const PlanePoint normal{-d.y / len, d.x / len};
      const double delta = 1e-6 * std::min(1.0, len);
      const PlanePoint mid = p0 + 0.5 * d;
      if (strictly_inside(other, mid + delta * normal, 1e-12) || strictly_inside(other, p0, 1e-9)) {
        throw GeometryError("double_bubble_perimeter: interiors overlap");
      }
    }
  };
  probe(a, b);
  probe(b, a);

  DoubleBubblePerimeter out;
  for (const auto& s : shared_segments(a, b)) out.joint += hex_norm(s.to - s.from);
  out.total = polyline_length(a) + polyline_length(b) - out.joint;
  return out;
}

}  // namespace hexbubble
