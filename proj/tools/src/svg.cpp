#include "hexbubble_cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace hexbubble::cli {
namespace {

constexpr std::array<const char*, 2> kFill{"#cfe3f7", "#f7d4cf"};
constexpr std::array<const char*, 2> kStroke{"#1f4e79", "#8b2d1f"};
constexpr double kLabelOffset = 0.05;
constexpr double kMinLabelledEdge = 1e-6;

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(PlanePoint p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
};

std::string num(double v) { return fmt::format("{:.3f}", v + 0.0); }

}  // namespace

std::string render_svg(const std::vector<SvgPanel>& panels) {
  std::vector<Box> boxes;
  double widest = 0.0;
  for (const auto& panel : panels) {
    Box b;
    for (const auto& c : panel.bubbles) {
      for (const auto& p : c.vertices()) b.add(p);
    }
    boxes.push_back(b);
    widest = std::max(widest, b.max_x - b.min_x);
  }
  const double gap = 0.25 * widest;

  // Panel i is shifted so its box starts at `offsets[i]` on the x axis and
  // its box bottom sits on y = 0.
  std::vector<double> offsets;
  double cursor = 0.0;
  double tallest = 0.0;
  for (const auto& b : boxes) {
    offsets.push_back(cursor - b.min_x);
    cursor += (b.max_x - b.min_x) + gap;
    tallest = std::max(tallest, b.max_y - b.min_y);
  }
  const double width = std::max(cursor - gap, 1e-9);
  const double height = std::max(tallest, 1e-9);
  const double mx = 0.05 * width;
  const double my = 0.05 * height;

  auto sx = [&](double x) { return kSvgScale * x; };
  auto sy = [&](double y) { return kSvgScale * (height - y); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format("<!-- hexbubble render, scale {} px per plane unit, y axis pointing up in plane coordinates -->\n",
                     kSvgScale);
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"{}\" "
      "height=\"{}\">\n",
      num(sx(-mx)), num(kSvgScale * -my), num(kSvgScale * (width + 2 * mx)), num(kSvgScale * (height + 2 * my)),
      num(kSvgScale * (width + 2 * mx)), num(kSvgScale * (height + 2 * my)));

  for (std::size_t i = 0; i < panels.size(); ++i) {
    const auto& panel = panels[i];
    const PlanePoint shift{offsets[i], -boxes[i].min_y};
    out += fmt::format("  <g id=\"panel-{}\">\n", i + 1);
    out += fmt::format("    <title>{}</title>\n", panel.title);
    for (std::size_t k = 0; k < panel.bubbles.size(); ++k) {
      const PolyChain c = panel.bubbles[k].translated(shift);
      std::string pts;
      for (const auto& p : c.vertices()) pts += fmt::format("{},{} ", num(sx(p.x)), num(sy(p.y)));
      if (!pts.empty()) pts.pop_back();
      out += fmt::format("    <polygon points=\"{}\" fill=\"{}\" stroke=\"{}\" stroke-width=\"1.5\"/>\n", pts,
                         kFill[k % 2], kStroke[k % 2]);
    }
    if (panel.bubbles.size() == 2) {
      const PolyChain a = panel.bubbles[0].translated(shift);
      const PolyChain b = panel.bubbles[1].translated(shift);
      for (const auto& s : shared_segments(a, b)) {
        out += fmt::format(
            "    <line class=\"shared\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#d4a017\" "
            "stroke-width=\"4\"/>\n",
            num(sx(s.from.x)), num(sy(s.from.y)), num(sx(s.to.x)), num(sy(s.to.y)));
      }
    }
    for (const auto& bubble : panel.bubbles) {
      const PolyChain c = bubble.translated(shift).counterclockwise();
      for (std::size_t e = 0; e < c.edge_count(); ++e) {
        const auto [p, q] = c.edge(e);
        const PlanePoint d = q - p;
        const double len = std::hypot(d.x, d.y);
        if (len < kMinLabelledEdge) continue;
        const PlanePoint mid = p + 0.5 * d;
        const PlanePoint at = mid + (kLabelOffset / len) * PlanePoint{d.y, -d.x};
        out += fmt::format(
            "    <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\">{}</text>\n",
            num(sx(at.x)), num(sy(at.y)), fmt::format("{:.4f}", hex_norm(d)));
      }
    }
    out += fmt::format(
        "    <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
        num(sx(offsets[i] + boxes[i].min_x + (boxes[i].max_x - boxes[i].min_x) / 2.0)),
        num(kSvgScale * (height + my * 0.8)), panel.title);
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hexbubble::cli
