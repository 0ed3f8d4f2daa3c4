#pragma once

#include <string>
#include <vector>

#include "hexbubble/hexnorm.hpp"

namespace hexbubble::cli {

/// Pixels per plane unit in emitted SVG.
inline constexpr double kSvgScale = 200.0;

struct SvgPanel {
  std::string title;
  std::vector<PolyChain> bubbles;
};

/// Standalone SVG 1.1 document with the panels laid out left to right, edges
/// annotated with their lengths, shared edges highlighted and the viewBox
/// fitted to the drawing with a 5% margin.
std::string render_svg(const std::vector<SvgPanel>& panels);

}  // namespace hexbubble::cli
