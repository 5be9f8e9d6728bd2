#pragma once

#include <string>

#include "simson/scene/construction.hpp"

namespace simson::io {

struct SvgOptions {
  /// Pixel width of the figure; the height follows from the fitted aspect ratio.
  double width_px = 800.0;
  /// Margin added on each side, as a fraction of the points' extent.
  double margin = 0.10;
};

/// SVG 1.1 figure of a scene.
///
/// The viewBox is fitted to the scene's points with the configured margin and
/// the y axis points up. Points are 2px dots with labels, lines are clipped to
/// the viewBox, circles are drawn whole. Elements appear as points, then lines,
/// then circles, each group sorted by name, with coordinates printed to six
/// decimals, so equal scenes render to identical bytes.
std::string render_svg(const scene::Scene& scene, const SvgOptions& options = {});

}  // namespace simson::io
