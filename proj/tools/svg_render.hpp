#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inconic/geometry.hpp"

namespace inconic::cli {

struct SvgScene {
  std::array<Point, 4> quad;
  std::optional<std::pair<Point, Point>> locus;  ///< M1, M2
  std::optional<std::pair<Point, Point>> chord;  ///< dashed
  std::vector<EllipseGeo> ellipses;
  std::vector<Point> contacts;
};

/// SVG 1.1 document in the scene's own coordinates (y up).
std::string render_svg(const SvgScene& scene);

}  // namespace inconic::cli
