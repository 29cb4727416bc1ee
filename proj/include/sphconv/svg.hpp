#pragma once

// Deterministic SVG figures: bodies in orthographic view of the sphere, and
// planar Wulff shapes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphconv/convex_body.hpp"
#include "sphconv/wulff.hpp"

namespace sphconv {

struct SvgOptions {
  /// Viewing direction (the point of the sphere facing the viewer); defaults
  /// to the body's enclosing center.
  std::optional<UnitVec> view;
  int size = 480;
  /// Extra great arcs drawn over the body, e.g. a diameter pair.
  std::vector<std::pair<UnitVec, UnitVec>> chords;
  std::vector<UnitVec> markers;
};

/// One <path class="boundary"> per visible run of each segment; runs on the far
/// hemisphere are emitted separately with class "boundary-hidden" and dashed.
std::string render_svg(const SphericalBody& body, const SvgOptions& options = {});
std::string render_svg(const WulffShape& shape, int size = 480);

}  // namespace sphconv
