#pragma once

#include <string>

#include "infgon/configuration.hpp"

namespace infgon::cli {

struct RenderOptions {
  bool highlight_crossings = false;
};

// SVG 1.1: a number line with one tick per integer of the window, a
// semicircle above it for each finite arc and a vertical ray for each
// infinite arc. Output depends only on the arguments.
std::string render_svg(const ArcConfiguration& c, const Window& window, const RenderOptions& options = {});

}  // namespace infgon::cli
