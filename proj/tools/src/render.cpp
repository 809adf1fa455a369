#include "infgon_cli/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace infgon::cli {

namespace {

constexpr Int kUnit = 40;    // pixels per integer step
constexpr Int kMargin = 40;
constexpr Int kRay = 60;     // extra height for infinite arcs above the tallest semicircle

}  // namespace

std::string render_svg(const ArcConfiguration& c, const Window& window, const RenderOptions& options) {
  validate(window);
  const auto arcs = materialize(c, window);

  Int tallest = 0;
  for (const auto& arc : arcs) {
    if (const auto* f = std::get_if<FiniteArc>(&arc)) tallest = std::max(tallest, f->length() * kUnit / 2);
  }
  const Int width = (window.hi - window.lo) * kUnit + 2 * kMargin;
  const Int baseline = kMargin + tallest + kRay;
  const Int height = baseline + kMargin;
  const auto x_of = [&](Int v) { return kMargin + (v - window.lo) * kUnit; };

  std::set<std::size_t> crossing;
  if (options.highlight_crossings) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        if (arcs_cross(arcs[i], arcs[j]) == CrossResult::Cross) {
          crossing.insert(i);
          crossing.insert(j);
        }
      }
    }
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <g id=\"number-line\" stroke=\"black\" stroke-width=\"1\">\n";
  svg << "    <line x1=\"" << x_of(window.lo) << "\" y1=\"" << baseline << "\" x2=\"" << x_of(window.hi) << "\" y2=\""
      << baseline << "\"/>\n";
  for (Int v = window.lo; v <= window.hi; ++v) {
    svg << "    <line x1=\"" << x_of(v) << "\" y1=\"" << baseline - 4 << "\" x2=\"" << x_of(v) << "\" y2=\""
        << baseline + 4 << "\"/>\n";
  }
  svg << "  </g>\n";
  svg << "  <g id=\"labels\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (Int v = window.lo; v <= window.hi; ++v) {
    svg << "    <text x=\"" << x_of(v) << "\" y=\"" << baseline + 18 << "\">" << v << "</text>\n";
  }
  svg << "  </g>\n";
  svg << "  <g id=\"arcs\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const char* colour = crossing.count(i) ? "red" : "black";
    if (const auto* f = std::get_if<FiniteArc>(&arcs[i])) {
      const Int r = f->length() * kUnit / 2;
      svg << "    <path class=\"arc\" d=\"M " << x_of(f->a) << " " << baseline << " A " << r << " " << r << " 0 0 1 "
          << x_of(f->b) << " " << baseline << "\" stroke=\"" << colour << "\"/>\n";
    } else {
      const Int x = x_of(std::get<InfiniteArc>(arcs[i]).m);
      svg << "    <line class=\"ray\" x1=\"" << x << "\" y1=\"" << baseline << "\" x2=\"" << x << "\" y2=\"" << kMargin / 2
          << "\" stroke=\"" << colour << "\"/>\n";
    }
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace infgon::cli
