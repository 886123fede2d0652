#include "ginpp/pattern.hpp"

#include <stdexcept>
#include <string>

namespace ginpp {

void validate_pattern(const PointPattern& p) {
  for (const auto& pt : p.points) {
    if (!p.window.contains(pt)) {
      throw std::invalid_argument("pattern point (" + std::to_string(pt.x) + ", " +
                                  std::to_string(pt.y) + ") lies outside the window");
    }
  }
}

PointPattern superpose(std::span<const PointPattern> patterns) {
  if (patterns.empty()) {
    throw std::invalid_argument("superpose: at least one pattern required");
  }
  const Window& w = patterns.front().window;
  PointPattern out{{}, w};
  std::size_t total = 0;
  for (const auto& p : patterns) total += p.points.size();
  out.points.reserve(total);
  for (const auto& p : patterns) {
    if (!(p.window == w)) {
      throw std::invalid_argument("superpose: patterns have mismatched windows");
    }
    out.points.insert(out.points.end(), p.points.begin(), p.points.end());
  }
  return out;
}

std::size_t count_in_disc(const PointPattern& p, const Point& center, double radius) {
  const double r2 = radius * radius;
  std::size_t n = 0;
  for (const auto& pt : p.points) {
    if (squared_distance(pt, center) <= r2) ++n;
  }
  return n;
}

}  // namespace ginpp
