#pragma once

#include <span>
#include <vector>

#include "ginpp/geometry.hpp"

namespace ginpp {

/// Finite simple point set together with its observation window.
/// Invariant: every point lies inside the window (closed). Samplers produce
/// almost-surely distinct points; ingestion deduplicates explicitly.
struct PointPattern {
  std::vector<Point> points;
  Window window;

  std::size_t size() const { return points.size(); }
};

/// Throws std::invalid_argument if any point falls outside the window.
void validate_pattern(const PointPattern& p);

/// Union of patterns over their (identical) common window.
/// Throws std::invalid_argument on mismatched windows or empty input.
PointPattern superpose(std::span<const PointPattern> patterns);

/// Number of pattern points within `radius` of `center`.
std::size_t count_in_disc(const PointPattern& p, const Point& center, double radius);

}  // namespace ginpp
