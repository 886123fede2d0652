#include "ginpp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ginpp {

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

bool all_finite(const std::vector<Point>& pts) {
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  }
  return true;
}

double shoelace_twice(const std::vector<Point>& v) {
  double s = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(a, b, p) != 0.0) return false;
  return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) &&
         p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
}

bool segments_properly_intersect(const Point& a, const Point& b, const Point& c,
                                 const Point& d) {
  const double d1 = cross(c, d, a);
  const double d2 = cross(c, d, b);
  const double d3 = cross(a, b, c);
  const double d4 = cross(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  const double abx = b.x - a.x, aby = b.y - a.y;
  const double apx = p.x - a.x, apy = p.y - a.y;
  const double ab2 = abx * abx + aby * aby;
  double t = ab2 > 0.0 ? (apx * abx + apy * aby) / ab2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = apx - t * abx, dy = apy - t * aby;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

double distance(const Point& a, const Point& b) {
  return std::sqrt(squared_distance(a, b));
}

double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Window Window::rectangle(double x0, double y0, double x1, double y1) {
  if (!(std::isfinite(x0) && std::isfinite(y0) && std::isfinite(x1) &&
        std::isfinite(y1))) {
    throw std::invalid_argument("Window::rectangle: coordinates must be finite");
  }
  if (!(x1 > x0 && y1 > y0)) {
    throw std::invalid_argument("Window::rectangle: requires x1 > x0 and y1 > y0");
  }
  Window w;
  w.shape_ = Rect{x0, y0, x1, y1};
  return w;
}

Window Window::polygon(std::vector<Point> vertices) {
  if (vertices.size() < 3) {
    throw std::invalid_argument("Window::polygon: needs at least 3 vertices");
  }
  if (!all_finite(vertices)) {
    throw std::invalid_argument("Window::polygon: coordinates must be finite");
  }
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Adjacent edges share an endpoint; only non-adjacent pairs may not cross.
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_properly_intersect(vertices[i], vertices[(i + 1) % n],
                                      vertices[j], vertices[(j + 1) % n])) {
        throw std::invalid_argument("Window::polygon: polygon self-intersects");
      }
    }
  }
  if (std::abs(shoelace_twice(vertices)) <= 0.0) {
    throw std::invalid_argument("Window::polygon: polygon has zero area");
  }
  Window w;
  w.shape_ = std::move(vertices);
  return w;
}

bool Window::is_rectangle() const {
  return std::holds_alternative<Rect>(shape_);
}

std::vector<Point> Window::vertices() const {
  if (const Rect* r = std::get_if<Rect>(&shape_)) {
    return {{r->x0, r->y0}, {r->x1, r->y0}, {r->x1, r->y1}, {r->x0, r->y1}};
  }
  return std::get<std::vector<Point>>(shape_);
}

double Window::area() const {
  if (const Rect* r = std::get_if<Rect>(&shape_)) {
    return (r->x1 - r->x0) * (r->y1 - r->y0);
  }
  return 0.5 * std::abs(shoelace_twice(std::get<std::vector<Point>>(shape_)));
}

bool Window::contains(const Point& p) const {
  if (const Rect* r = std::get_if<Rect>(&shape_)) {
    return p.x >= r->x0 && p.x <= r->x1 && p.y >= r->y0 && p.y <= r->y1;
  }
  const auto& v = std::get<std::vector<Point>>(shape_);
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (on_segment(p, a, b)) return true;  // closed boundary
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x_int > p.x) inside = !inside;
    }
  }
  return inside;
}

double Window::boundary_distance(const Point& p) const {
  if (!contains(p)) {
    throw std::invalid_argument(
        "Window::boundary_distance: point (" + std::to_string(p.x) + ", " +
        std::to_string(p.y) + ") lies outside the window");
  }
  if (const Rect* r = std::get_if<Rect>(&shape_)) {
    return std::min(std::min(p.x - r->x0, r->x1 - p.x),
                    std::min(p.y - r->y0, r->y1 - p.y));
  }
  const auto& v = std::get<std::vector<Point>>(shape_);
  const std::size_t n = v.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % n]));
  }
  return best;
}

BoundingBox Window::bbox() const {
  if (const Rect* r = std::get_if<Rect>(&shape_)) {
    return {r->x0, r->y0, r->x1, r->y1};
  }
  const auto& v = std::get<std::vector<Point>>(shape_);
  BoundingBox b{v[0].x, v[0].y, v[0].x, v[0].y};
  for (const auto& p : v) {
    b.x0 = std::min(b.x0, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.x1 = std::max(b.x1, p.x);
    b.y1 = std::max(b.y1, p.y);
  }
  return b;
}

Point Window::centroid() const {
  if (const Rect* r = std::get_if<Rect>(&shape_)) {
    return {0.5 * (r->x0 + r->x1), 0.5 * (r->y0 + r->y1)};
  }
  const auto& v = std::get<std::vector<Point>>(shape_);
  const std::size_t n = v.size();
  double a2 = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % n];
    const double w = p.x * q.y - q.x * p.y;
    a2 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

double Window::circumradius() const {
  const Point c = centroid();
  double best = 0.0;
  for (const auto& p : vertices()) {
    best = std::max(best, distance(c, p));
  }
  return best;
}

Window Window::translated(double dx, double dy) const {
  Window w;
  if (const Rect* r = std::get_if<Rect>(&shape_)) {
    w.shape_ = Rect{r->x0 + dx, r->y0 + dy, r->x1 + dx, r->y1 + dy};
  } else {
    auto v = std::get<std::vector<Point>>(shape_);
    for (auto& p : v) {
      p.x += dx;
      p.y += dy;
    }
    w.shape_ = std::move(v);
  }
  return w;
}

bool operator==(const Window& a, const Window& b) {
  return a.shape_ == b.shape_;
}

std::vector<Point> grid_points(const Window& w, double spacing) {
  if (!(spacing > 0.0)) {
    throw std::invalid_argument("grid_points: spacing must be positive");
  }
  const BoundingBox b = w.bbox();
  std::vector<Point> out;
  // Integer-indexed lattice (no accumulated drift), half-open against the
  // bounding box so spacing >= extent yields an empty list.
  for (std::size_t j = 0;; ++j) {
    const double y = b.y0 + (static_cast<double>(j) + 0.5) * spacing;
    if (y >= b.y1) break;
    for (std::size_t i = 0;; ++i) {
      const double x = b.x0 + (static_cast<double>(i) + 0.5) * spacing;
      if (x >= b.x1) break;
      const Point p{x, y};
      if (w.contains(p)) out.push_back(p);
    }
  }
  return out;
}

Point project(double lon_deg, double lat_deg, const ProjectionRef& ref) {
  if (!(std::abs(ref.lat0) < 90.0)) {
    throw std::invalid_argument("project: |lat0| must be < 90 degrees");
  }
  const double x = kEarthRadiusM * std::cos(ref.lat0 * kDegToRad) *
                   (lon_deg - ref.lon0) * kDegToRad;
  const double y = kEarthRadiusM * (lat_deg - ref.lat0) * kDegToRad;
  return {x, y};
}

LonLat unproject(const Point& p, const ProjectionRef& ref) {
  if (!(std::abs(ref.lat0) < 90.0)) {
    throw std::invalid_argument("unproject: |lat0| must be < 90 degrees");
  }
  const double lon =
      ref.lon0 + p.x / (kEarthRadiusM * std::cos(ref.lat0 * kDegToRad)) / kDegToRad;
  const double lat = ref.lat0 + p.y / kEarthRadiusM / kDegToRad;
  return {lon, lat};
}

}  // namespace ginpp
