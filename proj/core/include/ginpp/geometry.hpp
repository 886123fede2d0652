#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace ginpp {

/// Planar point in meters (east, north).
struct Point {
  double x{0.0};
  double y{0.0};

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);
double squared_distance(const Point& a, const Point& b);

struct BoundingBox {
  double x0{0.0}, y0{0.0}, x1{0.0}, y1{0.0};

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  /// Largest side of the box.
  double extent() const { return width() > height() ? width() : height(); }
};

/// Observation window: axis-aligned rectangle or simple polygon, meters.
/// Windows are closed sets; boundary points count as inside.
class Window {
 public:
  static Window rectangle(double x0, double y0, double x1, double y1);
  static Window polygon(std::vector<Point> vertices);

  bool is_rectangle() const;
  /// Vertices in order (rectangle is reported as its 4 corners, CCW).
  std::vector<Point> vertices() const;

  double area() const;
  bool contains(const Point& p) const;
  /// Euclidean distance from an interior point to the window boundary.
  /// Throws std::invalid_argument if p is outside (caller bug).
  double boundary_distance(const Point& p) const;

  BoundingBox bbox() const;
  Point centroid() const;
  /// Max distance from the centroid to any point of the window.
  double circumradius() const;

  Window translated(double dx, double dy) const;

  friend bool operator==(const Window&, const Window&);

 private:
  struct Rect {
    double x0, y0, x1, y1;
    friend bool operator==(const Rect&, const Rect&) = default;
  };
  Window() = default;
  std::variant<Rect, std::vector<Point>> shape_;
};

/// Axis-aligned lattice with the given spacing, offset by spacing/2 from the
/// bounding-box corner, filtered to the window. Row-major order (y outer,
/// x inner), deterministic. May be empty if spacing exceeds the extent.
std::vector<Point> grid_points(const Window& w, double spacing);

/// Origin of the local equirectangular projection, degrees.
struct ProjectionRef {
  double lon0{0.0};
  double lat0{0.0};
};

inline constexpr double kEarthRadiusM = 6371000.0;

/// Equirectangular lon/lat (degrees) -> meters about ref:
///   x = R_E cos(lat0) (lon - lon0), y = R_E (lat - lat0)  (angles in radians).
Point project(double lon_deg, double lat_deg, const ProjectionRef& ref);

struct LonLat {
  double lon{0.0};
  double lat{0.0};
};

/// Exact inverse of project().
LonLat unproject(const Point& p, const ProjectionRef& ref);

}  // namespace ginpp
