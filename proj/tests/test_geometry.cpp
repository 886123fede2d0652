#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ginpp/geometry.hpp"

using namespace ginpp;

TEST_CASE("rectangle area is width times height") {
  const Window w = Window::rectangle(0, 0, 1000, 2000);
  CHECK(w.area() == doctest::Approx(2.0e6).epsilon(1e-15));
}

TEST_CASE("triangle area via shoelace") {
  const Window w = Window::polygon({{0, 0}, {1, 0}, {0, 1}});
  CHECK(w.area() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("square polygon area equals rectangle case") {
  const Window w = Window::polygon({{0, 0}, {100, 0}, {100, 100}, {0, 100}});
  CHECK(w.area() == doctest::Approx(1.0e4).epsilon(1e-15));
}

TEST_CASE("polygon area equals sum of triangulation areas on convex fixtures") {
  // Convex pentagon; fan triangulation from vertex 0.
  const std::vector<Point> v = {{0, 0}, {4, 0}, {6, 3}, {3, 6}, {-1, 3}};
  const Window w = Window::polygon(v);
  double sum = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    sum += Window::polygon({v[0], v[i], v[i + 1]}).area();
  }
  CHECK(w.area() == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(Window::rectangle(0, 0, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Window::rectangle(0, 0, 1, 1e308 * 10), std::invalid_argument);
  CHECK_THROWS_AS(Window::polygon({{0, 0}, {1, 1}}), std::invalid_argument);
  // Self-intersecting bow tie.
  CHECK_THROWS_AS(Window::polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}),
                  std::invalid_argument);
  // Degenerate (zero area).
  CHECK_THROWS_AS(Window::polygon({{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);
}

TEST_CASE("contains on rectangle, closed boundary") {
  const Window w = Window::rectangle(0, 0, 10, 10);
  CHECK(w.contains({5, 5}));
  CHECK(w.contains({10, 10}));
  CHECK_FALSE(w.contains({11, 5}));
}

TEST_CASE("contains on polygon, closed boundary") {
  const Window w = Window::polygon({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
  CHECK(w.contains({5, 5}));
  CHECK(w.contains({0, 3}));    // edge
  CHECK(w.contains({10, 10}));  // vertex
  CHECK_FALSE(w.contains({-1e-9, 5}));
}

TEST_CASE("boundary distance on rectangle") {
  const Window w = Window::rectangle(0, 0, 100, 100);
  CHECK(w.boundary_distance({50, 50}) == doctest::Approx(50.0));
  CHECK(w.boundary_distance({10, 40}) == doctest::Approx(10.0));
  CHECK(w.boundary_distance({0, 30}) == 0.0);
  CHECK_THROWS_AS(w.boundary_distance({-5, 5}), std::invalid_argument);
}

TEST_CASE("boundary distance on polygon matches rectangle") {
  const Window poly = Window::polygon({{0, 0}, {100, 0}, {100, 100}, {0, 100}});
  const Window rect = Window::rectangle(0, 0, 100, 100);
  for (const Point p : {Point{50, 50}, Point{10, 40}, Point{99, 1}, Point{0, 30}}) {
    CHECK(poly.boundary_distance(p) == doctest::Approx(rect.boundary_distance(p)));
  }
}

TEST_CASE("boundary distance never exceeds distance to any vertex") {
  const Window w = Window::polygon({{0, 0}, {8, -1}, {12, 6}, {5, 11}, {-2, 5}});
  for (const Point p : {Point{4, 4}, Point{2, 2}, Point{8, 5}, Point{5, 8}}) {
    REQUIRE(w.contains(p));
    const double bd = w.boundary_distance(p);
    for (const auto& v : w.vertices()) {
      CHECK(bd <= distance(p, v) + 1e-12);
    }
  }
}

TEST_CASE("grid points on a square") {
  const Window w = Window::rectangle(0, 0, 10, 10);
  const auto pts = grid_points(w, 5.0);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == Point{2.5, 2.5});
  CHECK(pts[1] == Point{7.5, 2.5});
  CHECK(pts[2] == Point{2.5, 7.5});
  CHECK(pts[3] == Point{7.5, 7.5});
}

TEST_CASE("grid points degenerate spacing gives empty result") {
  const Window w = Window::rectangle(0, 0, 10, 10);
  CHECK(grid_points(w, 20.0).empty());
  CHECK_THROWS_AS(grid_points(w, 0.0), std::invalid_argument);
}

TEST_CASE("grid points in unit triangle match brute-force enumeration") {
  const Window w = Window::polygon({{0, 0}, {1, 0}, {0, 1}});
  const double spacing = 0.5;
  const auto pts = grid_points(w, spacing);
  // Independent oracle: half-plane tests x >= 0, y >= 0, x + y <= 1 over the
  // same offset lattice.
  std::vector<Point> expected;
  for (int j = 0;; ++j) {
    const double y = (j + 0.5) * spacing;
    if (y >= 1.0) break;
    for (int i = 0;; ++i) {
      const double x = (i + 0.5) * spacing;
      if (x >= 1.0) break;
      if (x >= 0.0 && y >= 0.0 && x + y <= 1.0) expected.push_back({x, y});
    }
  }
  REQUIRE(pts.size() == expected.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i] == expected[i]);
  }
}

TEST_CASE("grid density approaches window area") {
  const Window w = Window::rectangle(0, 0, 3000, 2000);
  const double spacing = w.bbox().extent() / 200.0;
  const auto pts = grid_points(w, spacing);
  const double covered = static_cast<double>(pts.size()) * spacing * spacing;
  CHECK(std::abs(covered - w.area()) / w.area() < 0.02);
}

TEST_CASE("projection maps origin to origin and scales by cos(lat0)") {
  const ProjectionRef ref{2.35, 48.85};
  const Point origin = project(2.35, 48.85, ref);
  CHECK(origin.x == doctest::Approx(0.0));
  CHECK(origin.y == doctest::Approx(0.0));

  const ProjectionRef equator{10.0, 0.0};
  const Point p = project(11.0, 0.0, equator);
  CHECK(p.x == doctest::Approx(111194.9).epsilon(1e-6));
  CHECK(p.y == doctest::Approx(0.0));

  const ProjectionRef mid{10.0, 60.0};
  const Point q = project(11.0, 60.0, mid);
  CHECK(q.x == doctest::Approx(55597.46).epsilon(1e-6));
}

TEST_CASE("projection round-trips below 1e-9 degrees") {
  const ProjectionRef ref{2.35, 48.85};
  for (const auto& [lon, lat] :
       std::vector<std::pair<double, double>>{{2.2, 48.8}, {2.5, 48.9},
                                              {2.35, 48.85}, {2.41, 48.79}}) {
    const Point p = project(lon, lat, ref);
    const LonLat back = unproject(p, ref);
    CHECK(std::abs(back.lon - lon) < 1e-9);
    CHECK(std::abs(back.lat - lat) < 1e-9);
  }
}

TEST_CASE("centroid and circumradius") {
  const Window w = Window::rectangle(10, 20, 30, 60);
  const Point c = w.centroid();
  CHECK(c == Point{20, 40});
  CHECK(w.circumradius() == doctest::Approx(std::sqrt(100.0 + 400.0)));

  const Window tri = Window::polygon({{0, 0}, {3, 0}, {0, 3}});
  const Point tc = tri.centroid();
  CHECK(tc.x == doctest::Approx(1.0));
  CHECK(tc.y == doctest::Approx(1.0));
}

TEST_CASE("windows compare by shape") {
  CHECK(Window::rectangle(0, 0, 1, 1) == Window::rectangle(0, 0, 1, 1));
  CHECK_FALSE(Window::rectangle(0, 0, 1, 1) == Window::rectangle(0, 0, 1, 2));
  CHECK_FALSE(Window::rectangle(0, 0, 1, 1) ==
              Window::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}
