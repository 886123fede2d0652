#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ginpp/model.hpp"
#include "ginpp/samplers.hpp"
#include "ginpp/summaries.hpp"

using namespace ginpp;

namespace {

PointPattern quantized_ppp(double lambda, const Window& w, Seed seed) {
  PointPattern p = sample_ppp(lambda, w, seed);
  for (auto& pt : p.points) {
    pt.x = std::round(pt.x * 1048576.0) / 1048576.0;
    pt.y = std::round(pt.y * 1048576.0) / 1048576.0;
  }
  return p;
}

}  // namespace

TEST_CASE("radial grid spans 0..r_max inclusive") {
  const RadialGrid g = RadialGrid::uniform(600.0, 512);
  REQUIRE(g.size() == 513);
  CHECK(g.r_values.front() == 0.0);
  CHECK(g.r_values.back() == 600.0);
  CHECK(std::is_sorted(g.r_values.begin(), g.r_values.end()));
}

TEST_CASE("nn_distances on two and three points") {
  const Window big = Window::rectangle(-1000, -1000, 1000, 1000);
  const PointPattern two{{{0, 0}, {0, 10}}, big};
  const auto d2 = nn_distances(two);
  CHECK(d2[0].first == doctest::Approx(10.0));
  CHECK(d2[1].first == doctest::Approx(10.0));

  const PointPattern three{{{0, 0}, {3, 0}, {10, 0}}, big};
  const auto d3 = nn_distances(three);
  CHECK(d3[0].first == doctest::Approx(3.0));
  CHECK(d3[1].first == doctest::Approx(3.0));
  CHECK(d3[2].first == doctest::Approx(7.0));

  const PointPattern one{{{0, 0}}, big};
  CHECK_THROWS_AS(nn_distances(one), std::invalid_argument);
}

TEST_CASE("nn_distances equals the brute-force all-pairs scan") {
  const Window w = Window::rectangle(0, 0, 4000, 4000);
  const PointPattern p = sample_ppp(200.0 / w.area(), w, Seed{314});
  REQUIRE(p.size() > 100);
  const auto fast = nn_distances(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    double best2 = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j == i) continue;
      best2 = std::min(best2, squared_distance(p.points[i], p.points[j]));
    }
    CHECK(fast[i].first == std::sqrt(best2));  // exact, same arithmetic
    CHECK(fast[i].second == p.window.boundary_distance(p.points[i]));
  }
}

TEST_CASE("hand-computed border G on the two-point pattern") {
  const Window w = Window::rectangle(-50, -50, 50, 50);
  const PointPattern p{{{0, 0}, {0, 10}}, w};
  // Boundary distances: 50 for (0,0), 40 for (0,10).
  const RadialGrid grid = RadialGrid::uniform(60.0, 60);  // integer radii
  const auto g = estimate_G(p, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.r_values[i];
    if (r < 10.0) {
      CHECK(g.values[i] == 0.0);
      CHECK(g.n_valid[i] == 2);
    } else if (r < 40.0) {
      CHECK(g.values[i] == 1.0);
      CHECK(g.n_valid[i] == 2);
    } else if (r < 50.0) {
      CHECK(g.values[i] == 1.0);
      CHECK(g.n_valid[i] == 1);
    } else {
      CHECK_FALSE(is_defined(g.values[i]));
      CHECK(g.n_valid[i] == 0);
    }
  }
}

TEST_CASE("G at r = 0 is zero for a simple pattern") {
  const Window w = Window::rectangle(0, 0, 1000, 1000);
  const PointPattern p = sample_ppp(50.0 / w.area(), w, Seed{99});
  REQUIRE(p.size() >= 2);
  const auto g = estimate_G(p, RadialGrid::uniform(100.0, 10));
  CHECK(g.values[0] == 0.0);
}

TEST_CASE("F at r = 0 is zero on the offset test grid") {
  const Window w = Window::rectangle(0, 0, 1000, 1000);
  const PointPattern p = sample_ppp(50.0 / w.area(), w, Seed{100});
  REQUIRE(!p.points.empty());
  const auto f = estimate_F(p, RadialGrid::uniform(100.0, 10));
  CHECK(f.values[0] == 0.0);
}

TEST_CASE("F for a single center point matches direct enumeration") {
  const Window w = Window::rectangle(0, 0, 1000, 1000);
  const PointPattern p{{{500, 500}}, w};
  const double spacing = 10.0;
  const RadialGrid grid = RadialGrid::uniform(400.0, 40);
  const auto f = estimate_F(p, grid, spacing);
  const auto tests = grid_points(w, spacing);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.r_values[i];
    std::size_t num = 0, den = 0;
    for (const auto& u : tests) {
      const double b = w.boundary_distance(u);
      if (!(b > r)) continue;
      ++den;
      if (distance(u, p.points[0]) <= r) ++num;
    }
    if (den == 0) {
      CHECK_FALSE(is_defined(f.values[i]));
    } else {
      CHECK(f.values[i] ==
            static_cast<double>(num) / static_cast<double>(den));
      CHECK(f.n_valid[i] == den);
    }
  }
}

TEST_CASE("estimator errors") {
  const Window w = Window::rectangle(0, 0, 100, 100);
  const PointPattern empty{{}, w};
  const RadialGrid grid = RadialGrid::uniform(50.0, 10);
  CHECK_THROWS_AS(estimate_F(empty, grid), std::invalid_argument);
  const PointPattern two{{{10, 10}, {20, 20}}, w};
  CHECK_THROWS_AS(estimate_F(two, grid, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(estimate_J(PointPattern{{{1, 1}}, w}, grid),
                  std::invalid_argument);
}

TEST_CASE("mean F and G over PPP replicates match the Poisson law") {
  const Window w = Window::rectangle(0, 0, 8000, 6000);
  const double lambda = per_m2(3.0);
  const RadialGrid grid = RadialGrid::uniform(600.0, 100);
  const int reps = 120;
  std::vector<double> f_sum(grid.size(), 0.0), g_sum(grid.size(), 0.0);
  std::vector<int> f_n(grid.size(), 0), g_n(grid.size(), 0);
  for (int rep = 0; rep < reps; ++rep) {
    const PointPattern p = sample_ppp(lambda, w, Seed{4242}.for_replicate(
                                                     static_cast<std::uint64_t>(rep)));
    const auto f = estimate_F(p, grid);
    const auto g = estimate_G(p, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (is_defined(f.values[i])) {
        f_sum[i] += f.values[i];
        ++f_n[i];
      }
      if (is_defined(g.values[i])) {
        g_sum[i] += g.values[i];
        ++g_n[i];
      }
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.r_values[i];
    const double truth = -std::expm1(-lambda * kPi * r * r);
    REQUIRE(f_n[i] == reps);
    REQUIRE(g_n[i] == reps);
    CHECK(std::abs(f_sum[i] / f_n[i] - truth) < 0.03);
    CHECK(std::abs(g_sum[i] / g_n[i] - truth) < 0.03);
  }
}

TEST_CASE("mean J over PPP replicates stays near one") {
  const Window w = Window::rectangle(0, 0, 8000, 6000);
  const double lambda = per_m2(3.0);
  const RadialGrid grid = RadialGrid::uniform(400.0, 80);
  const int reps = 120;
  std::vector<double> j_sum(grid.size(), 0.0);
  std::vector<int> j_n(grid.size(), 0);
  for (int rep = 0; rep < reps; ++rep) {
    const PointPattern p = sample_ppp(lambda, w, Seed{777}.for_replicate(
                                                     static_cast<std::uint64_t>(rep)));
    const auto s = estimate_J(p, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (is_defined(s.j_hat[i])) {
        j_sum[i] += s.j_hat[i];
        ++j_n[i];
      }
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    REQUIRE(j_n[i] > 0);
    const double mean = j_sum[i] / j_n[i];
    CHECK(mean > 0.95);
    CHECK(mean < 1.05);
  }
}

TEST_CASE("ratio identity J (1 - F) = 1 - G at machine precision") {
  const Window w = Window::rectangle(0, 0, 5000, 5000);
  const PointPattern p = sample_ppp(per_m2(4.0), w, Seed{31337});
  const auto s = estimate_J(p, RadialGrid::uniform(600.0, 512));
  std::size_t checked = 0;
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    if (!is_defined(s.j_hat[i])) continue;
    const double lhs = s.j_hat[i] * (1.0 - s.f_hat[i]);
    const double rhs = 1.0 - s.g_hat[i];
    CHECK(std::abs(lhs - rhs) <= 1e-14 * (1.0 + std::abs(rhs)));
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("monotone F and G on sampled fixtures") {
  const Window w = Window::rectangle(0, 0, 8000, 6000);
  for (const std::uint64_t seed : {5ULL, 6ULL, 7ULL}) {
    const PointPattern p = sample_ppp(per_m2(3.0), w, Seed{seed});
    const auto s = estimate_J(p, RadialGrid::uniform(600.0, 512));
    double prev_f = 0.0, prev_g = 0.0;
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
      if (is_defined(s.f_hat[i])) {
        CHECK(s.f_hat[i] >= prev_f);
        prev_f = s.f_hat[i];
      }
      if (is_defined(s.g_hat[i])) {
        CHECK(s.g_hat[i] >= prev_g);
        prev_g = s.g_hat[i];
      }
    }
  }
}

TEST_CASE("halving the test spacing changes F by less than 0.01 RMS") {
  const Window w = Window::rectangle(0, 0, 6000, 4000);
  const PointPattern p = sample_ppp(150.0 / w.area(), w, Seed{2024});
  REQUIRE(p.size() >= 100);
  const RadialGrid grid = RadialGrid::uniform(500.0, 100);
  const double spacing = default_test_spacing(w);
  const auto f1 = estimate_F(p, grid, spacing);
  const auto f2 = estimate_F(p, grid, spacing / 2.0);
  double rms = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (is_defined(f1.values[i]) && is_defined(f2.values[i])) {
      rms += (f1.values[i] - f2.values[i]) * (f1.values[i] - f2.values[i]);
      ++n;
    }
  }
  rms = std::sqrt(rms / n);
  CHECK(rms < 0.01);
}

TEST_CASE("estimates are bit-identical under translation") {
  const Window w = Window::rectangle(0, 0, 4000, 4000);
  const PointPattern p = quantized_ppp(120.0 / w.area(), w, Seed{606});
  REQUIRE(p.size() >= 2);
  PointPattern q{p.points, p.window.translated(512.0, -256.0)};
  for (auto& pt : q.points) {
    pt.x += 512.0;
    pt.y += -256.0;
  }
  const RadialGrid grid = RadialGrid::uniform(500.0, 100);
  const auto a = estimate_J(p, grid, 40.0);
  const auto b = estimate_J(q, grid, 40.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(a.n_valid_f[i] == b.n_valid_f[i]);
    CHECK(a.n_valid_g[i] == b.n_valid_g[i]);
    const bool fa = is_defined(a.f_hat[i]), fb = is_defined(b.f_hat[i]);
    REQUIRE(fa == fb);
    if (fa) CHECK(a.f_hat[i] == b.f_hat[i]);
    const bool ga = is_defined(a.g_hat[i]), gb = is_defined(b.g_hat[i]);
    REQUIRE(ga == gb);
    if (ga) CHECK(a.g_hat[i] == b.g_hat[i]);
  }
}
