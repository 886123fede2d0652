#include "ginpp/summaries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ginpp {

namespace {

constexpr double kFMaxGuard = 1e-6;  // guard on 1 - F_hat before dividing

/// Uniform-cell spatial index for exact nearest-neighbor queries.
class CellIndex {
 public:
  CellIndex(const std::vector<Point>& pts, const BoundingBox& box)
      : pts_(pts), box_(box) {
    const std::size_t n = std::max<std::size_t>(pts.size(), 1);
    const double extent = std::max(box.extent(), 1e-9);
    ncols_ = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))));
    nrows_ = ncols_;
    cell_ = extent / static_cast<double>(ncols_);
    cells_.resize(ncols_ * nrows_);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      cells_[cell_of(pts[i])].push_back(i);
    }
  }

  /// Squared distance to the nearest point, optionally excluding one index.
  /// Exact: scans expanding cell rings until the ring lower bound passes the
  /// current best.
  double nearest_squared(const Point& q,
                         std::size_t exclude = static_cast<std::size_t>(-1)) const {
    double best = std::numeric_limits<double>::infinity();
    const long cq = col_of(q.x);
    const long rq = row_of(q.y);
    const long max_ring = static_cast<long>(std::max(ncols_, nrows_));
    for (long ring = 0; ring <= max_ring + 1; ++ring) {
      if (ring >= 2) {
        const double lb = (static_cast<double>(ring) - 1.0) * cell_;
        if (lb * lb > best) break;
      }
      scan_ring(q, cq, rq, ring, exclude, best);
    }
    return best;
  }

 private:
  std::size_t cell_of(const Point& p) const {
    return static_cast<std::size_t>(clamp_col(col_of(p.x))) +
           ncols_ * static_cast<std::size_t>(clamp_row(row_of(p.y)));
  }
  long col_of(double x) const {
    return static_cast<long>(std::floor((x - box_.x0) / cell_));
  }
  long row_of(double y) const {
    return static_cast<long>(std::floor((y - box_.y0) / cell_));
  }
  long clamp_col(long c) const {
    return std::clamp(c, 0L, static_cast<long>(ncols_) - 1);
  }
  long clamp_row(long r) const {
    return std::clamp(r, 0L, static_cast<long>(nrows_) - 1);
  }

  void scan_cell(const Point& q, long col, long row, std::size_t exclude,
                 double& best) const {
    if (col < 0 || row < 0 || col >= static_cast<long>(ncols_) ||
        row >= static_cast<long>(nrows_)) {
      return;
    }
    for (std::size_t idx :
         cells_[static_cast<std::size_t>(col) + ncols_ * static_cast<std::size_t>(row)]) {
      if (idx == exclude) continue;
      const double d2 = squared_distance(q, pts_[idx]);
      if (d2 < best) best = d2;
    }
  }

  void scan_ring(const Point& q, long cq, long rq, long ring, std::size_t exclude,
                 double& best) const {
    if (ring == 0) {
      scan_cell(q, cq, rq, exclude, best);
      return;
    }
    for (long dc = -ring; dc <= ring; ++dc) {
      scan_cell(q, cq + dc, rq - ring, exclude, best);
      scan_cell(q, cq + dc, rq + ring, exclude, best);
    }
    for (long dr = -ring + 1; dr <= ring - 1; ++dr) {
      scan_cell(q, cq - ring, rq + dr, exclude, best);
      scan_cell(q, cq + ring, rq + dr, exclude, best);
    }
  }

  const std::vector<Point>& pts_;
  BoundingBox box_;
  std::size_t ncols_{1}, nrows_{1};
  double cell_{1.0};
  std::vector<std::vector<std::size_t>> cells_;
};

/// Counts, on the shared grid, the reduced-sample ratio
///   est(r) = #{i : value_i <= r < censor_i} / #{i : censor_i > r}
/// via interval difference arrays; O(n log M + M).
BorderEstimate border_cdf(const std::vector<double>& values,
                          const std::vector<double>& censors,
                          const RadialGrid& grid) {
  const std::size_t m = grid.size();
  const auto& r = grid.r_values;
  std::vector<long> dden(m + 1, 0), dnum(m + 1, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    // First grid index with r >= censor_i: censored from there on.
    const std::size_t hi = static_cast<std::size_t>(
        std::lower_bound(r.begin(), r.end(), censors[i]) - r.begin());
    if (hi > 0) {
      dden[0] += 1;
      dden[hi] -= 1;
    }
    const std::size_t lo = static_cast<std::size_t>(
        std::lower_bound(r.begin(), r.end(), values[i]) - r.begin());
    if (lo < hi) {
      dnum[lo] += 1;
      dnum[hi] -= 1;
    }
  }
  BorderEstimate out;
  out.values.assign(m, std::numeric_limits<double>::quiet_NaN());
  out.n_valid.assign(m, 0);
  long den = 0, num = 0;
  for (std::size_t t = 0; t < m; ++t) {
    den += dden[t];
    num += dnum[t];
    out.n_valid[t] = static_cast<std::size_t>(den);
    if (den > 0) {
      out.values[t] = static_cast<double>(num) / static_cast<double>(den);
    }
  }
  return out;
}

}  // namespace

RadialGrid RadialGrid::uniform(double r_max, std::size_t n_steps) {
  if (!(r_max > 0.0)) throw std::invalid_argument("RadialGrid: r_max must be > 0");
  if (n_steps < 1) throw std::invalid_argument("RadialGrid: n_steps must be >= 1");
  RadialGrid g;
  g.r_values.resize(n_steps + 1);
  for (std::size_t i = 0; i <= n_steps; ++i) {
    g.r_values[i] =
        r_max * static_cast<double>(i) / static_cast<double>(n_steps);
  }
  return g;
}

bool is_defined(double v) { return !std::isnan(v); }

std::vector<std::pair<double, double>> nn_distances(const PointPattern& p) {
  if (p.points.size() < 2) {
    throw std::invalid_argument("nn_distances: pattern needs >= 2 points");
  }
  const CellIndex index(p.points, p.window.bbox());
  std::vector<std::pair<double, double>> out;
  out.reserve(p.points.size());
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    const double d = std::sqrt(index.nearest_squared(p.points[i], i));
    out.emplace_back(d, p.window.boundary_distance(p.points[i]));
  }
  return out;
}

BorderEstimate estimate_G(const PointPattern& p, const RadialGrid& grid) {
  const auto nn = nn_distances(p);
  std::vector<double> d(nn.size()), b(nn.size());
  for (std::size_t i = 0; i < nn.size(); ++i) {
    d[i] = nn[i].first;
    b[i] = nn[i].second;
  }
  return border_cdf(d, b, grid);
}

double default_test_spacing(const Window& w) { return w.bbox().extent() / 100.0; }

BorderEstimate estimate_F(const PointPattern& p, const RadialGrid& grid,
                          double spacing) {
  if (p.points.empty()) {
    throw std::invalid_argument("estimate_F: pattern is empty");
  }
  if (!(spacing > 0.0)) {
    throw std::invalid_argument("estimate_F: spacing must be positive");
  }
  const auto tests = grid_points(p.window, spacing);
  const CellIndex index(p.points, p.window.bbox());
  std::vector<double> e(tests.size()), b(tests.size());
  for (std::size_t j = 0; j < tests.size(); ++j) {
    e[j] = std::sqrt(index.nearest_squared(tests[j]));
    b[j] = p.window.boundary_distance(tests[j]);
  }
  return border_cdf(e, b, grid);
}

BorderEstimate estimate_F(const PointPattern& p, const RadialGrid& grid) {
  return estimate_F(p, grid, default_test_spacing(p.window));
}

SummaryEstimate estimate_J(const PointPattern& p, const RadialGrid& grid,
                           double spacing) {
  SummaryEstimate s;
  s.grid = grid;
  auto f = estimate_F(p, grid, spacing);
  auto g = estimate_G(p, grid);
  const std::size_t m = grid.size();
  s.f_hat = std::move(f.values);
  s.g_hat = std::move(g.values);
  s.n_valid_f = std::move(f.n_valid);
  s.n_valid_g = std::move(g.n_valid);
  s.j_hat.assign(m, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t t = 0; t < m; ++t) {
    if (is_defined(s.f_hat[t]) && is_defined(s.g_hat[t]) &&
        s.f_hat[t] < 1.0 - kFMaxGuard) {
      s.j_hat[t] = (1.0 - s.g_hat[t]) / (1.0 - s.f_hat[t]);
    }
  }
  return s;
}

SummaryEstimate estimate_J(const PointPattern& p, const RadialGrid& grid) {
  return estimate_J(p, grid, default_test_spacing(p.window));
}

}  // namespace ginpp
