#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ginpp/pattern.hpp"

namespace ginpp {

/// Ascending radial grid starting at 0.
struct RadialGrid {
  std::vector<double> r_values;

  /// n_steps equal steps from 0 to r_max (n_steps + 1 values).
  static RadialGrid uniform(double r_max = 600.0, std::size_t n_steps = 512);

  std::size_t size() const { return r_values.size(); }
};

/// Border-corrected empirical summary functions on a shared grid.
/// Undefined grid values are NaN with the matching validity count;
/// j_hat is defined only where both estimates are and f_hat < 1 - 1e-6.
struct SummaryEstimate {
  RadialGrid grid;
  std::vector<double> f_hat;
  std::vector<double> g_hat;
  std::vector<double> j_hat;
  std::vector<std::size_t> n_valid_f;  // uncensored test locations per r
  std::vector<std::size_t> n_valid_g;  // uncensored pattern points per r
};

bool is_defined(double v);

/// Per point: (distance to nearest other point, distance to window boundary),
/// in point order. Requires >= 2 points.
std::vector<std::pair<double, double>> nn_distances(const PointPattern& p);

struct BorderEstimate {
  std::vector<double> values;          // NaN where undefined
  std::vector<std::size_t> n_valid;    // censoring denominators
};

/// Reduced-sample (border) estimator of the nearest-neighbor distance CDF:
///   G_hat(r) = #{i : d_i <= r, b_i > r} / #{i : b_i > r}.
BorderEstimate estimate_G(const PointPattern& p, const RadialGrid& grid);

/// Reduced-sample estimator of the empty-space function over an offset test
/// lattice (default spacing: bbox extent / 100).
BorderEstimate estimate_F(const PointPattern& p, const RadialGrid& grid,
                          double spacing);
BorderEstimate estimate_F(const PointPattern& p, const RadialGrid& grid);

/// J_hat = (1 - G_hat) / (1 - F_hat) wherever both are defined and
/// F_hat < 1 - 1e-6.
SummaryEstimate estimate_J(const PointPattern& p, const RadialGrid& grid,
                           double spacing);
SummaryEstimate estimate_J(const PointPattern& p, const RadialGrid& grid);

double default_test_spacing(const Window& w);

}  // namespace ginpp
