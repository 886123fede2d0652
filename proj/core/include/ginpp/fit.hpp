#pragma once

#include <cstddef>
#include <limits>
#include <string>

#include "ginpp/summaries.hpp"

namespace ginpp {

struct BetaRange {
  double lo{0.01};
  double hi{1.2};
};

/// Minimum-contrast fit of beta against theoretical J on the defined grid
/// values, with lambda held fixed.
struct FitResult {
  double beta_hat{0.0};
  double lambda_per_km2{0.0};
  double lambda_per_m2{0.0};
  double c_per_m2{0.0};
  double residual{0.0};        // attained sum of squared J deviations
  double r_min_m{0.0};
  double r_max_m{0.0};
  std::size_t n_points{0};     // pattern size, stamped by the caller
  std::size_t n_grid_used{0};  // grid values entering the loss

  /// Fits above 1 are representable but not thinning-constructible.
  bool outside_sampleable_range() const { return beta_hat > 1.0; }
};

struct FitOptions {
  double r_min{0.0};
  double r_max{std::numeric_limits<double>::infinity()};
  BetaRange beta_range{};
  std::size_t n_points{0};
};

/// argmin over beta of sum_r (J_hat(r) - J(r; c = lambda pi, beta))^2 over
/// defined grid values in [r_min, r_max], uniform weights. Coarse log-spaced
/// scan (200 points) followed by golden-section refinement to |dbeta| < 1e-4.
/// Throws std::invalid_argument when fewer than 10 defined values remain.
FitResult fit_beta(const SummaryEstimate& summary, double lambda_per_m2,
                   const FitOptions& options = {});

/// Flat key-value JSON document (beta, lambda_per_km2, c_per_m2, residual,
/// r_min_m, r_max_m, n_points, n_grid_used).
std::string fit_result_to_json(const FitResult& fit);

/// Single CSV header + row with the same fields.
std::string fit_result_to_csv(const FitResult& fit);

}  // namespace ginpp
