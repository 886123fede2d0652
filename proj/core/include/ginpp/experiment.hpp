#pragma once

#include <span>
#include <vector>

#include "ginpp/fit.hpp"
#include "ginpp/rng.hpp"

namespace ginpp {

/// One base component of a superposition experiment.
struct SuperpositionComponent {
  double beta{0.8};
  double lambda_per_km2{1.0};
};

struct ConvergenceOptions {
  std::vector<int> n_values{1, 2, 4, 8, 16};
  int reps{20};
  double probe_radius_m{300.0};
  double grid_r_max{600.0};
  std::size_t grid_steps{512};
  double fit_r_min{0.0};
  double fit_r_max{400.0};
  BetaRange beta_range{};
  double spacing{0.0};  // 0 = default (extent / 100)
};

struct ConvergenceRow {
  int n{0};
  double mean_beta_hat{0.0};
  double se_beta_hat{0.0};       // NaN when reps < 2
  double void_prob_empirical{0.0};
  double void_prob_target{0.0};  // e^{-lambda_total |A|}
  double void_gap{0.0};          // |empirical - target|
  double void_gap_se{0.0};       // binomial standard error
};

/// Superposition convergence experiment: at each level n, sample n
/// beta-Ginibre components (cycling through the base list, intensities scaled
/// by m/n so the total stays fixed), superpose, estimate J, fit beta, and
/// probe void probability of a disc at the window centroid.
/// Deterministic: every (level, replicate, component) owns a derived stream.
std::vector<ConvergenceRow> convergence_experiment(
    std::span<const SuperpositionComponent> components, const Window& w,
    const ConvergenceOptions& options, Seed seed);

/// Components for level n: entry i = base[i mod m] with lambda scaled by m/n.
std::vector<SuperpositionComponent> scaled_components(
    std::span<const SuperpositionComponent> base, int n);

}  // namespace ginpp
