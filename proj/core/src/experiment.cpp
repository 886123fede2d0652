#include "ginpp/experiment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ginpp/model.hpp"
#include "ginpp/samplers.hpp"
#include "ginpp/summaries.hpp"

namespace ginpp {

std::vector<SuperpositionComponent> scaled_components(
    std::span<const SuperpositionComponent> base, int n) {
  if (base.empty()) {
    throw std::invalid_argument("scaled_components: component list is empty");
  }
  if (n < 1) throw std::invalid_argument("scaled_components: n must be >= 1");
  const double m = static_cast<double>(base.size());
  std::vector<SuperpositionComponent> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& b = base[static_cast<std::size_t>(i) % base.size()];
    out.push_back({b.beta, b.lambda_per_km2 * m / static_cast<double>(n)});
  }
  return out;
}

std::vector<ConvergenceRow> convergence_experiment(
    std::span<const SuperpositionComponent> components, const Window& w,
    const ConvergenceOptions& options, Seed seed) {
  if (components.empty()) {
    throw std::invalid_argument("convergence_experiment: no components");
  }
  if (options.reps < 1) {
    throw std::invalid_argument("convergence_experiment: reps must be >= 1");
  }
  for (const auto& comp : components) {
    if (!(comp.beta > 0.0) || !(comp.beta <= 1.0)) {
      throw std::invalid_argument(
          "convergence_experiment: component beta must lie in (0, 1]");
    }
    if (!(comp.lambda_per_km2 > 0.0)) {
      throw std::invalid_argument(
          "convergence_experiment: component lambda must be positive");
    }
  }

  const RadialGrid grid = RadialGrid::uniform(options.grid_r_max, options.grid_steps);
  const double spacing =
      options.spacing > 0.0 ? options.spacing : default_test_spacing(w);
  const Point probe_center = w.centroid();
  const double probe_area = kPi * options.probe_radius_m * options.probe_radius_m;

  std::vector<ConvergenceRow> rows;
  rows.reserve(options.n_values.size());

  for (std::size_t level = 0; level < options.n_values.size(); ++level) {
    const int n = options.n_values[level];
    const auto comps = scaled_components(components, n);
    double lambda_total_m2 = 0.0;
    for (const auto& comp : comps) lambda_total_m2 += per_m2(comp.lambda_per_km2);

    std::vector<double> beta_hats;
    beta_hats.reserve(static_cast<std::size_t>(options.reps));
    std::size_t empty_probes = 0;

    const Seed level_seed = seed.with_label(static_cast<std::uint64_t>(n));
    for (int rep = 0; rep < options.reps; ++rep) {
      const Seed rep_seed = level_seed.for_replicate(static_cast<std::uint64_t>(rep));
      std::vector<PointPattern> parts;
      parts.reserve(comps.size());
      for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const GinibreParams params =
            GinibreParams::from_intensity(per_m2(comps[ci].lambda_per_km2),
                                          comps[ci].beta);
        parts.push_back(
            sample_beta_gpp(params, w, rep_seed.with_label(ci)));
      }
      const PointPattern merged = superpose(parts);

      if (count_in_disc(merged, probe_center, options.probe_radius_m) == 0) {
        ++empty_probes;
      }

      const double lambda_hat = estimate_lambda(merged);
      const SummaryEstimate summary = estimate_J(merged, grid, spacing);
      FitOptions fit_opts;
      fit_opts.r_min = options.fit_r_min;
      fit_opts.r_max = options.fit_r_max;
      fit_opts.beta_range = options.beta_range;
      fit_opts.n_points = merged.size();
      beta_hats.push_back(fit_beta(summary, lambda_hat, fit_opts).beta_hat);
    }

    ConvergenceRow row;
    row.n = n;
    double mean = 0.0;
    for (double b : beta_hats) mean += b;
    mean /= static_cast<double>(beta_hats.size());
    row.mean_beta_hat = mean;
    if (beta_hats.size() >= 2) {
      double var = 0.0;
      for (double b : beta_hats) var += (b - mean) * (b - mean);
      var /= static_cast<double>(beta_hats.size() - 1);
      row.se_beta_hat = std::sqrt(var / static_cast<double>(beta_hats.size()));
    } else {
      row.se_beta_hat = std::numeric_limits<double>::quiet_NaN();
    }
    const double p_hat = static_cast<double>(empty_probes) /
                         static_cast<double>(options.reps);
    row.void_prob_empirical = p_hat;
    row.void_prob_target = std::exp(-lambda_total_m2 * probe_area);
    row.void_gap = std::abs(p_hat - row.void_prob_target);
    row.void_gap_se = std::sqrt(std::max(p_hat * (1.0 - p_hat), 0.0) /
                                static_cast<double>(options.reps));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ginpp
