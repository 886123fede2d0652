#include "ginpp/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "ginpp/model.hpp"

namespace ginpp {

namespace {

constexpr int kScanPoints = 200;
constexpr double kBetaTol = 1e-4;
constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2

double loss(const std::vector<double>& r, const std::vector<double>& j_hat,
            double c, double beta, double beta_max) {
  const GinibreParams params(c, beta, beta_max);
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double jt = theoretical_J(r[i], params);
    if (!std::isfinite(jt)) return std::numeric_limits<double>::infinity();
    const double d = j_hat[i] - jt;
    s += d * d;
  }
  return s;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

FitResult fit_beta(const SummaryEstimate& summary, double lambda_per_m2,
                   const FitOptions& options) {
  if (!(lambda_per_m2 > 0.0)) {
    throw std::invalid_argument("fit_beta: lambda_hat must be positive");
  }
  if (!(options.beta_range.lo > 0.0) ||
      !(options.beta_range.hi > options.beta_range.lo)) {
    throw std::invalid_argument("fit_beta: invalid beta range");
  }

  std::vector<double> r, j;
  r.reserve(summary.grid.size());
  j.reserve(summary.grid.size());
  for (std::size_t i = 0; i < summary.grid.size(); ++i) {
    const double ri = summary.grid.r_values[i];
    if (ri < options.r_min || ri > options.r_max) continue;
    const double ji = summary.j_hat[i];
    if (!is_defined(ji) || !std::isfinite(ji)) continue;
    r.push_back(ri);
    j.push_back(ji);
  }
  if (r.size() < 10) {
    throw std::invalid_argument(
        "fit_beta: only " + std::to_string(r.size()) +
        " defined J values in [" + format_double(options.r_min) + ", " +
        format_double(options.r_max) + "] m; need >= 10");
  }

  const double c = lambda_per_m2 * kPi;
  const double lo = options.beta_range.lo;
  const double hi = options.beta_range.hi;

  // Coarse log-spaced scan; the loss flattens toward beta -> 0, so resolution
  // is concentrated there.
  const double log_ratio = std::log(hi / lo);
  int best_idx = 0;
  double best_loss = std::numeric_limits<double>::infinity();
  std::vector<double> scan(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) {
    scan[static_cast<std::size_t>(i)] =
        lo * std::exp(log_ratio * static_cast<double>(i) / (kScanPoints - 1));
    const double l = loss(r, j, c, scan[static_cast<std::size_t>(i)], hi);
    if (l < best_loss) {
      best_loss = l;
      best_idx = i;
    }
  }

  // Golden-section refinement on the bracketing interval.
  double a = scan[static_cast<std::size_t>(std::max(0, best_idx - 1))];
  double b = scan[static_cast<std::size_t>(std::min(kScanPoints - 1, best_idx + 1))];
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = loss(r, j, c, x1, hi);
  double f2 = loss(r, j, c, x2, hi);
  while (b - a > kBetaTol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = loss(r, j, c, x1, hi);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = loss(r, j, c, x2, hi);
    }
  }
  double beta_hat = 0.5 * (a + b);
  double residual = loss(r, j, c, beta_hat, hi);
  if (best_loss < residual) {  // guard against a multimodal bracket
    beta_hat = scan[static_cast<std::size_t>(best_idx)];
    residual = best_loss;
  }

  FitResult out;
  out.beta_hat = beta_hat;
  out.lambda_per_m2 = lambda_per_m2;
  out.lambda_per_km2 = per_km2(lambda_per_m2);
  out.c_per_m2 = c;
  out.residual = residual;
  out.r_min_m = std::max(options.r_min, r.front());
  out.r_max_m = std::min(options.r_max, r.back());
  out.n_points = options.n_points;
  out.n_grid_used = r.size();
  return out;
}

std::string fit_result_to_json(const FitResult& fit) {
  std::string s = "{\n";
  s += "  \"beta\": " + format_double(fit.beta_hat) + ",\n";
  s += "  \"lambda_per_km2\": " + format_double(fit.lambda_per_km2) + ",\n";
  s += "  \"c_per_m2\": " + format_double(fit.c_per_m2) + ",\n";
  s += "  \"residual\": " + format_double(fit.residual) + ",\n";
  s += "  \"r_min_m\": " + format_double(fit.r_min_m) + ",\n";
  s += "  \"r_max_m\": " + format_double(fit.r_max_m) + ",\n";
  s += "  \"n_points\": " + std::to_string(fit.n_points) + ",\n";
  s += "  \"n_grid_used\": " + std::to_string(fit.n_grid_used) + "\n";
  s += "}\n";
  return s;
}

std::string fit_result_to_csv(const FitResult& fit) {
  std::string s =
      "beta,lambda_per_km2,c_per_m2,residual,r_min_m,r_max_m,n_points,n_grid_used\n";
  s += format_double(fit.beta_hat) + "," + format_double(fit.lambda_per_km2) + "," +
       format_double(fit.c_per_m2) + "," + format_double(fit.residual) + "," +
       format_double(fit.r_min_m) + "," + format_double(fit.r_max_m) + "," +
       std::to_string(fit.n_points) + "," + std::to_string(fit.n_grid_used) + "\n";
  return s;
}

}  // namespace ginpp
