#pragma once

#include <span>

#include "ginpp/geometry.hpp"
#include "ginpp/pattern.hpp"

namespace ginpp {

inline constexpr double kPi = 3.14159265358979323846;

/// Model parameters (c, beta) with c = lambda * pi (per square meter).
/// beta in (0, 1] is the thinning retention probability; fitted values up to
/// beta_max = 1.2 are representable for reporting, but only beta <= 1 is
/// sampleable.
struct GinibreParams {
  double c;     // per m^2
  double beta;  // dimensionless

  static constexpr double kDefaultBetaMax = 1.2;

  GinibreParams(double c_per_m2, double beta_value,
                double beta_max = kDefaultBetaMax);

  static GinibreParams from_intensity(double lambda_per_m2, double beta_value,
                                      double beta_max = kDefaultBetaMax);

  double intensity_per_m2() const { return c / kPi; }
};

/// J(r) = (1 - beta + beta e^{-c r^2 / beta})^{-1}.
/// For beta <= 1 this is finite and >= 1 everywhere; for beta > 1 it has a
/// pole at finite r and +infinity is returned at/beyond it.
double theoretical_J(double r, const GinibreParams& params);

/// Pair correlation g(r) = 1 - e^{-c r^2 / beta}, in [0, 1).
double pair_correlation(double r, const GinibreParams& params);

/// k-point correlation: det[K_{c,beta}(x_i, x_j)] with
/// K(x,y) = (c/pi) exp(-(c/2beta)(|x|^2+|y|^2)) exp((c/beta) x conj(y)),
/// points read as complex numbers. Throws on duplicate points.
double correlation_k(std::span<const Point> points, const GinibreParams& params);

/// Void probability of the origin-centered disc of radius r:
///   prod_{k>=1} (1 - beta * gamma(k, c r^2 / beta) / Gamma(k)),
/// truncated once the running factor exceeds 1 - tol.
double void_probability_disc(double r, const GinibreParams& params,
                             double tol = 1e-12);

/// F(r) = 1 - void_probability_disc(r).
double theoretical_F(double r, const GinibreParams& params, double tol = 1e-12);

/// G(r) = 1 - J(r) (1 - F(r)).
double theoretical_G(double r, const GinibreParams& params, double tol = 1e-12);

/// Intensity estimate n / |W|, per square meter.
double estimate_lambda(const PointPattern& p);

inline double per_km2(double lambda_per_m2) { return lambda_per_m2 * 1e6; }
inline double per_m2(double lambda_per_km2) { return lambda_per_km2 * 1e-6; }

}  // namespace ginpp
