#include "ginpp/model.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include "ginpp/math_util.hpp"

namespace ginpp {

GinibreParams::GinibreParams(double c_per_m2, double beta_value, double beta_max)
    : c(c_per_m2), beta(beta_value) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("GinibreParams: c must be positive and finite");
  }
  if (!(beta > 0.0) || !(beta <= beta_max)) {
    throw std::invalid_argument("GinibreParams: beta must lie in (0, " +
                                std::to_string(beta_max) + "]");
  }
}

GinibreParams GinibreParams::from_intensity(double lambda_per_m2, double beta_value,
                                            double beta_max) {
  return GinibreParams(lambda_per_m2 * kPi, beta_value, beta_max);
}

double theoretical_J(double r, const GinibreParams& params) {
  if (!(r >= 0.0)) throw std::invalid_argument("theoretical_J: r must be >= 0");
  const double x = params.c * r * r / params.beta;
  // 1 - beta + beta e^{-x} = 1 + beta expm1(-x), accurate for small x.
  const double denom = 1.0 + params.beta * std::expm1(-x);
  if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
  return 1.0 / denom;
}

double pair_correlation(double r, const GinibreParams& params) {
  if (!(r >= 0.0)) throw std::invalid_argument("pair_correlation: r must be >= 0");
  return -std::expm1(-params.c * r * r / params.beta);
}

double correlation_k(std::span<const Point> points, const GinibreParams& params) {
  const std::size_t k = points.size();
  if (k == 0) throw std::invalid_argument("correlation_k: needs at least one point");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument("correlation_k: points must be pairwise distinct");
      }
    }
  }

  const double scale = params.c / kPi;
  const double a = params.c / params.beta;
  Eigen::MatrixXcd m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::complex<double> zi(points[i].x, points[i].y);
    for (std::size_t j = 0; j < k; ++j) {
      const std::complex<double> zj(points[j].x, points[j].y);
      // Combined exponent keeps the diagonal exactly exp(0) = 1.
      const std::complex<double> expo =
          a * (zi * std::conj(zj) - 0.5 * (std::norm(zi) + std::norm(zj)));
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          scale * std::exp(expo);
    }
  }
  const std::complex<double> det = m.determinant();
  const double tol = 1e-10 * std::pow(scale, static_cast<double>(k));
  if (std::abs(det.imag()) > tol) {
    throw std::runtime_error("correlation_k: determinant is not numerically real");
  }
  return det.real();
}

double void_probability_disc(double r, const GinibreParams& params, double tol) {
  if (!(r >= 0.0)) {
    throw std::invalid_argument("void_probability_disc: r must be >= 0");
  }
  if (!(tol > 0.0) || !(tol <= 1e-6)) {
    throw std::invalid_argument("void_probability_disc: tol must lie in (0, 1e-6]");
  }
  if (r == 0.0) return 1.0;
  const double x = params.c * r * r / params.beta;
  if (x > 11000.0) {
    throw std::invalid_argument(
        "void_probability_disc: c r^2 / beta too large for the recurrence (> 11000)");
  }

  // Inline gamma_p recurrence over k: P(1,x) = 1 - e^{-x},
  // P(k+1,x) = P(k,x) - x^k e^{-x}/k!. Factors approach 1 as P(k,x) -> 0.
  long double p = -std::expm1(-static_cast<long double>(x));
  long double term = std::exp(-static_cast<long double>(x));
  long double product = 1.0L;
  const long double beta = params.beta;
  int k = 1;
  while (beta * p >= tol) {
    product *= (1.0L - beta * p);
    term *= static_cast<long double>(x) / static_cast<long double>(k);
    p -= term;
    if (p < 0.0L) p = 0.0L;
    ++k;
    if (k > 2000000) {
      throw std::runtime_error("void_probability_disc: product did not converge");
    }
  }
  return static_cast<double>(product);
}

double theoretical_F(double r, const GinibreParams& params, double tol) {
  return 1.0 - void_probability_disc(r, params, tol);
}

double theoretical_G(double r, const GinibreParams& params, double tol) {
  return 1.0 - theoretical_J(r, params) * void_probability_disc(r, params, tol);
}

double estimate_lambda(const PointPattern& p) {
  if (p.points.empty()) {
    throw std::invalid_argument("estimate_lambda: pattern is empty");
  }
  return static_cast<double>(p.points.size()) / p.window.area();
}

}  // namespace ginpp
