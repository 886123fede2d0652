#include "ginpp/math_util.hpp"

#include <cmath>
#include <stdexcept>

namespace ginpp {

double gamma_p(int k, double x) {
  if (k < 1) throw std::invalid_argument("gamma_p: shape k must be >= 1");
  if (!(x >= 0.0)) throw std::invalid_argument("gamma_p: x must be >= 0");
  if (x == 0.0) return 0.0;

  if (x <= 700.0) {
    double p = -std::expm1(-x);  // P(1, x)
    double t = std::exp(-x);     // term x^j e^{-x}/j!, j = 0
    for (int j = 1; j < k; ++j) {
      t *= x / static_cast<double>(j);
      p -= t;
    }
    return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
  }

  // e^{-x} underflows double near x ~ 745; 80-bit long double reaches x ~ 11350.
  if (x > 11000.0) {
    throw std::invalid_argument("gamma_p: x too large for the recurrence (> 11000)");
  }
  long double p = -std::expm1(-static_cast<long double>(x));
  long double t = std::exp(-static_cast<long double>(x));
  for (int j = 1; j < k; ++j) {
    t *= static_cast<long double>(x) / static_cast<long double>(j);
    p -= t;
  }
  if (p < 0.0L) p = 0.0L;
  if (p > 1.0L) p = 1.0L;
  return static_cast<double>(p);
}

}  // namespace ginpp
