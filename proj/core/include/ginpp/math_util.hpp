#pragma once

namespace ginpp {

/// Regularized lower incomplete gamma P(k, x) = gamma(k, x)/Gamma(k) for
/// integer shape k >= 1, via the recurrence
///   P(1, x) = 1 - e^{-x},   P(k+1, x) = P(k, x) - x^k e^{-x} / k!
/// which is exact for integer shape. Long-double accumulation takes over for
/// large x where e^{-x} underflows in double.
double gamma_p(int k, double x);

}  // namespace ginpp
