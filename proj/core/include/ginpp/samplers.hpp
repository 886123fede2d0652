#pragma once

#include <complex>
#include <vector>

#include "ginpp/model.hpp"
#include "ginpp/pattern.hpp"
#include "ginpp/rng.hpp"

namespace ginpp {

/// Homogeneous Poisson process on the window: Poisson count on the bounding
/// box, uniform placement, clip.
PointPattern sample_ppp(double lambda_per_m2, const Window& w, Seed seed);

/// Exact sample of the rank-N truncated Ginibre process (projection DPP with
/// eigenfunctions phi_k(z) = sqrt(c/pi) (sqrt(c) z)^k / sqrt(k!) e^{-c|z|^2/2},
/// k < N), restricted to the origin-centered disc |z| <= R. The truncation
/// rank is N = ceil(cR^2) + ceil(4 sqrt(cR^2)) + 10.
std::vector<Point> sample_truncated_gpp(double c, double R, Seed seed);

/// beta-Ginibre on a window: simulate the GPP with the same c on the covering
/// disc of radius circumradius(w)/sqrt(beta) + 3/sqrt(c) about the window
/// centroid, keep each point with probability beta, rescale by sqrt(beta),
/// translate back, clip. Requires beta <= 1.
PointPattern sample_beta_gpp(const GinibreParams& params, const Window& w, Seed seed);

namespace detail {

int ginibre_truncation_rank(double c, double R);

/// All `rank` points of the rank-`rank` projection DPP, unrestricted.
/// Exposed for tests (rank override, pre-restriction radial laws).
std::vector<std::complex<double>> sample_ginibre_rank(double c, int rank,
                                                      RngStream& rng);

/// Rank-N sample restricted to |z| <= R.
std::vector<std::complex<double>> sample_ginibre_disc(double c, double R,
                                                      RngStream& rng);

inline constexpr long kProposalCap = 1000000;  // per point

}  // namespace detail

}  // namespace ginpp
