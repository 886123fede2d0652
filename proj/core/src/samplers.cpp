#include "ginpp/samplers.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ginpp {

namespace detail {

int ginibre_truncation_rank(double c, double R) {
  if (!(c > 0.0) || !(R > 0.0)) {
    throw std::invalid_argument("ginibre sampler: c and R must be positive");
  }
  const double x = c * R * R;
  const long n = static_cast<long>(std::ceil(x)) +
                 static_cast<long>(std::ceil(4.0 * std::sqrt(x))) + 10;
  if (n > 4000) {
    throw std::invalid_argument(
        "ginibre sampler: truncation rank " + std::to_string(n) +
        " exceeds the supported range (4000); reduce c R^2");
  }
  return static_cast<int>(n);
}

namespace {

/// Unit feature vector u_k = phi_k(z)/||phi(z)||. Evaluated by a two-sided
/// recurrence from the peak index k* ~ c|z|^2, so every intermediate stays
/// <= 1 in magnitude and far-from-peak terms underflow to a harmless zero.
void unit_feature(double c, std::complex<double> z, const std::vector<double>& sqrt_k,
                  Eigen::Ref<Eigen::VectorXcd> u) {
  const int n = static_cast<int>(u.size());
  const std::complex<double> t = std::sqrt(c) * z;
  const double s = std::norm(t);  // c |z|^2
  if (s == 0.0) {
    u.setZero();
    u[0] = 1.0;
    return;
  }
  const int peak = std::min(static_cast<int>(s), n - 1);
  u[peak] = 1.0;
  for (int k = peak + 1; k < n; ++k) {
    u[k] = u[k - 1] * t / sqrt_k[static_cast<std::size_t>(k)];
  }
  const std::complex<double> down = std::conj(t) / s;
  for (int k = peak; k >= 1; --k) {
    u[k - 1] = u[k] * (sqrt_k[static_cast<std::size_t>(k)] * down);
  }
  u /= u.norm();
}

}  // namespace

std::vector<std::complex<double>> sample_ginibre_rank(double c, int rank,
                                                      RngStream& rng) {
  if (!(c > 0.0)) throw std::invalid_argument("ginibre sampler: c must be positive");
  if (rank < 1) throw std::invalid_argument("ginibre sampler: rank must be >= 1");
  const int n = rank;

  std::vector<double> sqrt_k(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) sqrt_k[static_cast<std::size_t>(k)] = std::sqrt(k);

  Eigen::MatrixXcd basis(n, n);       // orthonormal chosen directions, cols 0..i-1
  const int max_batch = 64;
  Eigen::MatrixXcd proposals(n, max_batch);
  Eigen::MatrixXcd coeff(n, max_batch);
  std::vector<std::complex<double>> batch_z(max_batch);
  Eigen::VectorXcd g(n), w2(n);

  std::vector<std::complex<double>> points;
  points.reserve(static_cast<std::size_t>(n));

  const double two_pi = 6.283185307179586476925286766559;

  for (int i = 0; i < n; ++i) {
    const int remaining = n - i;
    const int batch = std::clamp(n / (4 * remaining), 1, max_batch);
    long proposals_used = 0;
    bool accepted = false;

    while (!accepted) {
      if (proposals_used > kProposalCap) {
        throw std::runtime_error(
            "ginibre sampler: rejection sampling exceeded the proposal cap at point " +
            std::to_string(i + 1) + " of " + std::to_string(n) +
            " (numerical breakdown)");
      }
      // Mixture proposal: k uniform, squared modulus ~ Gamma(k+1, c), angle uniform.
      for (int b = 0; b < batch; ++b) {
        const std::uint64_t k = rng.uniform_index(static_cast<std::uint64_t>(n));
        const double r2 = rng.gamma(static_cast<double>(k) + 1.0, c);
        const double theta = two_pi * rng.uniform();
        batch_z[static_cast<std::size_t>(b)] =
            std::sqrt(r2) * std::complex<double>(std::cos(theta), std::sin(theta));
        unit_feature(c, batch_z[static_cast<std::size_t>(b)], sqrt_k,
                     proposals.col(b));
      }
      if (i > 0) {
        coeff.topLeftCorner(i, batch).noalias() =
            basis.leftCols(i).adjoint() * proposals.leftCols(batch);
      }
      for (int b = 0; b < batch && !accepted; ++b) {
        ++proposals_used;
        const double projected =
            i > 0 ? coeff.col(b).head(i).squaredNorm() : 0.0;
        const double accept_prob = std::max(0.0, 1.0 - projected);
        if (rng.uniform() < accept_prob) {
          // Gram-Schmidt: remove the projection onto chosen directions.
          g = proposals.col(b);
          if (i > 0) {
            g.noalias() -= basis.leftCols(i) * coeff.col(b).head(i);
          }
          double norm = g.norm();
          if (norm < 1e-2 && i > 0) {
            // Second orthogonalization pass when cancellation was heavy.
            w2.head(i).noalias() = basis.leftCols(i).adjoint() * g;
            g.noalias() -= basis.leftCols(i) * w2.head(i);
            norm = g.norm();
          }
          if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw std::runtime_error(
                "ginibre sampler: degenerate residual direction (numerical breakdown)");
          }
          basis.col(i) = g / norm;
          points.push_back(batch_z[static_cast<std::size_t>(b)]);
          accepted = true;
        }
      }
    }

    // Periodic re-orthonormalization of the newest block against the basis.
    if ((i + 1) % 32 == 0) {
      const int block_start = i - 31;
      for (int j = block_start; j <= i; ++j) {
        if (j > 0) {
          w2.head(j).noalias() = basis.leftCols(j).adjoint() * basis.col(j);
          basis.col(j).noalias() -= basis.leftCols(j) * w2.head(j);
        }
        basis.col(j) /= basis.col(j).norm();
      }
    }
  }
  return points;
}

std::vector<std::complex<double>> sample_ginibre_disc(double c, double R,
                                                      RngStream& rng) {
  const int rank = ginibre_truncation_rank(c, R);
  auto pts = sample_ginibre_rank(c, rank, rng);
  const double r2max = R * R;
  std::vector<std::complex<double>> kept;
  kept.reserve(pts.size());
  for (const auto& z : pts) {
    if (std::norm(z) <= r2max) kept.push_back(z);
  }
  return kept;
}

}  // namespace detail

PointPattern sample_ppp(double lambda_per_m2, const Window& w, Seed seed) {
  if (!(lambda_per_m2 >= 0.0)) {
    throw std::invalid_argument("sample_ppp: lambda must be >= 0");
  }
  const BoundingBox box = w.bbox();
  RngStream count_stream(seed, Stage::kPoissonCount);
  RngStream place_stream(seed, Stage::kPlacement);
  const double mean = lambda_per_m2 * box.width() * box.height();
  const std::uint64_t n = count_stream.poisson(mean);
  PointPattern out{{}, w};
  out.points.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    const Point p{place_stream.uniform(box.x0, box.x1),
                  place_stream.uniform(box.y0, box.y1)};
    if (w.contains(p)) out.points.push_back(p);
  }
  return out;
}

std::vector<Point> sample_truncated_gpp(double c, double R, Seed seed) {
  RngStream rng(seed, Stage::kGppProposal);
  const auto zs = detail::sample_ginibre_disc(c, R, rng);
  std::vector<Point> out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.push_back({z.real(), z.imag()});
  return out;
}

PointPattern sample_beta_gpp(const GinibreParams& params, const Window& w,
                             Seed seed) {
  if (params.beta > 1.0) {
    throw std::invalid_argument(
        "sample_beta_gpp: beta must lie in (0, 1] (the thinning construction "
        "cannot produce beta > 1)");
  }
  const double sqrt_beta = std::sqrt(params.beta);
  const Point ctr = w.centroid();
  const double r_cov = w.circumradius();
  const double r_sim = r_cov / sqrt_beta + 3.0 / std::sqrt(params.c);

  RngStream gpp_stream(seed, Stage::kGppProposal);
  const auto zs = detail::sample_ginibre_disc(params.c, r_sim, gpp_stream);

  RngStream thin_stream(seed, Stage::kThinning);
  PointPattern out{{}, w};
  for (const auto& z : zs) {
    if (thin_stream.uniform() >= params.beta) continue;
    const Point p{z.real() * sqrt_beta + ctr.x, z.imag() * sqrt_beta + ctr.y};
    if (w.contains(p)) out.points.push_back(p);
  }
  return out;
}

}  // namespace ginpp
