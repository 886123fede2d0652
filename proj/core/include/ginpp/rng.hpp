#pragma once

#include <cstdint>
#include <random>

namespace ginpp {

/// Master seed. Replicate and stage streams are derived deterministically, so
/// replicates can run in any order (or in parallel) without cross-talk.
struct Seed {
  std::uint64_t master{0};

  /// Independent sub-seed for the i-th replicate.
  Seed for_replicate(std::uint64_t replicate) const;
  /// Independent sub-seed for an arbitrary label (component index, level, ...).
  Seed with_label(std::uint64_t label) const;
};

/// Algorithm stages that own separate draw streams.
enum class Stage : std::uint64_t {
  kPoissonCount = 1,
  kPlacement = 2,
  kGppProposal = 3,
  kThinning = 4,
  kGeneric = 5,
};

/// One deterministic random stream. Distribution transforms are implemented
/// here (not via <random> distributions, whose output is implementation
/// defined) so that a given (seed, stage) yields the same draws everywhere.
class RngStream {
 public:
  RngStream(Seed seed, Stage stage);

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform();
  /// Uniform on [a, b).
  double uniform(double a, double b);
  /// Uniform integer in {0, ..., n-1}, unbiased.
  std::uint64_t uniform_index(std::uint64_t n);
  /// Standard normal (Box-Muller, cached pair).
  double normal();
  /// Exponential with the given rate.
  double exponential(double rate);
  /// Gamma(shape, rate), shape >= 1 (Marsaglia-Tsang).
  double gamma(double shape, double rate);
  /// Poisson count. O(mean) arrival-time construction; mean must be < 1e7.
  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
  double cached_normal_{0.0};
  bool has_cached_normal_{false};
};

}  // namespace ginpp
