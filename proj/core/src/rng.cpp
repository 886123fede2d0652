#include "ginpp/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace ginpp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t base, std::uint64_t label) {
  return splitmix64(splitmix64(base) ^ splitmix64(label * 0x2545F4914F6CDD1DULL + 1));
}

}  // namespace

Seed Seed::for_replicate(std::uint64_t replicate) const {
  return Seed{derive(master, 0xA511E9B3ULL + replicate)};
}

Seed Seed::with_label(std::uint64_t label) const {
  return Seed{derive(master, 0xC0FFEEULL + label)};
}

RngStream::RngStream(Seed seed, Stage stage)
    : engine_(derive(seed.master, static_cast<std::uint64_t>(stage))) {}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) { return a + (b - a) * uniform(); }

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
  const std::uint64_t threshold = (0ULL - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

double RngStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller; u1 in (0,1] so log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  cached_normal_ = r * std::sin(kTwoPi * u2);
  has_cached_normal_ = true;
  return r * std::cos(kTwoPi * u2);
}

double RngStream::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("exponential: rate must be positive");
  return -std::log(1.0 - uniform()) / rate;
}

double RngStream::gamma(double shape, double rate) {
  if (!(shape >= 1.0)) throw std::invalid_argument("gamma: shape must be >= 1");
  if (!(rate > 0.0)) throw std::invalid_argument("gamma: rate must be positive");
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v / rate;
    }
  }
}

std::uint64_t RngStream::poisson(double mean) {
  if (!(mean >= 0.0)) throw std::invalid_argument("poisson: mean must be >= 0");
  if (mean >= 1e7) throw std::invalid_argument("poisson: mean too large (>= 1e7)");
  if (mean == 0.0) return 0;
  // Sum of Exp(1) inter-arrival times; exact for any mean at O(mean) cost.
  std::uint64_t k = 0;
  double s = -std::log(1.0 - uniform());
  while (s <= mean) {
    ++k;
    s += -std::log(1.0 - uniform());
  }
  return k;
}

}  // namespace ginpp
