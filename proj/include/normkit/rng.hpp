#pragma once

#include <cmath>
#include <cstdint>

namespace normkit {

/// Counter-based splitmix64 generator. The algorithm is fixed here (not
/// delegated to <random> distributions) so that seeded fills are
/// bit-identical across standard libraries and platforms.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 mantissa bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1]; safe as a log() argument.
  double next_double_open() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Gaussian via Box-Muller; produces values in pairs, second one cached.
  double normal(double mu, double sigma) {
    if (has_spare_) {
      has_spare_ = false;
      return mu + sigma * spare_;
    }
    const double u1 = next_double_open();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return mu + sigma * r * std::cos(theta);
  }

  /// Integer in [0, n) by 128-bit multiply-shift.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Derives the seed of child stream `stream` from a root seed. Every
/// component draws its randomness from one root seed through this
/// expansion, so a single number reproduces an entire run.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  SplitMix64 g(root ^ (0xA0761D6478BD642Full * (stream + 1)));
  return g.next();
}

} // namespace normkit
