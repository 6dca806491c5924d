#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace curvop {

// Deterministic stream generator used everywhere randomness is needed, so
// that identical seeds give bit-identical runs on every platform.
//
// Algorithm: splitmix64. State advances by the golden-gamma increment
// 0x9E3779B97F4A7C15; output is the standard 3-stage xor-multiply finalizer.
// Uniform doubles take the top 53 bits; normals use the Box-Muller cosine
// branch on two fresh uniforms. Nothing here depends on std:: distribution
// implementations, which are not specified across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; u1 is shifted into (0, 1] so the log is
  // always finite.
  double normal() {
    const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Real and imaginary parts independent standard normals.
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  // Derives an independent stream seed from (seed, tags...). Used to give
  // every (cell, trial) its own stream without coupling consumption order.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b = 0, std::uint64_t c = 0) {
    Rng h(seed ^ 0xD1B54A32D192ED03ULL);
    std::uint64_t out = h.next() ^ a;
    h.state_ = out;
    out = h.next() ^ b;
    h.state_ = out;
    out = h.next() ^ c;
    h.state_ = out;
    return h.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace curvop
