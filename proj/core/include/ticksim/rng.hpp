#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace ticksim {

// Deterministic random source with a fixed draw discipline. Standard-library
// distributions are avoided because their variate algorithms (and therefore
// the engine stream they consume) differ between implementations; here every
// uniform consumes exactly one 64-bit engine output and every normal exactly
// two (Box-Muller, no caching), so a seed pins the whole simulation.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; never zero, safe under log().
  double uniform_positive() {
    ++draws_;
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double normal(double mean, double stddev) {
    const double u1 = uniform_positive();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(kTwoPi * u2);
  }

  // Uniform integer on {1, ..., n}.
  int64_t uniform_index(int64_t n) {
    const auto k = static_cast<int64_t>(uniform() * static_cast<double>(n));
    return 1 + (k < n ? k : n - 1);
  }

  // Number of uniform variates consumed so far (a normal counts as two).
  uint64_t draws() const { return draws_; }

 private:
  static constexpr double kTwoPi = 6.283185307179586476925286766559;
  std::mt19937_64 engine_;
  uint64_t draws_ = 0;
};

}  // namespace ticksim
