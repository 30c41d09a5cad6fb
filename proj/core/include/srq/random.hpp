#ifndef SRQ_RANDOM_HPP
#define SRQ_RANDOM_HPP

#include <cstdint>
#include <random>

#include "srq/quaternion.hpp"

namespace srq {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Portable sampler: raw mt19937_64 output is converted by hand so streams
/// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Independent stream for batch `index` of a run seeded with `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Quaternion in_cube(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width),
            uniform(-half_width, half_width), uniform(-half_width, half_width)};
  }

  /// Uniform in the open 4-ball of the given radius (rejection from the cube).
  Quaternion in_ball(double radius) {
    for (;;) {
      const Quaternion q = in_cube(1.0);
      const double n2 = q.norm2();
      if (n2 < 1.0) return q * radius;
    }
  }

  Quaternion unit() {
    for (;;) {
      const Quaternion q = in_cube(1.0);
      const double n2 = q.norm2();
      if (n2 > 1e-4 && n2 < 1.0) return q / std::sqrt(n2);
    }
  }

  /// Uniform on S = {I : I^2 = -1}.
  Quaternion unit_imaginary() {
    for (;;) {
      const Quaternion q{0.0, uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      const double n2 = q.norm2();
      if (n2 > 1e-4 && n2 < 1.0) return q / std::sqrt(n2);
    }
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace srq

#endif  // SRQ_RANDOM_HPP
