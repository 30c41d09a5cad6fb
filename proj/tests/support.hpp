#ifndef SRQ_TESTS_SUPPORT_HPP
#define SRQ_TESTS_SUPPORT_HPP

// Generators and independent oracles shared by the test binaries. Nothing
// here calls into the library's own arithmetic beyond the Quaternion struct.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "srq/fractional.hpp"

namespace oracle {

using srq::Quaternion;
using Mat4 = std::array<std::array<double, 4>, 4>;
using Complex = std::complex<double>;

/// Matrix of left multiplication by p on R^4 = (w, x, y, z).
inline Mat4 left_matrix(const Quaternion& p) {
  return {{{p.w, -p.x, -p.y, -p.z},
           {p.x, p.w, -p.z, p.y},
           {p.y, p.z, p.w, -p.x},
           {p.z, -p.y, p.x, p.w}}};
}

/// Hamilton product computed as a matrix-vector product.
inline Quaternion product(const Quaternion& p, const Quaternion& q) {
  const Mat4 m = left_matrix(p);
  const std::array<double, 4> v{q.w, q.x, q.y, q.z};
  std::array<double, 4> r{};
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) r[row] += m[row][col] * v[col];
  }
  return {r[0], r[1], r[2], r[3]};
}

inline double dist(const Quaternion& p, const Quaternion& q) {
  return std::sqrt((p.w - q.w) * (p.w - q.w) + (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y) +
                   (p.z - q.z) * (p.z - q.z));
}

/// Inverse from the 4x4 real matrix by Gauss-Jordan elimination.
inline Quaternion inverse(const Quaternion& p) {
  Mat4 m = left_matrix(p);
  std::array<double, 4> rhs{1.0, 0.0, 0.0, 0.0};
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 4; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int row = 0; row < 4; ++row) {
      if (row == col) continue;
      const double factor = m[row][col] / m[col][col];
      for (int k = 0; k < 4; ++k) m[row][k] -= factor * m[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }
  return {rhs[0] / m[0][0], rhs[1] / m[1][1], rhs[2] / m[2][2], rhs[3] / m[3][3]};
}

/// Complex 2x2 image of q = z1 + z2 j, z1 = w + x i, z2 = y + z i.
inline std::array<std::array<Complex, 2>, 2> complex_adjoint(const Quaternion& q) {
  const Complex z1(q.w, q.x);
  const Complex z2(q.y, q.z);
  return {{{z1, z2}, {-std::conj(z2), std::conj(z1)}}};
}

/// sqrt |det| of the 4x4 complex adjoint of a quaternionic 2x2 matrix.
inline double adjoint_determinant_root(const srq::QuaternionMatrix2& m) {
  std::array<std::array<Complex, 4>, 4> big{};
  const std::array<std::array<Quaternion, 2>, 2> blocks{{{m.a, m.c}, {m.b, m.d}}};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const auto block = complex_adjoint(blocks[r][c]);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) big[2 * r + i][2 * c + j] = block[i][j];
      }
    }
  }
  Complex det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 4; ++row) {
      if (std::abs(big[row][col]) > std::abs(big[pivot][col])) pivot = row;
    }
    if (std::abs(big[pivot][col]) == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(big[col], big[pivot]);
      det = -det;
    }
    det *= big[col][col];
    for (int row = col + 1; row < 4; ++row) {
      const Complex factor = big[row][col] / big[col][col];
      for (int k = col; k < 4; ++k) big[row][k] -= factor * big[col][k];
    }
  }
  return std::sqrt(std::abs(det));
}

/// Ordinary polynomial value at a real point: sum x^n a_n.
inline Quaternion value_at_real(const std::vector<Quaternion>& a, double x) {
  Quaternion out;
  double power = 1.0;
  for (const auto& an : a) {
    out += power * an;
    power *= x;
  }
  return out;
}

/// sum q^n a_n with explicit powers (no Horner).
inline Quaternion value_by_powers(const std::vector<Quaternion>& a, const Quaternion& q) {
  Quaternion out;
  Quaternion power = 1.0;
  for (const auto& an : a) {
    out += product(power, an);
    power = product(power, q);
  }
  return out;
}

/// Poincare distance from the logarithmic form.
inline double poincare_log(const Quaternion& p, const Quaternion& q) {
  const Quaternion diff = p - q;
  const Quaternion den = Quaternion(1.0) - product(p, Quaternion(q.w, -q.x, -q.y, -q.z));
  const double ratio = std::sqrt(diff.norm2() / den.norm2());
  return 0.5 * std::log((1.0 + ratio) / (1.0 - ratio));
}

}  // namespace oracle

namespace gen {

using srq::Quaternion;

/// Small hand-rolled generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double real(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::uint64_t bits() { return engine_(); }

  Quaternion quaternion(double half = 1.0) { return {real(-half, half), real(-half, half), real(-half, half), real(-half, half)}; }

  Quaternion in_ball(double radius) {
    for (;;) {
      const Quaternion q = quaternion();
      if (q.norm2() < 1.0) return q * radius;
    }
  }

  Quaternion unit() {
    for (;;) {
      const Quaternion q = quaternion();
      const double n = q.norm();
      if (n > 0.1 && n < 1.0) return q / n;
    }
  }

  Quaternion unit_imaginary() {
    for (;;) {
      const Quaternion q{0.0, real(), real(), real()};
      const double n = q.norm();
      if (n > 0.1 && n < 1.0) return q / n;
    }
  }

  /// Non-real point of the ball with |Im q| >= min_imag.
  Quaternion non_real_in_ball(double radius, double min_imag = 1e-2) {
    for (;;) {
      const Quaternion q = in_ball(radius);
      if (q.imag_norm() >= min_imag) return q;
    }
  }

  std::vector<Quaternion> coefficients(int degree, double half = 1.0) {
    std::vector<Quaternion> a(static_cast<std::size_t>(degree) + 1);
    for (auto& an : a) an = quaternion(half);
    return a;
  }

  srq::RegularPolynomial polynomial(int degree, double half = 1.0) {
    return srq::RegularPolynomial(coefficients(degree, half));
  }

  /// sum |a_n| < 1, hence a self-map of the ball.
  srq::RegularPolynomial self_map(int degree) {
    auto a = coefficients(degree);
    double sum = 0.0;
    for (const auto& an : a) sum += an.norm();
    const double target = real(0.3, 0.95);
    for (auto& an : a) an *= target / sum;
    return srq::RegularPolynomial(std::move(a));
  }

  srq::QuaternionMatrix2 matrix() {
    return {quaternion(), quaternion(), quaternion(), quaternion()};
  }

 private:
  std::mt19937_64 engine_;
};

/// Runs `property(gen, index)` for `count` generated cases.
template <class Property>
void for_all(std::uint64_t seed, int count, Property&& property) {
  Gen g(seed);
  for (int n = 0; n < count; ++n) property(g, n);
}

}  // namespace gen

#endif  // SRQ_TESTS_SUPPORT_HPP
