#ifndef SRQ_QUATERNION_HPP
#define SRQ_QUATERNION_HPP

#include <cmath>

#include "srq/error.hpp"

namespace srq {

/// Tolerances shared by every module.
struct Tolerances {
  /// Algebraic identities (associativity, conjugation, reconstruction).
  double identity = 1e-12;
  /// Cross-checks between independent numerical routes.
  double cross = 1e-9;
  /// Moduli below this are treated as zero by `invert`.
  double zero = 1e-150;
};

/// Process-wide defaults; read-only from library code.
const Tolerances& default_tolerances() noexcept;

/// A quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_) : w(w_) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0, x, y, z}; }

  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }

  constexpr bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }
  bool is_finite() const {
    return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s; x /= s; y /= s; z /= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator*(Quaternion p, double s) { return p *= s; }
constexpr Quaternion operator*(double s, Quaternion p) { return p *= s; }
constexpr Quaternion operator/(Quaternion p, double s) { return p /= s; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion multiply(const Quaternion& p, const Quaternion& q) { return p * q; }
constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
inline double modulus(const Quaternion& q) { return q.norm(); }

/// q^{-1} = conj(q)/|q|^2. Throws ZeroDivision when |q| <= eps.
Quaternion invert(const Quaternion& q, double eps = default_tolerances().zero);

/// p q^{-1}
inline Quaternion right_divide(const Quaternion& p, const Quaternion& q) { return p * invert(q); }
/// q^{-1} p
inline Quaternion left_divide(const Quaternion& q, const Quaternion& p) { return invert(q) * p; }

double distance(const Quaternion& p, const Quaternion& q);

/// q = x0 + y0 I with y0 >= 0 and I a unit imaginary quaternion.
struct SliceCoordinates {
  double x0 = 0.0;
  double y0 = 0.0;
  Quaternion unit = Quaternion::i();

  Quaternion reconstruct() const { return x0 + y0 * unit; }
};

/// Real points get the canonical unit I = i. Near-real points keep their tiny y0.
SliceCoordinates slice_decompose(const Quaternion& q);

/// The point x + y I on the slice of `unit`.
inline Quaternion on_slice(double x, double y, const Quaternion& unit) { return x + y * unit; }

}  // namespace srq

#endif  // SRQ_QUATERNION_HPP
