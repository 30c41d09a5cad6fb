#include "srq/geometry.hpp"

#include <cmath>
#include <string>

namespace srq {

void require_in_ball(const Quaternion& q, const char* what) {
  if (!(q.norm() <= 1.0 - kBoundaryMargin)) {
    throw Error(ErrorCode::OutsideBall, std::string(what) + " must lie in the open unit ball");
  }
}

double pseudo_distance_squared(const Quaternion& q1, const Quaternion& q2) {
  return (q1 - q2).norm2() / (1.0 - q1 * conjugate(q2)).norm2();
}

double poincare_distance(const Quaternion& q1, const Quaternion& q2) {
  require_in_ball(q1, "q1");
  require_in_ball(q2, "q2");
  const double ratio = (q1 - q2).norm() / (1.0 - q1 * conjugate(q2)).norm();
  return std::atanh(ratio);
}

Quaternion pointwise_moebius(const Quaternion& q0, const Quaternion& q) {
  return invert(1.0 - q * conjugate(q0)) * (q - q0);
}

Quaternion pointwise_moebius_inverse(const Quaternion& q0, const Quaternion& p) {
  return (p + q0) * invert(1.0 + conjugate(q0) * p);
}

Quaternion classical_moebius(const Quaternion& q0, const Quaternion& u, const Quaternion& v,
                             const Quaternion& q) {
  require_in_ball(q0, "q0");
  require_in_ball(q, "q");
  if (std::abs(u.norm() - 1.0) > 1e-9 || std::abs(v.norm() - 1.0) > 1e-9) {
    throw Error(ErrorCode::OutsideBall, "u and v must be unit quaternions");
  }
  return invert(v) * pointwise_moebius(q0, q) * u;
}

RegularQuotient regular_moebius_quotient(const Quaternion& q0, const Quaternion& u) {
  return RegularQuotient(RegularPolynomial{1.0, -conjugate(q0)}, RegularPolynomial{-(q0 * u), u});
}

RegularQuotient regular_moebius_right_quotient(const Quaternion& q0, const Quaternion& u) {
  const Quaternion uinv = invert(u);
  return RegularQuotient(RegularPolynomial{uinv, -(uinv * conjugate(q0))},
                         RegularPolynomial{-q0, 1.0}, QuotientSide::right);
}

Quaternion regular_moebius(const Quaternion& q0, const Quaternion& u, const Quaternion& q) {
  require_in_ball(q0, "q0");
  require_in_ball(q, "q");
  if (std::abs(u.norm() - 1.0) > 1e-9) {
    throw Error(ErrorCode::OutsideBall, "u must be a unit quaternion");
  }
  return evaluate(regular_moebius_quotient(q0, u), q);
}

Quaternion twist_map(const Quaternion& q0, const Quaternion& q) {
  const Quaternion w = 1.0 - q * q0;
  return invert(w) * q * w;
}

Quaternion twist_map_inverse(const Quaternion& q0, const Quaternion& q) {
  const Quaternion w = 1.0 - q * conjugate(q0);
  return invert(w) * q * w;
}

SphericalExpansion moebius_expansion_coefficients(const Quaternion& q0, std::size_t n_max) {
  require_in_ball(q0, "q0");
  if (q0.is_real() && n_max > 1) {
    throw Error(ErrorCode::DegenerateCenter, "closed-form coefficients need a non-real q0");
  }
  const Quaternion q0bar = conjugate(q0);
  const double radial = 1.0 - q0.norm2();        // 1 - |q0|^2
  const Quaternion spherical = 1.0 - q0bar * q0bar;  // 1 - conj(q0)^2
  const Quaternion spherical_inv = invert(spherical);

  SphericalExpansion e{q0, {0.0}};
  e.coefficients.reserve(2 * n_max + 2);
  // Everything lives on the slice of q0, so the factors commute.
  Quaternion odd = spherical_inv;                  // A_{2n-1}, n = 1
  Quaternion even = q0bar * spherical_inv / radial;  // A_{2n},   n = 1
  for (std::size_t n = 1; e.coefficients.size() < 2 * n_max + 2; ++n) {
    e.coefficients.push_back(odd);
    if (e.coefficients.size() < 2 * n_max + 2) e.coefficients.push_back(even);
    const Quaternion step = q0bar * q0bar * spherical_inv / radial;
    odd = odd * step;
    even = even * step;
  }
  return e;
}

RegularPolynomial moebius_power_series(const Quaternion& q0, std::size_t degree) {
  std::vector<Quaternion> c(degree + 1);
  c[0] = -q0;
  const Quaternion q0bar = conjugate(q0);
  const double radial = 1.0 - q0.norm2();
  Quaternion power = 1.0;
  for (std::size_t n = 1; n <= degree; ++n) {
    c[n] = power * radial;
    power = power * q0bar;
  }
  return RegularPolynomial(std::move(c));
}

std::pair<double, double> conformality_defect(const Quaternion& q0) {
  require_in_ball(q0, "q0");
  require_non_real(q0, "conformality defect");
  const Quaternion q0bar = conjugate(q0);
  return {1.0 / (1.0 - q0.norm2()), 1.0 / (1.0 - q0bar * q0bar).norm()};
}

GeodesicSegment::GeodesicSegment(const Quaternion& q1, const Quaternion& q2) : q1_(q1), q2_(q2) {
  require_in_ball(q1, "q1");
  require_in_ball(q2, "q2");
  if (distance(q1, q2) <= 1e-15) {
    throw Error(ErrorCode::CoincidentPoints, "a geodesic needs two distinct points");
  }
  // Move q1 to the origin isometrically; there the geodesic is a diameter.
  const Quaternion w = pointwise_moebius(q1, q2);
  const double r = w.norm();
  direction_ = w / r;
  length_ = std::atanh(r);
}

Quaternion GeodesicSegment::operator()(double t) const {
  if (t == 1.0) return q2_;
  const double r = std::tanh(t * length_);
  return pointwise_moebius_inverse(q1_, r * direction_);
}

std::vector<Quaternion> GeodesicSegment::sample(std::size_t count) const {
  std::vector<Quaternion> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const double t = count > 1 ? static_cast<double>(n) / static_cast<double>(count - 1) : 0.0;
    out.push_back((*this)(t));
  }
  return out;
}

GeodesicSegment geodesic(const Quaternion& q1, const Quaternion& q2) { return {q1, q2}; }

}  // namespace srq
