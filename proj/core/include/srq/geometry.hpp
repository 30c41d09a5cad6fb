#ifndef SRQ_GEOMETRY_HPP
#define SRQ_GEOMETRY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "srq/fractional.hpp"
#include "srq/rational.hpp"
#include "srq/series.hpp"

namespace srq {

/// Points with |q| > 1 - kBoundaryMargin count as outside the ball.
inline constexpr double kBoundaryMargin = 1e-12;

/// Throws OutsideBall unless |q| <= 1 - kBoundaryMargin.
void require_in_ball(const Quaternion& q, const char* what);

/// |q1 - q2|^2 / |1 - q1 conj(q2)|^2, the squared pseudo-hyperbolic distance.
double pseudo_distance_squared(const Quaternion& q1, const Quaternion& q2);

/// Poincare distance of the unit ball: atanh(|1 - q1 conj(q2)|^{-1} |q1 - q2|).
double poincare_distance(const Quaternion& q1, const Quaternion& q2);

/// M_{q0}(q) = (1 - q conj(q0))^{-1} (q - q0), the pointwise Moebius map.
Quaternion pointwise_moebius(const Quaternion& q0, const Quaternion& q);
/// Inverse of M_{q0}: p -> (p + q0)(1 + conj(q0) p)^{-1}.
Quaternion pointwise_moebius_inverse(const Quaternion& q0, const Quaternion& p);

/// v^{-1} (1 - q conj(q0))^{-1} (q - q0) u
Quaternion classical_moebius(const Quaternion& q0, const Quaternion& u, const Quaternion& v,
                             const Quaternion& q);

/// (1 - q conj(q0))^{-*} * (q - q0) u as a left quotient.
RegularQuotient regular_moebius_quotient(const Quaternion& q0, const Quaternion& u = 1.0);
/// The same map written as a right quotient (q - q0) * (u^{-1} - q u^{-1} conj(q0))^{-*}.
RegularQuotient regular_moebius_right_quotient(const Quaternion& q0, const Quaternion& u = 1.0);

/// Value of the regular Moebius transformation at q in the ball.
Quaternion regular_moebius(const Quaternion& q0, const Quaternion& u, const Quaternion& q);

/// T(q) = (1 - q q0)^{-1} q (1 - q q0)
Quaternion twist_map(const Quaternion& q0, const Quaternion& q);
/// T^{-1}(q) = (1 - q conj(q0))^{-1} q (1 - q conj(q0))
Quaternion twist_map_inverse(const Quaternion& q0, const Quaternion& q);

/// Closed-form expansion coefficients A_0 .. A_{2 n_max + 1} of the regular
/// Moebius map at its own zero. A real q0 is refused when n_max > 1.
SphericalExpansion moebius_expansion_coefficients(const Quaternion& q0, std::size_t n_max);

/// Truncated power series of (1 - q conj(q0))^{-*} * (q - q0), exact up to `degree`.
RegularPolynomial moebius_power_series(const Quaternion& q0, std::size_t degree);

/// (|d_c M(q0)|, |d_s M(q0)|) = ((1 - |q0|^2)^{-1}, |1 - conj(q0)^2|^{-1}).
std::pair<double, double> conformality_defect(const Quaternion& q0);

/// Non-Euclidean segment from q1 to q2, parametrized proportionally to
/// hyperbolic arc length.
class GeodesicSegment {
 public:
  GeodesicSegment(const Quaternion& q1, const Quaternion& q2);

  const Quaternion& start() const { return q1_; }
  const Quaternion& end() const { return q2_; }
  /// gamma(t) for t in [0, 1].
  Quaternion operator()(double t) const;
  std::vector<Quaternion> sample(std::size_t count) const;
  double length() const { return length_; }

 private:
  Quaternion q1_;
  Quaternion q2_;
  Quaternion direction_;  // unit vector from 0 toward M_{q1}(q2)
  double length_;
};

/// Throws CoincidentPoints or OutsideBall.
GeodesicSegment geodesic(const Quaternion& q1, const Quaternion& q2);

}  // namespace srq

#endif  // SRQ_GEOMETRY_HPP
