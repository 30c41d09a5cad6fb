#ifndef SRQ_RATIONAL_HPP
#define SRQ_RATIONAL_HPP

#include <complex>
#include <vector>

#include "srq/series.hpp"

namespace srq {

enum class QuotientSide { left, right };

/// A regular quotient of two polynomials.
///
/// Left:  den^{-*} * num, evaluated as den^s(q)^{-1} (den^c * num)(q).
/// Right: num * den^{-*}, evaluated as den^s(q)^{-1} (num * den^c)(q).
///
/// Both forms reduce to P(q)^{-1} N(q) with P real-coefficient, hence central
/// in the algebra. P and N are computed once at construction. A denominator
/// that already has real coefficients is its own pole polynomial.
class RegularQuotient {
 public:
  /// Throws ZeroDivision if `den` is identically zero.
  RegularQuotient(RegularPolynomial den, RegularPolynomial num,
                  QuotientSide side = QuotientSide::left);

  /// f = 1^{-*} * f
  static RegularQuotient from_polynomial(RegularPolynomial f);

  const RegularPolynomial& den() const { return den_; }
  const RegularPolynomial& num() const { return num_; }
  QuotientSide side() const { return side_; }

  /// P: real coefficients, vanishing exactly on the excluded spheres.
  const RegularPolynomial& pole_polynomial() const { return pole_; }
  /// N with Q = P^{-*} * N.
  const RegularPolynomial& reduced_numerator() const { return reduced_; }

  /// Same function, stored as P^{-*} * N.
  RegularQuotient central_form() const;

 private:
  RegularPolynomial den_;
  RegularPolynomial num_;
  QuotientSide side_;
  RegularPolynomial pole_;
  RegularPolynomial reduced_;
};

/// Scale-aware pole test: |P(q)| < 1e-12 (1 + sum |p_n|).
bool is_pole(const RegularPolynomial& pole_polynomial, const Quaternion& q);

/// Direct formula. Throws PoleOnSymmetrizationZeroSet on the excluded set.
Quaternion eval_left_quotient(const RegularQuotient& quotient, const Quaternion& q);
inline Quaternion evaluate(const RegularQuotient& quotient, const Quaternion& q) {
  return eval_left_quotient(quotient, q);
}

/// Independent route. Left quotients: f(T_f(q))^{-1} g(T_f(q)).
/// Right quotients: h^s(q)^{-1} g(q) h^c(g(q)^{-1} q g(q)).
Quaternion eval_via_transform(const RegularQuotient& quotient, const Quaternion& q);

/// T_f(q) = f^c(q)^{-1} q f^c(q); maps each sphere x + y S to itself.
Quaternion transform_Tf(const RegularPolynomial& f, const Quaternion& q);

/// One entry of the zero set of f^s: a real point (y == 0) or the sphere x + y S.
struct SphereZero {
  double x = 0.0;
  double y = 0.0;
  int multiplicity = 1;

  bool is_real() const { return y == 0.0; }
};

using SphereZeroSet = std::vector<SphereZero>;

/// Roots of a real polynomial (coefficients in ascending order) by
/// Durand-Kerner iteration. Throws NonConvergence after `max_iterations`.
std::vector<std::complex<double>> durand_kerner(const std::vector<double>& coefficients,
                                                int max_iterations = 500,
                                                double tolerance = 1e-12);

/// Spheres (and real points) on which f vanishes, read off the roots of f^s.
SphereZeroSet sphere_zero_set(const RegularPolynomial& f);

enum class ZeroKind { none, isolated, spherical };

struct ZerosOnSphere {
  ZeroKind kind = ZeroKind::none;
  Quaternion point;       ///< the isolated zero when kind == isolated
  double residual = 0.0;  ///< |f(point)|
};

/// Solves f(x + y I) = b + I c = 0 for I in S. A real point is checked directly.
ZerosOnSphere zeros_on_sphere(const RegularPolynomial& f, double x, double y,
                              double tolerance = 1e-6);

/// (f^{-*} * g)^c = g^c * (f^c)^{-*}; flips the side.
RegularQuotient quotient_conjugate(const RegularQuotient& quotient);

/// (f^{-*} * g)^s(q) = f^s(q)^{-1} g^s(q)
Quaternion quotient_symmetrization(const RegularQuotient& quotient, const Quaternion& q);

/// (f^{-*} * g) * (h^{-*} * k) = (f^s h^s)^{-*} * (f^c * g * h^c * k)
RegularQuotient quotient_star_product(const RegularQuotient& lhs, const RegularQuotient& rhs);

RegularQuotient operator*(const RegularQuotient& lhs, const RegularQuotient& rhs);
RegularQuotient operator+(const RegularQuotient& lhs, const RegularQuotient& rhs);
RegularQuotient operator-(const RegularQuotient& lhs, const RegularQuotient& rhs);

/// Q + c for a constant c.
RegularQuotient add_constant(const RegularQuotient& quotient, const Quaternion& c);
/// c * Q (regular product with a constant on the left).
RegularQuotient left_scale(const Quaternion& c, const RegularQuotient& quotient);
/// Q * c, which equals the pointwise Q(q) c.
RegularQuotient right_scale(const RegularQuotient& quotient, const Quaternion& c);

/// Q^{-*}. Throws ZeroDivision when the numerator vanishes identically.
RegularQuotient reciprocal(const RegularQuotient& quotient);

/// R_{q0} Q = (q - q0)^{-*} * (Q - Q(q0)).
RegularQuotient remainder(const RegularQuotient& quotient, const Quaternion& q0);

/// Cullen derivative by the quotient rule on the central form.
RegularQuotient cullen_derivative(const RegularQuotient& quotient);

Quaternion spherical_derivative_at(const RegularQuotient& quotient, const Quaternion& q);

}  // namespace srq

#endif  // SRQ_RATIONAL_HPP
