#include "srq/rational.hpp"

#include <utility>

namespace srq {

namespace {

constexpr double kPoleEpsilon = 1e-12;

void require_not_pole(const RegularPolynomial& pole, const Quaternion& q) {
  if (is_pole(pole, q)) {
    throw Error(ErrorCode::PoleOnSymmetrizationZeroSet,
                "quotient evaluated on the zero set of its symmetrized denominator");
  }
}

RegularQuotient central(RegularPolynomial pole, RegularPolynomial numerator) {
  return RegularQuotient(std::move(pole), std::move(numerator), QuotientSide::left);
}

}  // namespace

RegularQuotient::RegularQuotient(RegularPolynomial den, RegularPolynomial num, QuotientSide side)
    : den_(std::move(den)), num_(std::move(num)), side_(side) {
  if (den_.is_zero()) {
    throw Error(ErrorCode::ZeroDivision, "regular quotient with an identically zero denominator");
  }
  if (den_.has_real_coefficients()) {
    pole_ = den_;
    reduced_ = num_;
  } else {
    pole_ = symmetrization(den_);
    const RegularPolynomial denc = regular_conjugate(den_);
    reduced_ = side_ == QuotientSide::left ? star_product(denc, num_) : star_product(num_, denc);
  }
}

RegularQuotient RegularQuotient::from_polynomial(RegularPolynomial f) {
  return RegularQuotient(RegularPolynomial::constant(1.0), std::move(f));
}

RegularQuotient RegularQuotient::central_form() const { return central(pole_, reduced_); }

bool is_pole(const RegularPolynomial& pole_polynomial, const Quaternion& q) {
  const double scale = 1.0 + coefficient_norm_sum(pole_polynomial);
  return evaluate(pole_polynomial, q).norm() < kPoleEpsilon * scale;
}

Quaternion eval_left_quotient(const RegularQuotient& quotient, const Quaternion& q) {
  require_not_pole(quotient.pole_polynomial(), q);
  return invert(evaluate(quotient.pole_polynomial(), q)) *
         evaluate(quotient.reduced_numerator(), q);
}

Quaternion eval_via_transform(const RegularQuotient& quotient, const Quaternion& q) {
  require_not_pole(quotient.pole_polynomial(), q);
  const RegularPolynomial& den = quotient.den();
  const RegularPolynomial& num = quotient.num();
  if (quotient.side() == QuotientSide::left) {
    const Quaternion t = transform_Tf(den, q);
    return invert(evaluate(den, t)) * evaluate(num, t);
  }
  // g * h^c evaluated through (g * h)(q) = g(q) h(g(q)^{-1} q g(q)).
  const Quaternion gq = evaluate(num, q);
  Quaternion product;
  if (gq.norm() > default_tolerances().zero) {
    product = gq * evaluate(regular_conjugate(den), invert(gq) * q * gq);
  }
  return invert(evaluate(symmetrization(den), q)) * product;
}

Quaternion transform_Tf(const RegularPolynomial& f, const Quaternion& q) {
  const Quaternion fc = evaluate(regular_conjugate(f), q);
  if (fc.norm() < kPoleEpsilon * (1.0 + coefficient_norm_sum(f))) {
    throw Error(ErrorCode::PoleOnSymmetrizationZeroSet, "T_f is undefined where f^c vanishes");
  }
  return invert(fc) * q * fc;
}

RegularQuotient quotient_conjugate(const RegularQuotient& quotient) {
  const QuotientSide flipped =
      quotient.side() == QuotientSide::left ? QuotientSide::right : QuotientSide::left;
  return RegularQuotient(regular_conjugate(quotient.den()), regular_conjugate(quotient.num()),
                         flipped);
}

Quaternion quotient_symmetrization(const RegularQuotient& quotient, const Quaternion& q) {
  const RegularPolynomial dens = symmetrization(quotient.den());
  require_not_pole(dens, q);
  return invert(evaluate(dens, q)) * evaluate(symmetrization(quotient.num()), q);
}

RegularQuotient quotient_star_product(const RegularQuotient& lhs, const RegularQuotient& rhs) {
  return central(star_product(lhs.pole_polynomial(), rhs.pole_polynomial()),
                 star_product(lhs.reduced_numerator(), rhs.reduced_numerator()));
}

RegularQuotient operator*(const RegularQuotient& lhs, const RegularQuotient& rhs) {
  return quotient_star_product(lhs, rhs);
}

RegularQuotient operator+(const RegularQuotient& lhs, const RegularQuotient& rhs) {
  const auto& p1 = lhs.pole_polynomial();
  const auto& p2 = rhs.pole_polynomial();
  if (p1 == p2) return central(p1, lhs.reduced_numerator() + rhs.reduced_numerator());
  return central(star_product(p1, p2), star_product(lhs.reduced_numerator(), p2) +
                                           star_product(rhs.reduced_numerator(), p1));
}

RegularQuotient operator-(const RegularQuotient& lhs, const RegularQuotient& rhs) {
  return lhs + right_scale(rhs, -1.0);
}

RegularQuotient add_constant(const RegularQuotient& quotient, const Quaternion& c) {
  const auto& p = quotient.pole_polynomial();
  return central(p, quotient.reduced_numerator() + srq::right_scale(p, c));
}

RegularQuotient left_scale(const Quaternion& c, const RegularQuotient& quotient) {
  return central(quotient.pole_polynomial(), srq::left_scale(c, quotient.reduced_numerator()));
}

RegularQuotient right_scale(const RegularQuotient& quotient, const Quaternion& c) {
  return central(quotient.pole_polynomial(), srq::right_scale(quotient.reduced_numerator(), c));
}

RegularQuotient reciprocal(const RegularQuotient& quotient) {
  const RegularPolynomial& n = quotient.reduced_numerator();
  if (n.is_zero()) {
    throw Error(ErrorCode::ZeroDivision, "regular reciprocal of the zero function");
  }
  // (P^{-*} * N)^{-*} = N^{-*} * P = (N^s)^{-*} * (N^c * P)
  return central(symmetrization(n), star_product(regular_conjugate(n), quotient.pole_polynomial()));
}

RegularQuotient remainder(const RegularQuotient& quotient, const Quaternion& q0) {
  const auto& p = quotient.pole_polynomial();
  const Quaternion value = eval_left_quotient(quotient, q0);
  // N - P c vanishes at q0, so the polynomial remainder divides it exactly.
  const RegularPolynomial shifted = quotient.reduced_numerator() - srq::right_scale(p, value);
  return central(p, srq::remainder(shifted, q0));
}

RegularQuotient cullen_derivative(const RegularQuotient& quotient) {
  const auto& p = quotient.pole_polynomial();
  const auto& n = quotient.reduced_numerator();
  return central(star_product(p, p), star_product(srq::cullen_derivative(n), p) -
                                         star_product(n, srq::cullen_derivative(p)));
}

Quaternion spherical_derivative_at(const RegularQuotient& quotient, const Quaternion& q) {
  return spherical_derivative([&quotient](const Quaternion& p) { return evaluate(quotient, p); }, q);
}

}  // namespace srq
