#include "srq/series.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace srq {

RegularPolynomial::RegularPolynomial(std::vector<Quaternion> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

RegularPolynomial::RegularPolynomial(std::initializer_list<Quaternion> coefficients)
    : coeffs_(coefficients) {
  normalize();
}

RegularPolynomial RegularPolynomial::constant(const Quaternion& c) { return RegularPolynomial({c}); }

RegularPolynomial RegularPolynomial::identity() { return RegularPolynomial({0.0, 1.0}); }

RegularPolynomial RegularPolynomial::monomial(std::size_t n, const Quaternion& c) {
  std::vector<Quaternion> a(n + 1);
  a[n] = c;
  return RegularPolynomial(std::move(a));
}

void RegularPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == Quaternion{}) {
    coeffs_.pop_back();
  }
}

bool RegularPolynomial::has_real_coefficients(double tol) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [tol](const Quaternion& a) { return a.imag_norm() <= tol; });
}

RegularPolynomial& RegularPolynomial::operator+=(const RegularPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  normalize();
  return *this;
}

RegularPolynomial& RegularPolynomial::operator-=(const RegularPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  normalize();
  return *this;
}

RegularPolynomial operator+(RegularPolynomial f, const RegularPolynomial& g) { return f += g; }
RegularPolynomial operator-(RegularPolynomial f, const RegularPolynomial& g) { return f -= g; }
RegularPolynomial operator-(const RegularPolynomial& f) { return RegularPolynomial{} - f; }

RegularPolynomial right_scale(const RegularPolynomial& f, const Quaternion& c) {
  std::vector<Quaternion> a(f.coefficients().begin(), f.coefficients().end());
  for (auto& an : a) an = an * c;
  return RegularPolynomial(std::move(a));
}

RegularPolynomial left_scale(const Quaternion& c, const RegularPolynomial& f) {
  std::vector<Quaternion> a(f.coefficients().begin(), f.coefficients().end());
  for (auto& an : a) an = c * an;
  return RegularPolynomial(std::move(a));
}

Quaternion evaluate(const RegularPolynomial& f, const Quaternion& q) {
  const auto a = f.coefficients();
  Quaternion r;
  for (std::size_t n = a.size(); n-- > 0;) {
    r = a[n] + q * r;
  }
  return r;
}

RegularPolynomial star_product(const RegularPolynomial& f, const RegularPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto a = f.coefficients();
  const auto b = g.coefficients();
  std::vector<Quaternion> c(a.size() + b.size() - 1);
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t m = 0; m < b.size(); ++m) {
      c[k + m] += a[k] * b[m];
    }
  }
  return RegularPolynomial(std::move(c));
}

RegularPolynomial star_power(const RegularPolynomial& f, unsigned n) {
  RegularPolynomial r = RegularPolynomial::constant(1.0);
  for (unsigned e = 0; e < n; ++e) r = star_product(r, f);
  return r;
}

RegularPolynomial regular_conjugate(const RegularPolynomial& f) {
  std::vector<Quaternion> a(f.coefficients().begin(), f.coefficients().end());
  for (auto& an : a) an = conjugate(an);
  return RegularPolynomial(std::move(a));
}

Symmetrization symmetrization_with_residue(const RegularPolynomial& f) {
  const RegularPolynomial raw = star_product(f, regular_conjugate(f));
  std::vector<Quaternion> r;
  r.reserve(raw.size());
  double residue = 0.0;
  for (const auto& c : raw.coefficients()) {
    residue = std::max(residue, c.imag_norm());
    r.emplace_back(c.w);
  }
  return {RegularPolynomial(std::move(r)), residue};
}

RegularPolynomial symmetrization(const RegularPolynomial& f) {
  return symmetrization_with_residue(f).value;
}

RegularPolynomial remainder(const RegularPolynomial& f, const Quaternion& q0) {
  const auto a = f.coefficients();
  if (a.size() < 2) return {};
  // (q - q0) * R has coefficients b_{n-1} - q0 b_n; solve from the top down.
  std::vector<Quaternion> b(a.size() - 1);
  b.back() = a.back();
  for (std::size_t n = b.size() - 1; n-- > 0;) {
    b[n] = a[n + 1] + q0 * b[n + 1];
  }
  return RegularPolynomial(std::move(b));
}

RegularPolynomial cullen_derivative(const RegularPolynomial& f) {
  const auto a = f.coefficients();
  if (a.size() < 2) return {};
  std::vector<Quaternion> d(a.size() - 1);
  for (std::size_t n = 1; n < a.size(); ++n) d[n - 1] = static_cast<double>(n) * a[n];
  return RegularPolynomial(std::move(d));
}

double coefficient_norm_sum(const RegularPolynomial& f) {
  double s = 0.0;
  for (const auto& a : f.coefficients()) s += a.norm();
  return s;
}

Quaternion SphericalExpansion::evaluate(const Quaternion& q) const {
  const double x0 = center.w;
  const double y0 = center.imag_norm();
  const Quaternion shifted = q - x0;
  const Quaternion sphere = shifted * shifted + y0 * y0;
  const Quaternion offset = q - center;

  Quaternion sum;
  Quaternion power = 1.0;
  for (std::size_t n = 0; 2 * n < coefficients.size(); ++n) {
    Quaternion term = coefficients[2 * n];
    if (2 * n + 1 < coefficients.size()) term += offset * coefficients[2 * n + 1];
    sum += power * term;
    power = power * sphere;
  }
  return sum;
}

void require_non_real(const Quaternion& q, const char* what) {
  if (q.imag_norm() <= default_tolerances().identity * std::max(1.0, q.norm())) {
    throw Error(ErrorCode::RealPoint, std::string(what) + " is undefined at a real point");
  }
}

SphericalExpansion spherical_expansion(const RegularPolynomial& f, const Quaternion& q0,
                                       std::size_t n_max) {
  if (q0.is_real()) {
    throw Error(ErrorCode::DegenerateCenter,
                "spherical expansion needs a non-real center (the sphere collapses at real points)");
  }
  const Quaternion q0bar = conjugate(q0);
  SphericalExpansion e{q0, {}};
  e.coefficients.reserve(2 * n_max + 2);

  RegularPolynomial g = f;
  for (std::size_t n = 0; n <= n_max; ++n) {
    e.coefficients.push_back(evaluate(g, q0));
    const RegularPolynomial h = remainder(g, q0);
    e.coefficients.push_back(evaluate(h, q0bar));
    g = remainder(h, q0bar);
  }
  return e;
}

Quaternion spherical_derivative_at(const RegularPolynomial& f, const Quaternion& q) {
  return spherical_derivative([&f](const Quaternion& p) { return evaluate(f, p); }, q);
}

Quaternion directional_derivative(const RegularPolynomial& f, const Quaternion& q0,
                                  const Quaternion& v) {
  const SphericalExpansion e = spherical_expansion(f, q0, 1);
  return v * e.coefficients[1] + (q0 * v - v * conjugate(q0)) * e.coefficients[2];
}

}  // namespace srq
