#ifndef SRQ_SERIES_HPP
#define SRQ_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "srq/quaternion.hpp"

namespace srq {

/// A slice regular polynomial f(q) = sum_n q^n a_n with right coefficients.
///
/// Storage is dense and normalized: trailing exact zeros are dropped, so the
/// last stored coefficient is nonzero unless the polynomial is zero.
class RegularPolynomial {
 public:
  RegularPolynomial() = default;
  explicit RegularPolynomial(std::vector<Quaternion> coefficients);
  RegularPolynomial(std::initializer_list<Quaternion> coefficients);

  static RegularPolynomial constant(const Quaternion& c);
  static RegularPolynomial identity();
  /// q^n c
  static RegularPolynomial monomial(std::size_t n, const Quaternion& c = 1.0);

  std::span<const Quaternion> coefficients() const { return coeffs_; }
  /// a_n, or zero beyond the degree.
  Quaternion operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quaternion{}; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  /// True when every coefficient has |Im a_n| <= tol.
  bool has_real_coefficients(double tol = 0.0) const;

  RegularPolynomial& operator+=(const RegularPolynomial& o);
  RegularPolynomial& operator-=(const RegularPolynomial& o);

  friend bool operator==(const RegularPolynomial&, const RegularPolynomial&) = default;

 private:
  void normalize();

  std::vector<Quaternion> coeffs_;
};

RegularPolynomial operator+(RegularPolynomial f, const RegularPolynomial& g);
RegularPolynomial operator-(RegularPolynomial f, const RegularPolynomial& g);
RegularPolynomial operator-(const RegularPolynomial& f);

/// f * c: coefficients a_n c. Equals the pointwise product f(q) c.
RegularPolynomial right_scale(const RegularPolynomial& f, const Quaternion& c);
/// c * f: coefficients c a_n. This is the regular product, not the pointwise c f(q).
RegularPolynomial left_scale(const Quaternion& c, const RegularPolynomial& f);

/// Horner evaluation a_0 + q(a_1 + q(a_2 + ...)).
Quaternion evaluate(const RegularPolynomial& f, const Quaternion& q);

/// Regular product: c_n = sum_k a_k b_{n-k}.
RegularPolynomial star_product(const RegularPolynomial& f, const RegularPolynomial& g);
inline RegularPolynomial operator*(const RegularPolynomial& f, const RegularPolynomial& g) {
  return star_product(f, g);
}
/// f^{*n}
RegularPolynomial star_power(const RegularPolynomial& f, unsigned n);

/// f^c(q) = sum_n q^n conj(a_n)
RegularPolynomial regular_conjugate(const RegularPolynomial& f);

struct Symmetrization {
  RegularPolynomial value;   ///< real parts only
  double imaginary_residue;  ///< largest |Im r_n| discarded
};

/// f^s = f * f^c with its (theoretically zero) imaginary parts measured.
Symmetrization symmetrization_with_residue(const RegularPolynomial& f);
/// f^s projected onto real coefficients.
RegularPolynomial symmetrization(const RegularPolynomial& f);

/// The unique R with f(q) - f(q0) = (q - q0) * R(q).
RegularPolynomial remainder(const RegularPolynomial& f, const Quaternion& q0);

/// sum_n q^{n-1} n a_n
RegularPolynomial cullen_derivative(const RegularPolynomial& f);

/// sum_n |a_n|, an upper bound for |f| on the closed unit ball.
double coefficient_norm_sum(const RegularPolynomial& f);

/// Coefficients A_0..A_M of f(q) = sum_n [(q-x0)^2+y0^2]^n [A_{2n} + (q-q0) A_{2n+1}].
struct SphericalExpansion {
  Quaternion center;
  std::vector<Quaternion> coefficients;

  /// Truncated partial sum at q.
  Quaternion evaluate(const Quaternion& q) const;
};

/// Computes A_0 .. A_{2 n_max + 1} by iterated remainders at q0 and conj(q0).
///
/// A real center is refused with DegenerateCenter: the sphere collapses to a
/// point and the odd coefficients lose their meaning.
SphericalExpansion spherical_expansion(const RegularPolynomial& f, const Quaternion& q0,
                                       std::size_t n_max);

/// Throws RealPoint unless q has a nonzero imaginary part.
void require_non_real(const Quaternion& q, const char* what);

/// (2 Im q)^{-1} (f(q) - f(conj q)) for any pointwise evaluator.
template <class F>
Quaternion spherical_derivative(F&& f, const Quaternion& q) {
  require_non_real(q, "spherical derivative");
  return invert(2.0 * q.imag()) * (f(q) - f(conjugate(q)));
}

Quaternion spherical_derivative_at(const RegularPolynomial& f, const Quaternion& q);

/// lim (f(q0 + t v) - f(q0))/t = v A_1 + (q0 v - v conj(q0)) A_2
Quaternion directional_derivative(const RegularPolynomial& f, const Quaternion& q0,
                                  const Quaternion& v);

}  // namespace srq

#endif  // SRQ_SERIES_HPP
