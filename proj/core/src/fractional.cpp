#include "srq/fractional.hpp"

#include <algorithm>
#include <cmath>

#include "srq/random.hpp"

namespace srq {

namespace {

double entry_scale(const QuaternionMatrix2& m) {
  return std::max({m.a.norm(), m.b.norm(), m.c.norm(), m.d.norm()});
}

void require_invertible(const QuaternionMatrix2& m) {
  const double scale = entry_scale(m);
  if (!(dieudonne_det(m) > 1e-12 * scale * scale)) {
    throw Error(ErrorCode::SingularMatrix, "matrix is not in GL(2,H)");
  }
}

}  // namespace

QuaternionMatrix2 operator*(const QuaternionMatrix2& l, const QuaternionMatrix2& r) {
  return {l.a * r.a + l.c * r.b, l.a * r.c + l.c * r.d, l.b * r.a + l.d * r.b,
          l.b * r.c + l.d * r.d};
}

QuaternionMatrix2 transpose(const QuaternionMatrix2& m) { return {m.a, m.b, m.c, m.d}; }

QuaternionMatrix2 conjugate_entries(const QuaternionMatrix2& m) {
  return {conjugate(m.a), conjugate(m.c), conjugate(m.b), conjugate(m.d)};
}

QuaternionMatrix2 conjugate_transpose(const QuaternionMatrix2& m) {
  return transpose(conjugate_entries(m));
}

double max_entry_distance(const QuaternionMatrix2& l, const QuaternionMatrix2& r) {
  return std::max({distance(l.a, r.a), distance(l.b, r.b), distance(l.c, r.c),
                   distance(l.d, r.d)});
}

double dieudonne_det(const QuaternionMatrix2& m) {
  if (m.a.norm() == 0.0) return m.b.norm() * m.c.norm();
  return m.a.norm() * (m.d - m.b * invert(m.a) * m.c).norm();
}

bool is_sp11(const QuaternionMatrix2& m, double tol) {
  const QuaternionMatrix2 product = conjugate_transpose(m) * QuaternionMatrix2::signature() * m;
  return max_entry_distance(product, QuaternionMatrix2::signature()) <= tol;
}

bool is_hermitian(const QuaternionMatrix2& m, double tol) {
  return m.a.imag_norm() <= tol && m.d.imag_norm() <= tol &&
         distance(m.c, conjugate(m.b)) <= tol;
}

RegularQuotient regular_fractional(const QuaternionMatrix2& m) {
  require_invertible(m);
  return RegularQuotient(RegularPolynomial{m.d, m.c}, RegularPolynomial{m.b, m.a});
}

RegularQuotient right_action(const RegularQuotient& f, const QuaternionMatrix2& m) {
  require_invertible(m);
  const auto& p = f.pole_polynomial();
  const auto& n = f.reduced_numerator();
  RegularPolynomial den = right_scale(n, m.c) + right_scale(p, m.d);
  if (den.is_zero()) {
    throw Error(ErrorCode::DegenerateComposite, "f c + d vanishes identically");
  }
  return RegularQuotient(std::move(den), right_scale(n, m.a) + right_scale(p, m.b));
}

RegularQuotient left_action(const QuaternionMatrix2& m, const RegularQuotient& f) {
  require_invertible(m);
  const auto& p = f.pole_polynomial();
  const auto& n = f.reduced_numerator();
  RegularPolynomial den = left_scale(m.c, n) + right_scale(p, m.d);
  if (den.is_zero()) {
    throw Error(ErrorCode::DegenerateComposite, "c * f + d vanishes identically");
  }
  return RegularQuotient(std::move(den), left_scale(m.a, n) + right_scale(p, m.b),
                         QuotientSide::right);
}

RegularQuotient left_action_by(const QuaternionMatrix2& x, const RegularQuotient& f) {
  return left_action(transpose(x), f);
}

std::vector<Quaternion> default_sample_grid(std::size_t count) {
  Rng rng(0x5eedULL);
  std::vector<Quaternion> points(count);
  for (auto& q : points) q = rng.in_ball(0.9);
  return points;
}

bool hermitian_coincidence_check(const RegularQuotient& f, const QuaternionMatrix2& m,
                                 std::span<const Quaternion> points, double tol) {
  if (!is_hermitian(m)) {
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian with real diagonal");
  }
  const RegularQuotient right = right_action(f, m);
  const RegularQuotient left = left_action(m, f);
  for (const auto& q : points) {
    if (is_pole(right.pole_polynomial(), q) || is_pole(left.pole_polynomial(), q)) continue;
    const Quaternion x = evaluate(right, q);
    const Quaternion y = evaluate(left, q);
    if (distance(x, y) > tol * std::max(1.0, x.norm())) return false;
  }
  return true;
}

bool hermitian_coincidence_check(const RegularQuotient& f, const QuaternionMatrix2& m) {
  const auto grid = default_sample_grid();
  return hermitian_coincidence_check(f, m, grid);
}

QuaternionMatrix2 left_right_convert(const QuaternionMatrix2& m) {
  require_invertible(m);
  const double scale = entry_scale(m);
  if (m.c.norm() <= 1e-14 * scale) {
    // F_A(q) = (d^{-1} a) * q + d^{-1} b
    const Quaternion dinv = invert(m.d);
    return {dinv * m.a, 0.0, dinv * m.b, 1.0};
  }
  // F_A = F_{c^{-1} A} = (q - p)^{-*} * (q alpha + beta)
  const Quaternion cinv = invert(m.c);
  const Quaternion alpha = cinv * m.a;
  const Quaternion beta = cinv * m.b;
  const Quaternion p = -(cinv * m.d);
  const Quaternion pbar = conjugate(p);
  const double x = p.w;

  // (q - conj p) * (q alpha + beta) = (q gamma + delta) * (q - p~), with p~ on
  // the sphere of p, so p~^2 = 2 x p~ - |p|^2.
  const Quaternion k = beta - pbar * alpha + 2.0 * x * alpha;
  if (k.norm() <= 1e-12 * std::max(1.0, alpha.norm() + beta.norm())) {
    throw Error(ErrorCode::DegenerateSwap, "factor swap is singular for this matrix");
  }
  const Quaternion ptilde = invert(k) * (pbar * beta + alpha * p.norm2());
  const Quaternion gamma = alpha;
  const Quaternion delta = beta - pbar * alpha + alpha * ptilde;
  return {gamma, 1.0, delta, -conjugate(ptilde)};
}

QuaternionMatrix2 right_from_left(const QuaternionMatrix2& c) {
  return conjugate_entries(left_right_convert(conjugate_entries(c)));
}

MoebiusNormalForm normal_form(const QuaternionMatrix2& m, double tol) {
  if (!is_sp11(m, tol)) {
    throw Error(ErrorCode::NotSp11, "matrix is not in Sp(1,1)");
  }
  const RegularPolynomial den{m.d, m.c};
  // The zero of F_A solves g(T_f(q)) = 0, i.e. T_f(q) = -b a^{-1}; T_{f^c} inverts T_f.
  const Quaternion target = -(m.b * invert(m.a));
  MoebiusNormalForm out;
  out.q0 = transform_Tf(regular_conjugate(den), target);

  const RegularQuotient f = regular_fractional(m);
  Quaternion u;
  if (out.q0.norm() > 1e-6) {
    u = -(invert(out.q0) * evaluate(f, 0.0));
  } else {
    // At a real t the regular and classical values agree: F(t) = M_{q0}(t) u.
    const double t = 0.5;
    const Quaternion moebius_t = invert(1.0 - t * conjugate(out.q0)) * (t - out.q0);
    u = invert(moebius_t) * evaluate(f, t);
  }
  out.u = u / u.norm();
  return out;
}

QuaternionMatrix2 from_normal_form(const Quaternion& q0, const Quaternion& u) {
  if (!(q0.norm() < 1.0)) {
    throw Error(ErrorCode::OutsideBall, "normal form needs |q0| < 1");
  }
  if (std::abs(u.norm() - 1.0) > 1e-9) {
    throw Error(ErrorCode::OutsideBall, "normal form needs |u| = 1");
  }
  const double s = 1.0 / std::sqrt(1.0 - q0.norm2());
  return {s * u, -s * conjugate(q0), -s * (q0 * u), s};
}

Quaternion classical_fractional(const QuaternionMatrix2& m, const Quaternion& q) {
  const Quaternion den = q * m.c + m.d;
  if (den.norm() <= 1e-12 * std::max(1.0, q.norm() * m.c.norm() + m.d.norm())) {
    throw Error(ErrorCode::PoleAtPoint, "q c + d vanishes at this point");
  }
  return invert(den) * (q * m.a + m.b);
}

QuaternionMatrix2 generators(Generator kind, const Quaternion& param) {
  switch (kind) {
    case Generator::translation: return {1.0, 0.0, param, 1.0};
    case Generator::rotation:
      if (std::abs(param.norm() - 1.0) > 1e-9) {
        throw Error(ErrorCode::SingularMatrix, "rotation generator needs a unit quaternion");
      }
      return {param, 0.0, 0.0, 1.0};
    case Generator::dilation:
      if (!param.is_real() || !(param.w > 0.0)) {
        throw Error(ErrorCode::SingularMatrix, "dilation generator needs a positive real");
      }
      return {param.w, 0.0, 0.0, 1.0};
    case Generator::inversion: return {0.0, 1.0, 1.0, 0.0};
  }
  return QuaternionMatrix2::identity();
}

}  // namespace srq
