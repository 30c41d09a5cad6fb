#ifndef SRQ_FRACTIONAL_HPP
#define SRQ_FRACTIONAL_HPP

#include <span>
#include <vector>

#include "srq/rational.hpp"

namespace srq {

/// A 2x2 quaternionic matrix with rows (a, c) and (b, d), so that
/// F_A(q) = (q c + d)^{-1} (q a + b) classically and
/// F_A = (q c + d)^{-*} * (q a + b) regularly.
struct QuaternionMatrix2 {
  Quaternion a = 1.0;
  Quaternion c = 0.0;
  Quaternion b = 0.0;
  Quaternion d = 1.0;

  static QuaternionMatrix2 identity() { return {}; }
  static QuaternionMatrix2 scalar(const Quaternion& t) { return {t, 0.0, 0.0, t}; }
  /// diag(1, -1)
  static QuaternionMatrix2 signature() { return {1.0, 0.0, 0.0, -1.0}; }

  friend bool operator==(const QuaternionMatrix2&, const QuaternionMatrix2&) = default;
};

/// Ordinary row-by-column product.
QuaternionMatrix2 operator*(const QuaternionMatrix2& lhs, const QuaternionMatrix2& rhs);
QuaternionMatrix2 transpose(const QuaternionMatrix2& m);
/// Entrywise conjugate, no transpose.
QuaternionMatrix2 conjugate_entries(const QuaternionMatrix2& m);
QuaternionMatrix2 conjugate_transpose(const QuaternionMatrix2& m);
/// Largest entrywise difference.
double max_entry_distance(const QuaternionMatrix2& lhs, const QuaternionMatrix2& rhs);

/// |a| |d - b a^{-1} c|, or |b| |c| when a = 0. Multiplicative, and the
/// square of it is the determinant of the 4x4 complex adjoint.
double dieudonne_det(const QuaternionMatrix2& m);

/// conj(C)^t H C == H entrywise within tol.
bool is_sp11(const QuaternionMatrix2& m, double tol = 1e-9);

/// a, d real and c == conj(b).
bool is_hermitian(const QuaternionMatrix2& m, double tol = 1e-12);

/// (q c + d)^{-*} * (q a + b). Throws SingularMatrix.
RegularQuotient regular_fractional(const QuaternionMatrix2& m);

/// f.A = (f c + d)^{-*} * (f a + b). Satisfies (f.A).B = f.(AB).
RegularQuotient right_action(const RegularQuotient& f, const QuaternionMatrix2& m);

/// (a * f + b) * (c * f + d)^{-*}, read with the entries of m as stored.
/// This is the map written with the transposed matrix label; the left action
/// of a group element X is therefore `left_action(transpose(X), f)`.
RegularQuotient left_action(const QuaternionMatrix2& m, const RegularQuotient& f);

/// left_action(transpose(x), f): the left action of the group element x.
RegularQuotient left_action_by(const QuaternionMatrix2& x, const RegularQuotient& f);

/// Deterministic sample points in the ball of radius 0.9.
std::vector<Quaternion> default_sample_grid(std::size_t count = 50);

/// Compares right_action(f, A) and left_action(A, f) pointwise for Hermitian A.
/// Points on either excluded set are skipped. Throws NotHermitian.
bool hermitian_coincidence_check(const RegularQuotient& f, const QuaternionMatrix2& m,
                                 std::span<const Quaternion> points, double tol = 1e-10);
bool hermitian_coincidence_check(const RegularQuotient& f, const QuaternionMatrix2& m);

/// C with left_action(C, id) == F_A, by swapping the linear factors of
/// (q - conj(p)) * (q alpha + beta). Throws SingularMatrix or DegenerateSwap.
QuaternionMatrix2 left_right_convert(const QuaternionMatrix2& m);

/// A with F_A == left_action(C, id); the converse of left_right_convert.
QuaternionMatrix2 right_from_left(const QuaternionMatrix2& c);

/// The pair (q0, u) with F_A = (1 - q conj(q0))^{-*} * (q - q0) u.
struct MoebiusNormalForm {
  Quaternion q0;
  Quaternion u = 1.0;
};

/// Throws NotSp11.
MoebiusNormalForm normal_form(const QuaternionMatrix2& m, double tol = 1e-9);

/// (1 - |q0|^2)^{-1/2} [u, -conj(q0); -q0 u, 1], an element of Sp(1,1).
/// Throws OutsideBall unless |q0| < 1 and |u| = 1.
QuaternionMatrix2 from_normal_form(const Quaternion& q0, const Quaternion& u);
inline QuaternionMatrix2 from_normal_form(const MoebiusNormalForm& n) {
  return from_normal_form(n.q0, n.u);
}

/// (q c + d)^{-1} (q a + b). Throws PoleAtPoint.
Quaternion classical_fractional(const QuaternionMatrix2& m, const Quaternion& q);

enum class Generator {
  translation,  ///< q + b
  rotation,     ///< q a, |a| = 1
  dilation,     ///< r q, r > 0
  inversion,    ///< q^{-1}
};

QuaternionMatrix2 generators(Generator kind, const Quaternion& param = 0.0);

}  // namespace srq

#endif  // SRQ_FRACTIONAL_HPP
