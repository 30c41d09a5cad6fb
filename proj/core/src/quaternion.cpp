#include "srq/quaternion.hpp"

#include <string>

namespace srq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDivision: return "ZeroDivision";
    case ErrorCode::RealPoint: return "RealPoint";
    case ErrorCode::DegenerateCenter: return "DegenerateCenter";
    case ErrorCode::PoleOnSymmetrizationZeroSet: return "PoleOnSymmetrizationZeroSet";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DegenerateComposite: return "DegenerateComposite";
    case ErrorCode::DegenerateSwap: return "DegenerateSwap";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotSp11: return "NotSp11";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::OutsideBall: return "OutsideBall";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

const Tolerances& default_tolerances() noexcept {
  static const Tolerances tol{};
  return tol;
}

Quaternion invert(const Quaternion& q, double eps) {
  const double n = q.norm();
  if (!(n > eps)) {
    throw Error(ErrorCode::ZeroDivision, "cannot invert a quaternion of modulus " + std::to_string(n));
  }
  // Scale first so |q|^2 cannot underflow for small but admissible q.
  const Quaternion u = q / n;
  return conjugate(u) / n;
}

double distance(const Quaternion& p, const Quaternion& q) { return (p - q).norm(); }

SliceCoordinates slice_decompose(const Quaternion& q) {
  SliceCoordinates s;
  s.x0 = q.w;
  s.y0 = q.imag_norm();
  if (s.y0 > 0.0) {
    s.unit = q.imag() / s.y0;
  }
  return s;
}

}  // namespace srq
