#include <doctest.h>

#include <cmath>

#include "srq/quaternion.hpp"
#include "support.hpp"

using srq::Quaternion;

namespace {

void check_close(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
  CHECK(oracle::dist(a, b) <= tol);
}

}  // namespace

TEST_CASE("units multiply as in Hamilton's rules") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  check_close(i * i, -1.0, 0.0);
  check_close(j * j, -1.0, 0.0);
  check_close(k * k, -1.0, 0.0);
  check_close(i * j * k, -1.0, 0.0);
  check_close(i * j, k, 0.0);
  check_close(j * i, -k, 0.0);
  check_close(j * k, i, 0.0);
  check_close(k * i, j, 0.0);
}

TEST_CASE("product agrees with the 4x4 real matrix representation") {
  gen::for_all(11, 500, [](gen::Gen& g, int) {
    const Quaternion p = g.quaternion(3.0), q = g.quaternion(3.0);
    check_close(p * q, oracle::product(p, q), 1e-12 * (1 + p.norm() * q.norm()));
  });
}

TEST_CASE("inverse") {
  check_close(srq::invert(Quaternion::i()), -Quaternion::i());
  check_close(srq::invert(2.0), 0.5);
  check_close(srq::invert(Quaternion(0, 1, 1, 0)), Quaternion(0, -0.5, -0.5, 0));
  CHECK(oracle::dist(Quaternion(0, 1, 1, 0) * Quaternion(0, -0.5, -0.5, 0), 1.0) == 0.0);
  gen::for_all(12, 200, [](gen::Gen& g, int) {
    const Quaternion p = g.quaternion(2.0);
    check_close(srq::invert(p), oracle::inverse(p), 1e-10 / p.norm2());
  });
  CHECK_THROWS_AS(srq::invert(0.0), srq::Error);
  try {
    srq::invert(0.0);
  } catch (const srq::Error& e) {
    CHECK(e.code() == srq::ErrorCode::ZeroDivision);
  }
}

TEST_CASE("tiny but nonzero quaternions invert without overflow") {
  const Quaternion tiny(1e-140, 1e-140, 0, 0);
  const Quaternion inv = srq::invert(tiny);
  CHECK(inv.is_finite());
  CHECK(std::abs((tiny * inv).w - 1.0) < 1e-12);
  const Quaternion huge(1e200, 0, 1e200, 0);
  CHECK(srq::invert(huge).is_finite());
  // Below the configured zero threshold the quaternion counts as zero.
  CHECK_THROWS_AS(srq::invert(Quaternion(1e-160, 0, 0, 0)), srq::Error);
}

TEST_CASE("divisions") {
  const Quaternion p(1, 2, 3, 4), q(0.5, -1, 0.25, 2);
  check_close(srq::right_divide(p, q) * q, p, 1e-12);
  check_close(q * srq::left_divide(q, p), p, 1e-12);
}

TEST_CASE("slice decomposition") {
  auto s = srq::slice_decompose(Quaternion(1, 2, 0, 0));
  CHECK(s.x0 == 1.0);
  CHECK(s.y0 == doctest::Approx(2.0));
  check_close(s.unit, Quaternion::i());

  s = srq::slice_decompose(3.0);
  CHECK(s.x0 == 3.0);
  CHECK(s.y0 == 0.0);
  check_close(s.unit, Quaternion::i(), 0.0);

  s = srq::slice_decompose(Quaternion(1, 1, 1, 0));
  CHECK(s.x0 == 1.0);
  CHECK(s.y0 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  check_close(s.unit, Quaternion(0, 1, 1, 0) / std::sqrt(2.0));
  check_close(s.reconstruct(), Quaternion(1, 1, 1, 0));

  // Near-real points keep their small imaginary part.
  s = srq::slice_decompose(Quaternion(0.5, 0, 1e-14, 0));
  CHECK(s.y0 == doctest::Approx(1e-14));
  check_close(s.unit, Quaternion::j());
}

TEST_CASE("conjugate and modulus") {
  check_close(srq::conjugate(Quaternion(1, 1, 1, 1)), Quaternion(1, -1, -1, -1), 0.0);
  CHECK(srq::modulus(Quaternion(3, 4, 0, 0)) == 5.0);
  const Quaternion p(1, 1, 0, 0), q(2, 0, 1, 0);
  CHECK(srq::modulus(p * q) == doctest::Approx(std::sqrt(2.0) * std::sqrt(5.0)).epsilon(1e-15));
}

TEST_CASE("algebraic invariants on random samples") {
  gen::for_all(13, 1000, [](gen::Gen& g, int) {
    const Quaternion p = g.quaternion(2.0), q = g.quaternion(2.0), r = g.quaternion(2.0);
    const double scale = p.norm() * q.norm() * r.norm();
    CHECK(oracle::dist((p * q) * r, p * (q * r)) <= 1e-12 * (1.0 + scale));
    CHECK(std::abs((p * q).norm() - p.norm() * q.norm()) <= 1e-12 * (1.0 + p.norm() * q.norm()));
    CHECK(std::abs((p * q).w - (q * p).w) <= 1e-12 * (1.0 + p.norm() * q.norm()));
    CHECK(oracle::dist(srq::slice_decompose(p).reconstruct(), p) <= 1e-12 * (1.0 + p.norm()));
    const auto s = srq::slice_decompose(p);
    CHECK(s.y0 >= 0.0);
    CHECK(std::abs(s.unit.norm() - 1.0) < 1e-12);
    CHECK(s.unit.w == 0.0);
  });
}

TEST_CASE("error codes have names") {
  CHECK(std::string(srq::to_string(srq::ErrorCode::PoleOnSymmetrizationZeroSet)) == "PoleOnSymmetrizationZeroSet");
  CHECK(std::string(srq::to_string(srq::ErrorCode::NotSp11)) == "NotSp11");
}
