#include <doctest.h>

#include <cmath>

#include "srq/geometry.hpp"
#include "srq/io.hpp"
#include "srq/series.hpp"
#include "support.hpp"

using srq::Quaternion;
using srq::RegularPolynomial;

namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

RegularPolynomial P(const char* text) { return srq::parse_polynomial(text); }

double coefficient_gap(const RegularPolynomial& f, const RegularPolynomial& g) {
  double out = 0.0;
  for (std::size_t n = 0; n < std::max(f.size(), g.size()); ++n) out = std::max(out, oracle::dist(f[n], g[n]));
  return out;
}

/// Central difference of f along a slice: 0.5 (d/dx - I d/dy) f.
Quaternion cullen_fd(const RegularPolynomial& f, const Quaternion& q) {
  const auto s = srq::slice_decompose(q);
  const double h = 1e-5;
  const Quaternion dx = (srq::evaluate(f, srq::on_slice(s.x0 + h, s.y0, s.unit)) -
                         srq::evaluate(f, srq::on_slice(s.x0 - h, s.y0, s.unit))) / (2 * h);
  const Quaternion dy = (srq::evaluate(f, srq::on_slice(s.x0, s.y0 + h, s.unit)) -
                         srq::evaluate(f, srq::on_slice(s.x0, s.y0 - h, s.unit))) / (2 * h);
  return 0.5 * (dx - s.unit * dy);
}

}  // namespace

TEST_CASE("normalization drops trailing zeros") {
  const RegularPolynomial f{1.0, I, 0.0, 0.0};
  CHECK(f.degree() == 1);
  CHECK(RegularPolynomial{}.degree() == -1);
  CHECK(RegularPolynomial{0.0}.is_zero());
  CHECK(f[5] == Quaternion{});
}

TEST_CASE("evaluation") {
  CHECK(oracle::dist(srq::evaluate(RegularPolynomial{0.0, 1.0}, Quaternion(3, 1, 0, 0)), Quaternion(3, 1, 0, 0)) == 0.0);
  CHECK(oracle::dist(srq::evaluate(P("q^2"), I), -1.0) == 0.0);
  CHECK(oracle::dist(srq::evaluate(P("q - i"), J), J - I) == 0.0);
  gen::for_all(21, 200, [](gen::Gen& g, int) {
    const auto a = g.coefficients(g.integer(0, 6));
    const Quaternion q = g.quaternion(1.2);
    CHECK(oracle::dist(srq::evaluate(RegularPolynomial(a), q), oracle::value_by_powers(a, q)) < 1e-12 * 50);
  });
}

TEST_CASE("star product examples") {
  CHECK(coefficient_gap(P("q - i") * P("q - j"), RegularPolynomial{K, -(I + J), 1.0}) == 0.0);
  const RegularPolynomial f = P("q^3*(1+i) + 2j");
  CHECK(f * RegularPolynomial{1.0} == f);
  CHECK(coefficient_gap(P("q - i") * P("q + i"), RegularPolynomial{1.0, 0.0, 1.0}) == 0.0);
}

TEST_CASE("star product equals pointwise product at real points") {
  // Real points commute with everything, so (f*g)(x) = f(x) g(x) there; a
  // polynomial of degree n is pinned down by n + 1 real values.
  gen::for_all(22, 100, [](gen::Gen& g, int) {
    const auto a = g.coefficients(g.integer(0, 4));
    const auto b = g.coefficients(g.integer(0, 4));
    const RegularPolynomial fg = RegularPolynomial(a) * RegularPolynomial(b);
    for (int n = 0; n <= fg.degree() + 1; ++n) {
      const double x = -1.0 + 0.37 * n;
      const Quaternion expected = oracle::product(oracle::value_at_real(a, x), oracle::value_at_real(b, x));
      CHECK(oracle::dist(srq::evaluate(fg, x), expected) < 1e-11 * (1 + expected.norm()) * 10);
    }
  });
}

TEST_CASE("regular conjugate") {
  CHECK(srq::regular_conjugate(P("q - i")) == P("q + i"));
  const RegularPolynomial real = P("q^2*3 - 1");
  CHECK(srq::regular_conjugate(real) == real);
  CHECK(srq::regular_conjugate(P("q*k + (1+j)")) == RegularPolynomial{Quaternion(1, 0, -1, 0), -K});
}

TEST_CASE("symmetrization") {
  CHECK(srq::symmetrization(P("q - i")) == P("q^2 + 1"));
  CHECK(srq::symmetrization(RegularPolynomial{Quaternion(1, 2, 2, 0)}) == RegularPolynomial{9.0});
  const auto s = srq::symmetrization_with_residue(P("(q-i)*(q-j)"));
  CHECK(coefficient_gap(s.value, P("q^4 + 2q^2 + 1")) < 1e-15);
  CHECK(s.imaginary_residue < 1e-15);
  CHECK(s.value.has_real_coefficients());
}

TEST_CASE("remainder") {
  CHECK(coefficient_gap(srq::remainder(P("q^2"), I), P("q + i")) == 0.0);
  CHECK(srq::remainder(P("q"), Quaternion(0.3, 0.1, -2, 1)) == RegularPolynomial{1.0});
  CHECK(srq::remainder(RegularPolynomial{I}, J).is_zero());
  gen::for_all(23, 100, [](gen::Gen& g, int) {
    const RegularPolynomial f = g.polynomial(g.integer(1, 5));
    const Quaternion q0 = g.quaternion();
    const RegularPolynomial back = RegularPolynomial{-q0, 1.0} * srq::remainder(f, q0) +
                                   RegularPolynomial{srq::evaluate(f, q0)};
    CHECK(coefficient_gap(back, f) < 1e-12 * 20);
  });
}

TEST_CASE("spherical expansion") {
  const Quaternion q0 = 0.5 * I;
  auto e = srq::spherical_expansion(P("q"), q0, 2);
  REQUIRE(e.coefficients.size() == 6);
  CHECK(oracle::dist(e.coefficients[0], q0) < 1e-15);
  CHECK(oracle::dist(e.coefficients[1], 1.0) < 1e-15);
  for (std::size_t n = 2; n < 6; ++n) CHECK(e.coefficients[n].norm() < 1e-15);

  // q^2 = [(q - x0)^2 + y0^2] + (q - q0) 2 x0 + q0^2 with x0 = 0.
  e = srq::spherical_expansion(P("q^2"), q0, 1);
  CHECK(oracle::dist(e.coefficients[0], -0.25) < 1e-15);
  CHECK(e.coefficients[1].norm() < 1e-15);
  CHECK(oracle::dist(e.coefficients[2], 1.0) < 1e-15);
  gen::for_all(24, 20, [&](gen::Gen& g, int) {
    const Quaternion q = g.quaternion();
    CHECK(oracle::dist(e.evaluate(q), q * q) < 1e-12);
  });

  const RegularPolynomial f = P("q^3*(1+k) - q*j + 2");
  CHECK(oracle::dist(srq::spherical_expansion(f, q0, 0).coefficients[0], srq::evaluate(f, q0)) == 0.0);

  CHECK_THROWS_AS(srq::spherical_expansion(f, 0.3, 1), srq::Error);
  CHECK_THROWS_AS(srq::spherical_expansion(f, 0.3, 0), srq::Error);
}

TEST_CASE("spherical expansion reconstructs random polynomials") {
  gen::for_all(25, 100, [](gen::Gen& g, int) {
    const RegularPolynomial f = g.polynomial(g.integer(0, 7));
    const Quaternion q0 = g.non_real_in_ball(0.9);
    const auto e = srq::spherical_expansion(f, q0, static_cast<std::size_t>(f.degree() / 2 + 1));
    for (int n = 0; n < 5; ++n) {
      const Quaternion q = g.in_ball(1.0);
      CHECK(oracle::dist(e.evaluate(q), srq::evaluate(f, q)) < 1e-9);
    }
  });
}

TEST_CASE("Cullen derivative") {
  CHECK(srq::cullen_derivative(P("q^2")) == P("2q"));
  CHECK(srq::cullen_derivative(RegularPolynomial{J}).is_zero());
  gen::for_all(26, 100, [](gen::Gen& g, int) {
    const RegularPolynomial f = g.polynomial(g.integer(0, 6));
    const Quaternion q = g.non_real_in_ball(0.9);
    CHECK(oracle::dist(srq::evaluate(srq::cullen_derivative(f), q), cullen_fd(f, q)) < 1e-6);
  });
  // The Moebius map at i/2 has Cullen derivative (1 - |q0|^2)^{-1} = 4/3 there.
  const auto series = srq::moebius_power_series(0.5 * I, 80);
  CHECK(oracle::dist(srq::evaluate(srq::cullen_derivative(series), 0.5 * I), 4.0 / 3.0) < 1e-12);
}

TEST_CASE("spherical derivative") {
  gen::for_all(27, 20, [](gen::Gen& g, int) {
    CHECK(oracle::dist(srq::spherical_derivative_at(P("q"), g.non_real_in_ball(0.9)), 1.0) < 1e-12);
  });
  CHECK(srq::spherical_derivative_at(P("q^2"), 0.5 * I).norm() < 1e-15);
  CHECK(oracle::dist(srq::spherical_derivative_at(P("q^2"), Quaternion(1, 1, 0, 0)), 2.0) < 1e-15);
  CHECK_THROWS_AS(srq::spherical_derivative_at(P("q^2"), 0.5), srq::Error);

  const auto series = srq::moebius_power_series(0.5 * I, 80);
  CHECK(oracle::dist(srq::spherical_derivative_at(series, 0.5 * I), 0.8) < 1e-12);

  gen::for_all(28, 50, [](gen::Gen& g, int) {
    const RegularPolynomial f = g.polynomial(g.integer(0, 6));
    const Quaternion q0 = g.non_real_in_ball(0.9);
    const auto e = srq::spherical_expansion(f, q0, 1);
    CHECK(oracle::dist(srq::spherical_derivative_at(f, q0), e.coefficients[1]) < 1e-11);
  });
}

TEST_CASE("directional derivative") {
  gen::for_all(29, 10, [](gen::Gen& g, int) {
    const Quaternion v = g.quaternion();
    CHECK(oracle::dist(srq::directional_derivative(P("q"), g.non_real_in_ball(0.9), v), v) < 1e-12);
  });
  CHECK(srq::directional_derivative(P("q^2"), 0.5 * I, J).norm() < 1e-15);
  CHECK(srq::directional_derivative(P("q^3 + q*i"), 0.5 * I, 0.0).norm() == 0.0);
  gen::for_all(30, 100, [](gen::Gen& g, int) {
    const RegularPolynomial f = g.polynomial(g.integer(0, 6));
    const Quaternion q0 = g.non_real_in_ball(0.9);
    const Quaternion v = g.quaternion();
    const double t = 1e-6;
    const Quaternion fd = (srq::evaluate(f, q0 + t * v) - srq::evaluate(f, q0 - t * v)) / (2 * t);
    CHECK(oracle::dist(srq::directional_derivative(f, q0, v), fd) < 1e-6 * (1 + fd.norm()));
  });
}

TEST_CASE("coefficient norm sum bounds the ball") {
  CHECK(srq::coefficient_norm_sum(P("q^2")) == 1.0);
  CHECK(srq::coefficient_norm_sum(P("q/2 + i/4")) == 0.75);
  CHECK(srq::coefficient_norm_sum(RegularPolynomial{}) == 0.0);
  gen::for_all(31, 100, [](gen::Gen& g, int) {
    const RegularPolynomial f = g.polynomial(g.integer(0, 5));
    CHECK(srq::evaluate(f, g.in_ball(1.0)).norm() <= srq::coefficient_norm_sum(f) + 1e-12);
  });
}

TEST_CASE("algebra identities on random polynomials") {
  gen::for_all(32, 300, [](gen::Gen& g, int) {
    const RegularPolynomial f = g.polynomial(g.integer(0, 4));
    const RegularPolynomial h = g.polynomial(g.integer(0, 4));
    const RegularPolynomial k = g.polynomial(g.integer(0, 4));
    CHECK(coefficient_gap((f * h) * k, f * (h * k)) < 1e-11 * 100);
    CHECK(coefficient_gap(f * (h + k), f * h + f * k) < 1e-12 * 100);
    CHECK(coefficient_gap(srq::regular_conjugate(f * h), srq::regular_conjugate(h) * srq::regular_conjugate(f)) < 1e-12 * 100);
    CHECK(coefficient_gap(srq::symmetrization(f * h), srq::symmetrization(f) * srq::symmetrization(h)) < 1e-10);
    CHECK(coefficient_gap(f * srq::regular_conjugate(f), srq::regular_conjugate(f) * f) < 1e-12 * 100);
    CHECK(srq::regular_conjugate(srq::regular_conjugate(f)) == f);

    const Quaternion q = g.in_ball(1.0);
    const Quaternion fq = srq::evaluate(f, q);
    if (fq.norm() > 1e-6) {
      const Quaternion expected = fq * srq::evaluate(h, oracle::inverse(fq) * q * fq);
      CHECK(oracle::dist(srq::evaluate(f * h, q), expected) < 1e-10 * (1 + expected.norm()));
    }
    const RegularPolynomial r{g.real(), g.real(), g.real()};
    CHECK(oracle::dist(srq::evaluate(r * h, q), srq::evaluate(r, q) * srq::evaluate(h, q)) < 1e-12 * 100);
  });
}

TEST_CASE("star powers") {
  CHECK(srq::star_power(P("q - i"), 0) == RegularPolynomial{1.0});
  CHECK(srq::star_power(P("q - i"), 2) == P("(q - i)*(q - i)"));
  CHECK(coefficient_gap(srq::star_power(P("q"), 5), RegularPolynomial::monomial(5)) == 0.0);
}

TEST_CASE("scaling conventions") {
  const RegularPolynomial f = P("q*i + j");
  CHECK(srq::right_scale(f, K) == RegularPolynomial{J * K, I * K});
  CHECK(srq::left_scale(K, f) == RegularPolynomial{K * J, K * I});
}
