#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "srq/geometry.hpp"
#include "srq/verify.hpp"

namespace srq::verify {

namespace {

constexpr std::size_t kPointsPerCase = 10;

/// Runs `body(rng, count, report)` on independent streams and merges the
/// partial reports in stream order.
template <class Body>
VerificationReport run_batched(const std::string& suite, const Config& config, Body body) {
  const unsigned batches = std::max(1u, config.batches);
  std::vector<std::future<VerificationReport>> parts;
  parts.reserve(batches);
  for (unsigned b = 0; b < batches; ++b) {
    const std::size_t count = config.samples / batches + (b < config.samples % batches ? 1 : 0);
    parts.push_back(std::async(std::launch::async, [=, &config] {
      Rng rng = Rng::stream(config.seed, b);
      VerificationReport part{suite, config.seed, count, {}};
      body(rng, count, part);
      return part;
    }));
  }
  VerificationReport report{suite, config.seed, config.samples, {}};
  for (auto& part : parts) report.merge(part.get());
  return report;
}

/// Splits `count` samples into cases of at most kPointsPerCase points.
template <class Case>
void for_each_case(Rng& rng, std::size_t count, double radius, Case each) {
  std::size_t produced = 0;
  for (std::size_t index = 0; produced < count; ++index) {
    const std::size_t k = std::min(kPointsPerCase, count - produced);
    std::vector<Quaternion> points(k);
    for (auto& q : points) q = rng.in_ball(radius);
    each(index, std::span<const Quaternion>(points));
    produced += k;
  }
}

int random_degree(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

RegularPolynomial random_polynomial(Rng& rng, int degree, double half_width = 1.0) {
  std::vector<Quaternion> a(static_cast<std::size_t>(degree) + 1);
  for (auto& an : a) an = rng.in_cube(half_width);
  return RegularPolynomial(std::move(a));
}

double coefficient_distance(const RegularPolynomial& f, const RegularPolynomial& g) {
  double out = 0.0;
  const std::size_t n = std::max(f.size(), g.size());
  for (std::size_t k = 0; k < n; ++k) out = std::max(out, distance(f[k], g[k]));
  return out;
}

/// Relative distance with a floor of one.
double relative(const Quaternion& x, const Quaternion& y) {
  return distance(x, y) / std::max({1.0, x.norm(), y.norm()});
}

/// True when q is well away from the excluded spheres of a quotient.
bool well_inside(const RegularQuotient& f, const Quaternion& q, double margin = 1e-3) {
  const auto& p = f.pole_polynomial();
  return evaluate(p, q).norm() > margin * std::max(1.0, coefficient_norm_sum(p));
}

template <class Body>
void guarded(Recorder& rec, const std::string& name, const nlohmann::json& witness, Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    rec.failure(name, std::string(to_string(e.code())) + ": " + e.what(), witness);
  }
}

RegularQuotient as_quotient(RegularPolynomial f) { return RegularQuotient::from_polynomial(std::move(f)); }

}  // namespace

VerificationReport run_schwarz_pick_suite(const Config& config) {
  return run_batched("schwarz-pick", config, [&](Rng& rng, std::size_t count, VerificationReport& out) {
    for_each_case(rng, count, config.radius, [&](std::size_t index, std::span<const Quaternion> points) {
      const Quaternion q0 = rng.in_ball(config.radius);
      const int kind = static_cast<int>(index % 10);
      if (kind == 0) {
        const Quaternion a = rng.in_ball(0.9);
        out.merge(check_schwarz_pick(regular_moebius_quotient(a, rng.unit()), q0, points, config, true));
      } else if (kind == 1) {
        const RegularQuotient f = as_quotient(random_self_map(rng, random_degree(rng, 0, 4)));
        out.merge(check_schwarz_pick(right_action(f, random_sp11(rng)), q0, points, config));
      } else {
        const RegularQuotient f = as_quotient(random_self_map(rng, 1 + kind % 6));
        out.merge(check_schwarz_pick(f, q0, points, config));
      }
    });
  });
}

VerificationReport run_zero_case_suite(const Config& config) {
  return run_batched("zero-case", config, [&](Rng& rng, std::size_t count, VerificationReport& out) {
    for_each_case(rng, count, config.radius, [&](std::size_t index, std::span<const Quaternion> points) {
      const Quaternion q0 = rng.in_ball(0.9);
      if (index % 5 == 0) {
        out.merge(check_zero_case(regular_moebius_quotient(q0, rng.unit()), q0, points, config, true));
      } else {
        const RegularQuotient g = as_quotient(random_self_map(rng, random_degree(rng, 0, 4)));
        out.merge(check_zero_case(regular_moebius_quotient(q0) * g, q0, points, config));
      }
    });
  });
}

VerificationReport run_modulus_product_suite(const Config& config) {
  return run_batched("modulus-product", config, [&](Rng& rng, std::size_t count, VerificationReport& out) {
    for_each_case(rng, count, config.radius, [&](std::size_t index, std::span<const Quaternion> points) {
      const RegularQuotient h = as_quotient(random_polynomial(rng, random_degree(rng, 0, 3)));
      if (index % 10 == 0) {
        const RegularPolynomial q = RegularPolynomial::identity();
        out.merge(check_modulus_product(h, as_quotient(right_scale(q, 0.5)), as_quotient(q), points, config));
        return;
      }
      // g has no zeros in the closed ball; f = g c with |c| < 1 or f = g * s with s
      // a self-map of the ball, so |f| < |g| holds strictly.
      std::vector<Quaternion> a(static_cast<std::size_t>(random_degree(rng, 1, 3)) + 1);
      double tail = 0.0;
      for (std::size_t n = 1; n < a.size(); ++n) {
        a[n] = rng.in_cube(1.0);
        tail += a[n].norm();
      }
      a[0] = rng.unit() * (tail + rng.uniform(0.1, 1.0));
      const RegularPolynomial g(std::move(a));
      const RegularPolynomial f = index % 2 == 0 ? right_scale(g, rng.in_ball(0.95))
                                                 : g * random_self_map(rng, random_degree(rng, 0, 2));
      out.merge(check_modulus_product(h, as_quotient(f), as_quotient(g), points, config));
    });
  });
}

VerificationReport run_reg_preservation_suite(const Config& config) {
  return run_batched("reg-preservation", config, [&](Rng& rng, std::size_t count, VerificationReport& out) {
    for_each_case(rng, count, config.radius, [&](std::size_t index, std::span<const Quaternion> points) {
      const RegularQuotient f = index % 4 == 0
                                    ? regular_moebius_quotient(rng.in_ball(0.9), rng.unit())
                                    : as_quotient(random_self_map(rng, random_degree(rng, 0, 4)));
      out.merge(check_reg_preservation(f, random_sp11(rng), points, config));
    });
  });
}

VerificationReport run_slice_regularity_suite(const Config& config) {
  return run_batched("slice-regularity", config, [&](Rng& rng, std::size_t count, VerificationReport& out) {
    Recorder rec(out, config.tolerance);
    for (std::size_t n = 0; n < count; ++n) {
      RegularQuotient f = as_quotient(RegularPolynomial::identity());
      switch (n % 4) {
        case 0:
          f = as_quotient(random_polynomial(rng, random_degree(rng, 0, 6)));
          break;
        case 1:
          f = regular_moebius_quotient(rng.in_ball(0.9), rng.unit());
          break;
        case 2:
          f = right_action(as_quotient(random_self_map(rng, random_degree(rng, 0, 4))), random_sp11(rng));
          break;
        default:
          f = left_action_by(random_sp11(rng), as_quotient(random_self_map(rng, random_degree(rng, 0, 4))));
          break;
      }
      Config single = config;
      single.seed = rng.next();
      out.merge(check_slice_regularity([&](const Quaternion& q) { return evaluate(f, q); }, 1, single));
    }
    // Control: q -> conj(q) is not regular and must be flagged.
    Config control = config;
    control.seed = rng.next();
    const auto flagged = check_slice_regularity([](const Quaternion& q) { return conjugate(q); }, 1, control);
    const auto* dbar = flagged.find("dbar");
    rec.within("control_flagged", dbar != nullptr && dbar->violations == 1 ? 0.0 : 1.0, 0.0);
  });
}

VerificationReport run_algebra_suite(const Config& config) {
  return run_batched("algebra", config, [&](Rng& rng, std::size_t count, VerificationReport& out) {
    Recorder rec(out, config.tolerance);
    for (std::size_t n = 0; n < count; ++n) {
      const RegularPolynomial f = random_polynomial(rng, random_degree(rng, 0, 4));
      const RegularPolynomial g = random_polynomial(rng, random_degree(rng, 0, 4));
      const RegularPolynomial h = random_polynomial(rng, random_degree(rng, 0, 4));
      const Quaternion q = rng.in_ball(config.radius);
      const Quaternion q0 = rng.in_ball(0.9);
      const double sf = 1.0 + coefficient_norm_sum(f);
      const double sg = 1.0 + coefficient_norm_sum(g);
      const double scale = sf * sg * (1.0 + coefficient_norm_sum(h));
      const nlohmann::json w = {{"q", to_json(q)}, {"q0", to_json(q0)}};

      guarded(rec, "star_identities", w, [&] {
        rec.within("associativity", coefficient_distance((f * g) * h, f * (g * h)), 1e-12 * scale, w);
        rec.within("distributivity", coefficient_distance(f * (g + h), f * g + f * h), 1e-12 * scale, w);
        rec.within("conjugate_reverses_products",
                   coefficient_distance(regular_conjugate(f * g), regular_conjugate(g) * regular_conjugate(f)),
                   1e-12 * scale, w);
        const auto s = symmetrization_with_residue(f);
        rec.within("symmetrization_real", s.imaginary_residue, 1e-12 * sf * sf, w);
        rec.within("symmetrization_commutes", coefficient_distance(f * regular_conjugate(f), regular_conjugate(f) * f),
                   1e-12 * sf * sf, w);
        rec.within("symmetrization_multiplicative",
                   coefficient_distance(symmetrization(f * g), symmetrization(f) * symmetrization(g)),
                   1e-11 * sf * sf * sg * sg, w);
      });

      guarded(rec, "pointwise_identities", w, [&] {
        const Quaternion fq = evaluate(f, q);
        if (fq.norm() > 1e-6) {
          const Quaternion expected = fq * evaluate(g, invert(fq) * q * fq);
          rec.within("product_formula", distance(evaluate(f * g, q), expected), 1e-11 * scale, w);
        }
        const RegularPolynomial r{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        rec.within("real_factor_multiplies", distance(evaluate(r * g, q), evaluate(r, q) * evaluate(g, q)),
                   1e-12 * scale, w);
        const RegularPolynomial linear{-q0, 1.0};
        rec.within("remainder_identity",
                   distance(evaluate(f, q) - evaluate(f, q0), evaluate(linear * remainder(f, q0), q)),
                   1e-12 * scale, w);
      });

      if (f.degree() >= 1) {
        guarded(rec, "transform", w, [&] {
          const Quaternion fcq = evaluate(regular_conjugate(f), q);
          if (fcq.norm() <= 1e-6) return;
          const Quaternion t = transform_Tf(f, q);
          rec.within("transform_keeps_sphere",
                     std::abs(t.w - q.w) + std::abs(t.imag_norm() - q.imag_norm()), 1e-12, w);
          if (evaluate(f, t).norm() > 1e-6) {
            rec.within("transform_inverse", distance(transform_Tf(regular_conjugate(f), t), q), 1e-9, w);
          }
        });

        guarded(rec, "zero_structure", w, [&] {
          for (const auto& sphere : sphere_zero_set(f)) {
            const auto zf = zeros_on_sphere(f, sphere.x, sphere.y);
            const auto zc = zeros_on_sphere(regular_conjugate(f), sphere.x, sphere.y);
            rec.within("zeros_found", zf.kind == ZeroKind::none ? 1.0 : 0.0, 0.0, w);
            rec.within("conjugate_shares_zero_spheres", (zf.kind == ZeroKind::none) != (zc.kind == ZeroKind::none),
                       0.0, w);
            rec.within("zero_residual", zf.residual, 1e-6 * sf, w);
          }
        });
      }

      guarded(rec, "quotient_routes", w, [&] {
        if (f.is_zero()) return;
        for (auto side : {QuotientSide::left, QuotientSide::right}) {
          const RegularQuotient quotient(f, g, side);
          if (!well_inside(quotient, q)) continue;
          rec.within(side == QuotientSide::left ? "left_routes_agree" : "right_routes_agree",
                     relative(eval_left_quotient(quotient, q), eval_via_transform(quotient, q)), 1e-9, w);
        }
      });

      if (!q0.is_real() && q0.imag_norm() > 1e-3) {
        guarded(rec, "expansion", w, [&] {
          const auto expansion = spherical_expansion(f, q0, static_cast<std::size_t>(f.degree() / 2 + 1));
          rec.within("expansion_reconstructs", distance(expansion.evaluate(q), evaluate(f, q)), 1e-10 * sf, w);
          rec.within("spherical_derivative_is_A1",
                     distance(spherical_derivative_at(f, q0), expansion.coefficients[1]), 1e-9 * sf, w);
          const Quaternion v = rng.unit();
          constexpr double t = 1e-6;
          const Quaternion fd = (evaluate(f, q0 + t * v) - evaluate(f, q0 - t * v)) / (2.0 * t);
          rec.within("directional_derivative", distance(directional_derivative(f, q0, v), fd), 1e-6 * sf, w);
        });
      }

      guarded(rec, "cullen", w, [&] {
        const auto slice = slice_decompose(q0);
        constexpr double step = 1e-5;
        const Quaternion dx = (evaluate(f, on_slice(slice.x0 + step, slice.y0, slice.unit)) -
                               evaluate(f, on_slice(slice.x0 - step, slice.y0, slice.unit))) /
                              (2.0 * step);
        const Quaternion dy = (evaluate(f, on_slice(slice.x0, slice.y0 + step, slice.unit)) -
                               evaluate(f, on_slice(slice.x0, slice.y0 - step, slice.unit))) /
                              (2.0 * step);
        const Quaternion fd = 0.5 * (dx - slice.unit * dy);
        rec.within("cullen_derivative", distance(evaluate(cullen_derivative(f), q0), fd), 1e-6 * sf, w);
      });
    }
  });
}

namespace {

QuaternionMatrix2 random_matrix(Rng& rng) {
  for (;;) {
    QuaternionMatrix2 m{rng.in_cube(1.0), rng.in_cube(1.0), rng.in_cube(1.0), rng.in_cube(1.0)};
    if (dieudonne_det(m) > 0.1) return m;
  }
}

}  // namespace

VerificationReport run_fractional_suite(const Config& config) {
  return run_batched("fractional", config, [&](Rng& rng, std::size_t count, VerificationReport& out) {
    Recorder rec(out, config.tolerance);
    const RegularQuotient id = as_quotient(RegularPolynomial::identity());
    for (std::size_t n = 0; n < count; ++n) {
      const QuaternionMatrix2 a = random_matrix(rng);
      const QuaternionMatrix2 b = random_matrix(rng);
      const Quaternion q = rng.in_ball(config.radius);
      const RegularQuotient f = as_quotient(random_polynomial(rng, random_degree(rng, 0, 3)));
      const nlohmann::json w = {{"q", to_json(q)}};

      guarded(rec, "matrix_algebra", w, [&] {
        const double da = dieudonne_det(a);
        const double db = dieudonne_det(b);
        rec.within("det_multiplicative", std::abs(dieudonne_det(a * b) - da * db), 1e-10 * (1.0 + da * db), w);
        rec.within("non_sp11_rejected", is_sp11(a) ? 1.0 : 0.0, 0.0, w);
      });

      guarded(rec, "right_action_law", w, [&] {
        const RegularQuotient lhs = right_action(right_action(f, a), b);
        const RegularQuotient rhs = right_action(f, a * b);
        if (well_inside(lhs, q) && well_inside(rhs, q)) {
          rec.within("right_action_law", relative(evaluate(lhs, q), evaluate(rhs, q)), 1e-8, w);
        }
      });

      guarded(rec, "conjugation_swap", w, [&] {
        const RegularQuotient lhs = quotient_conjugate(right_action(f, a));
        const RegularQuotient rhs = left_action(conjugate_entries(a), quotient_conjugate(f));
        if (well_inside(lhs, q) && well_inside(rhs, q)) {
          rec.within("conjugation_swap", relative(evaluate(lhs, q), evaluate(rhs, q)), 1e-8, w);
        }
      });

      guarded(rec, "hermitian", w, [&] {
        const Quaternion off = rng.in_cube(1.0);
        const QuaternionMatrix2 hmat{rng.uniform(1.0, 2.0), conjugate(off), off, rng.uniform(-2.0, -1.0)};
        const std::vector<Quaternion> pts{q, rng.in_ball(config.radius), rng.in_ball(config.radius)};
        rec.within("hermitian_coincidence", hermitian_coincidence_check(f, hmat, pts, 1e-8) ? 0.0 : 1.0, 0.0, w);
      });

      guarded(rec, "left_right_convert", w, [&] {
        const RegularQuotient fa = regular_fractional(a);
        const RegularQuotient left = left_action(left_right_convert(a), id);
        if (well_inside(fa, q) && well_inside(left, q)) {
          rec.within("left_right_convert", relative(evaluate(fa, q), evaluate(left, q)), 1e-8, w);
        }
        const RegularQuotient closed = regular_fractional(right_from_left(conjugate_entries(a)));
        const RegularQuotient conj = quotient_conjugate(fa);
        if (well_inside(closed, q) && well_inside(conj, q)) {
          rec.within("conjugation_closure", relative(evaluate(closed, q), evaluate(conj, q)), 1e-8, w);
        }
      });

      guarded(rec, "stabilizer", w, [&] {
        const Quaternion t = rng.unit() * rng.uniform(0.5, 2.0);
        rec.within("identity_stabilizer",
                   distance(evaluate(right_action(id, QuaternionMatrix2::scalar(t)), q), q), 1e-12, w);
      });

      guarded(rec, "sp11", w, [&] {
        const Quaternion q0 = rng.in_ball(0.9);
        const Quaternion u = rng.unit();
        const QuaternionMatrix2 s = from_normal_form(q0, u);
        const QuaternionMatrix2 h = QuaternionMatrix2::signature();
        rec.within("sp11_form", max_entry_distance(conjugate_transpose(s) * h * s, h), 1e-9, w);
        rec.within("sp11_det", std::abs(dieudonne_det(s) - 1.0), 1e-9, w);
        rec.strict("sp11_self_map", evaluate(regular_fractional(s), q).norm(), 1.0, w);
        rec.within("sp11_closed", is_sp11(s * random_sp11(rng)) ? 0.0 : 1.0, 0.0, w);
        const MoebiusNormalForm back = normal_form(s);
        rec.within("normal_form_roundtrip", distance(back.q0, q0) + distance(back.u, u), 1e-9, w);
      });
    }
  });
}

VerificationReport run_geometry_suite(const Config& config) {
  return run_batched("geometry", config, [&](Rng& rng, std::size_t count, VerificationReport& out) {
    Recorder rec(out, config.tolerance);
    for (std::size_t n = 0; n < count; ++n) {
      const Quaternion q0 = rng.in_ball(0.9);
      const Quaternion u = rng.unit();
      const Quaternion v = rng.unit();
      const Quaternion p = rng.in_ball(config.radius);
      const Quaternion q = rng.in_ball(config.radius);
      const nlohmann::json w = {{"q0", to_json(q0)}, {"p", to_json(p)}, {"q", to_json(q)}};

      guarded(rec, "isometries", w, [&] {
        const double d = poincare_distance(p, q);
        const double moved = poincare_distance(classical_moebius(q0, u, v, p), classical_moebius(q0, u, v, q));
        rec.within("classical_isometry", std::abs(moved - d), 1e-9 * (1.0 + d), w);
        rec.within("conjugation_isometry", std::abs(poincare_distance(conjugate(p), conjugate(q)) - d),
                   1e-12 * (1.0 + d), w);
        rec.within("pointwise_inverse", distance(pointwise_moebius_inverse(q0, pointwise_moebius(q0, q)), q),
                   1e-10, w);
      });

      guarded(rec, "regular_moebius", w, [&] {
        const RegularQuotient left = regular_moebius_quotient(q0, u);
        const Quaternion value = evaluate(left, q);
        const Quaternion twisted = twist_map(q0, q);
        rec.within("factorization", distance(value, pointwise_moebius(q0, twisted) * u), 1e-10, w);
        rec.within("forms_agree", distance(value, evaluate(regular_moebius_right_quotient(q0, u), q)), 1e-10, w);
        rec.within("twist_inverse", distance(twist_map_inverse(q0, twisted), q), 1e-10, w);
        rec.within("twist_keeps_sphere",
                   std::abs(twisted.w - q.w) + std::abs(twisted.imag_norm() - q.imag_norm()), 1e-12, w);
        rec.strict("self_map", value.norm(), 1.0, w);
        const Quaternion boundary = rng.unit();
        rec.within("boundary_to_boundary", std::abs(evaluate(left, boundary).norm() - 1.0), 1e-10, w);
      });

      guarded(rec, "derivatives", w, [&] {
        const auto [cullen, spherical] = conformality_defect(q0);
        const RegularQuotient m = regular_moebius_quotient(q0);
        rec.within("cullen_at_center", std::abs(evaluate(cullen_derivative(m), q0).norm() - cullen),
                   1e-9 * cullen, w);
        if (q0.imag_norm() > 1e-4) {
          rec.strict("conformality_defect", spherical, cullen, w);
          rec.within("spherical_at_center", std::abs(spherical_derivative_at(m, q0).norm() - spherical),
                     1e-9 * cullen, w);
        } else {
          rec.bound("conformality_defect", spherical, cullen, w);
        }
      });

      guarded(rec, "closed_form", w, [&] {
        const Quaternion c = rng.in_ball(0.5);
        if (c.imag_norm() <= 1e-3) return;
        const auto closed = moebius_expansion_coefficients(c, 2);
        const auto series = spherical_expansion(moebius_power_series(c, 60), c, 2);
        double worst = 0.0;
        for (std::size_t k = 0; k < closed.coefficients.size(); ++k) {
          worst = std::max(worst, distance(closed.coefficients[k], series.coefficients[k]));
        }
        rec.within("closed_form_coefficients", worst, 1e-8, {{"q0", to_json(c)}});
      });

      guarded(rec, "geodesic", w, [&] {
        if (distance(p, q) < 1e-6) return;
        const GeodesicSegment segment = geodesic(p, q);
        const double t = rng.uniform();
        const Quaternion mid = segment(t);
        const double total = poincare_distance(p, q);
        const double first = poincare_distance(p, mid);
        rec.within("geodesic_additive", std::abs(first + poincare_distance(mid, q) - total), 1e-8 * (1.0 + total), w);
        rec.within("geodesic_arc_length", std::abs(first - t * segment.length()), 1e-8 * (1.0 + total), w);
        rec.within("geodesic_endpoint", distance(segment(1.0), q), 1e-12, w);
      });
    }
  });
}

std::vector<std::string> suite_names() {
  return {"schwarz-pick", "zero-case", "modulus-product", "reg-preservation",
          "slice-regularity", "algebra", "fractional", "geometry"};
}

VerificationReport run_suite(const std::string& name, const Config& config) {
  if (name == "schwarz-pick") return run_schwarz_pick_suite(config);
  if (name == "zero-case") return run_zero_case_suite(config);
  if (name == "modulus-product") return run_modulus_product_suite(config);
  if (name == "reg-preservation") return run_reg_preservation_suite(config);
  if (name == "slice-regularity") return run_slice_regularity_suite(config);
  if (name == "algebra") return run_algebra_suite(config);
  if (name == "fractional") return run_fractional_suite(config);
  if (name == "geometry") return run_geometry_suite(config);
  throw std::out_of_range("unknown suite: " + name);
}

bool AggregateReport::pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const VerificationReport& r) { return r.pass(); });
}

nlohmann::json AggregateReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : suites) list.push_back(s.to_json());
  return {{"seed", seed}, {"pass", pass()}, {"suites", list}};
}

AggregateReport run_all(const Config& config) {
  AggregateReport out{config.seed, {}};
  for (const auto& name : suite_names()) out.suites.push_back(run_suite(name, config));
  return out;
}

}  // namespace srq::verify
