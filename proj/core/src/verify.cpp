#include "srq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "srq/geometry.hpp"

namespace srq::verify {

nlohmann::json to_json(const Quaternion& q) { return nlohmann::json::array({q.w, q.x, q.y, q.z}); }

bool VerificationReport::pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.pass(); });
}

double VerificationReport::worst_margin() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& p : properties) {
    if (p.has_margin) worst = std::min(worst, p.worst_margin);
  }
  return worst;
}

nlohmann::json VerificationReport::witness() const {
  const PropertyResult* worst = nullptr;
  for (const auto& p : properties) {
    // Violations dominate; otherwise the tightest margin.
    if (worst == nullptr || (p.violations > 0 && worst->violations == 0) ||
        ((p.violations > 0) == (worst->violations > 0) && p.has_margin &&
         (!worst->has_margin || p.worst_margin < worst->worst_margin))) {
      worst = &p;
    }
  }
  if (worst == nullptr) return nlohmann::json::object();
  nlohmann::json w = worst->witness.is_null() ? nlohmann::json::object() : worst->witness;
  w["property"] = worst->name;
  return w;
}

const PropertyResult* VerificationReport::find(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& incoming : other.properties) {
    auto it = std::find_if(properties.begin(), properties.end(),
                           [&](const PropertyResult& p) { return p.name == incoming.name; });
    if (it == properties.end()) {
      properties.push_back(incoming);
      continue;
    }
    it->samples += incoming.samples;
    it->violations += incoming.violations;
    if (incoming.has_margin && (!it->has_margin || incoming.worst_margin < it->worst_margin)) {
      it->worst_margin = incoming.worst_margin;
      it->witness = incoming.witness;
      it->has_margin = true;
    }
  }
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : properties) {
    props.push_back({{"name", p.name},
                     {"samples", p.samples},
                     {"violations", p.violations},
                     {"pass", p.pass()},
                     {"worst_margin", p.has_margin ? nlohmann::json(p.worst_margin) : nlohmann::json()}});
  }
  const double worst = worst_margin();
  return {{"suite", suite},
          {"seed", seed},
          {"samples", samples},
          {"pass", pass()},
          {"worst_margin", std::isfinite(worst) ? nlohmann::json(worst) : nlohmann::json()},
          {"witness", witness()},
          {"properties", props}};
}

void Recorder::add(const std::string& name, double margin, bool violated,
                   const nlohmann::json& witness) {
  auto it = std::find_if(report_.properties.begin(), report_.properties.end(),
                         [&](const PropertyResult& p) { return p.name == name; });
  if (it == report_.properties.end()) {
    PropertyResult fresh;
    fresh.name = name;
    report_.properties.push_back(std::move(fresh));
    it = std::prev(report_.properties.end());
  }
  ++it->samples;
  if (violated) ++it->violations;
  if (std::isnan(margin)) margin = -std::numeric_limits<double>::infinity();
  if (!it->has_margin || margin < it->worst_margin) {
    it->worst_margin = margin;
    it->witness = witness;
    it->has_margin = true;
  }
}

void Recorder::bound(const std::string& name, double lhs, double rhs, const nlohmann::json& witness) {
  const double margin = rhs - lhs;
  add(name, margin, !(margin >= -tolerance_ * (1.0 + std::abs(rhs))), witness);
}

void Recorder::strict(const std::string& name, double lhs, double rhs, const nlohmann::json& witness) {
  const double margin = rhs - lhs;
  add(name, margin, !(margin > 0.0), witness);
}

void Recorder::within(const std::string& name, double residual, double limit,
                      const nlohmann::json& witness) {
  const double margin = limit - residual;
  add(name, margin, !(margin >= 0.0), witness);
}

void Recorder::failure(const std::string& name, const std::string& reason,
                       const nlohmann::json& witness) {
  nlohmann::json w = witness.is_null() ? nlohmann::json::object() : witness;
  w["error"] = reason;
  add(name, -std::numeric_limits<double>::infinity(), true, w);
}

RegularPolynomial random_self_map(Rng& rng, int degree) {
  std::vector<Quaternion> a(static_cast<std::size_t>(std::max(degree, 0)) + 1);
  for (auto& an : a) an = rng.in_cube(1.0);
  const double target = (1.0 - 2e-6) * rng.uniform(0.5, 1.0);
  double sum = 0.0;
  for (const auto& an : a) sum += an.norm();
  if (sum > 0.0) {
    for (auto& an : a) an *= target / sum;
  }
  return RegularPolynomial(std::move(a));
}

RegularPolynomial random_self_map(std::uint64_t seed, int degree) {
  Rng rng(seed);
  return random_self_map(rng, degree);
}

QuaternionMatrix2 random_sp11(Rng& rng, double radius) {
  const Quaternion q0 = rng.in_ball(radius);
  return from_normal_form(q0, rng.unit());
}

namespace {

nlohmann::json point_witness(const Quaternion& q0, const Quaternion& q) {
  return {{"q0", to_json(q0)}, {"q", to_json(q)}};
}

template <class Body>
void guarded(Recorder& rec, const std::string& name, const nlohmann::json& witness, Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    rec.failure(name, std::string(to_string(e.code())) + ": " + e.what(), witness);
  }
}

}  // namespace

VerificationReport check_schwarz_pick(const RegularQuotient& f, const Quaternion& q0,
                                      std::span<const Quaternion> points, const Config& config,
                                      bool moebius) {
  VerificationReport report{"schwarz-pick", config.seed, points.size(), {}};
  Recorder rec(report, config.tolerance);
  const nlohmann::json at_q0 = {{"q0", to_json(q0)}};

  guarded(rec, "setup", at_q0, [&] {
    const Quaternion c = evaluate(f, q0);
    // 1 - conj(f(q0)) * f and its regular reciprocal.
    const RegularQuotient damping = add_constant(left_scale(-conjugate(c), f), 1.0);
    const RegularQuotient damping_inv = reciprocal(damping);

    const RegularQuotient lhs13 = add_constant(f, -c) * damping_inv;
    const RegularQuotient rhs13 = regular_moebius_right_quotient(q0);
    const RegularQuotient lhs14 = remainder(f, q0) * damping_inv;
    const RegularQuotient rhs14 =
        reciprocal(RegularQuotient::from_polynomial(RegularPolynomial{1.0, -conjugate(q0)}));

    for (const auto& q : points) {
      const auto w = point_witness(q0, q);
      guarded(rec, "pick_bound", w, [&] {
        const double l = evaluate(lhs13, q).norm();
        const double r = evaluate(rhs13, q).norm();
        rec.bound("pick_bound", l, r, w);
        if (moebius) rec.within("pick_bound_equality", std::abs(l - r), config.equality_tolerance, w);
      });
      guarded(rec, "pick_remainder", w, [&] {
        const double l = evaluate(lhs14, q).norm();
        const double r = evaluate(rhs14, q).norm();
        rec.bound("pick_remainder", l, r, w);
        if (moebius) rec.within("pick_remainder_equality", std::abs(l - r), config.equality_tolerance, w);
      });
    }

    guarded(rec, "pick_derivative", at_q0, [&] {
      const double l = evaluate(cullen_derivative(f) * damping_inv, q0).norm();
      const double r = 1.0 / (1.0 - q0.norm2());
      rec.bound("pick_derivative", l, r, at_q0);
      if (moebius) rec.within("pick_derivative_equality", std::abs(l - r), config.equality_tolerance, at_q0);
    });
  });
  return report;
}

VerificationReport check_schwarz_pick(const RegularQuotient& f, const Quaternion& q0,
                                      std::size_t sample_count, const Config& config,
                                      bool moebius) {
  Rng rng(config.seed);
  std::vector<Quaternion> points(sample_count);
  for (auto& q : points) q = rng.in_ball(config.radius);
  return check_schwarz_pick(f, q0, points, config, moebius);
}

VerificationReport check_zero_case(const RegularQuotient& f, const Quaternion& q0,
                                   std::span<const Quaternion> points, const Config& config,
                                   bool moebius) {
  VerificationReport report{"zero-case", config.seed, points.size(), {}};
  Recorder rec(report, config.tolerance);
  const nlohmann::json at_q0 = {{"q0", to_json(q0)}};

  guarded(rec, "setup", at_q0, [&] {
    rec.within("zero_at_q0", evaluate(f, q0).norm(), config.tolerance, at_q0);

    const RegularQuotient moebius_map = regular_moebius_quotient(q0);
    const RegularQuotient divided = reciprocal(moebius_map) * f;
    const RegularQuotient rem = remainder(f, q0);
    const RegularQuotient rem_bound =
        reciprocal(RegularQuotient::from_polynomial(RegularPolynomial{1.0, -conjugate(q0)}));

    for (const auto& q : points) {
      const auto w = point_witness(q0, q);
      guarded(rec, "quotient_bound", w, [&] {
        const double l = evaluate(divided, q).norm();
        rec.bound("quotient_bound", l, 1.0, w);
        if (moebius) rec.within("quotient_equality", std::abs(l - 1.0), config.equality_tolerance, w);
      });
      guarded(rec, "modulus_bound", w, [&] {
        rec.bound("modulus_bound", evaluate(f, q).norm(), evaluate(moebius_map, q).norm(), w);
      });
      guarded(rec, "remainder_bound", w, [&] {
        rec.bound("remainder_bound", evaluate(rem, q).norm(), evaluate(rem_bound, q).norm(), w);
      });
    }

    guarded(rec, "cullen_bound", at_q0, [&] {
      const double l = evaluate(cullen_derivative(f), q0).norm();
      const double r = 1.0 / (1.0 - q0.norm2());
      rec.bound("cullen_bound", l, r, at_q0);
      if (moebius) rec.within("cullen_equality", std::abs(l - r), config.equality_tolerance, at_q0);
    });
    if (!q0.is_real()) {
      guarded(rec, "spherical_bound", at_q0, [&] {
        const double l = spherical_derivative_at(f, q0).norm();
        const double r = 1.0 / (1.0 - conjugate(q0) * conjugate(q0)).norm();
        rec.bound("spherical_bound", l, r, at_q0);
        if (moebius) {
          rec.within("spherical_equality", std::abs(l - r), config.equality_tolerance, at_q0);
        }
      });
    }
  });
  return report;
}

VerificationReport check_modulus_product(const RegularQuotient& h, const RegularQuotient& f,
                                         const RegularQuotient& g,
                                         std::span<const Quaternion> points, const Config& config) {
  VerificationReport report{"modulus-product", config.seed, points.size(), {}};
  Recorder rec(report, config.tolerance);

  guarded(rec, "setup", nlohmann::json::object(), [&] {
    // The premise is checked on every sample before the conclusion is read.
    bool premise = true;
    bool strict_premise = true;
    for (const auto& q : points) {
      const double fq = evaluate(f, q).norm();
      const double gq = evaluate(g, q).norm();
      rec.bound("premise", fq, gq, {{"q", to_json(q)}});
      premise = premise && fq - gq <= config.tolerance * (1.0 + gq);
      strict_premise = strict_premise && fq < gq;
    }
    if (!premise) return;

    const RegularQuotient hf = h * f;
    const RegularQuotient hg = h * g;
    for (const auto& q : points) {
      const nlohmann::json w = {{"q", to_json(q)}};
      guarded(rec, "lemma", w, [&] {
        const double l = evaluate(hf, q).norm();
        const double r = evaluate(hg, q).norm();
        rec.bound("lemma", l, r, w);
        // Strictness is claimed off the zero set of h.
        if (strict_premise && evaluate(h, q).norm() > 1e-9) rec.strict("lemma_strict", l, r, w);
      });
    }
  });
  return report;
}

VerificationReport check_reg_preservation(const RegularQuotient& f, const QuaternionMatrix2& a,
                                          std::span<const Quaternion> points, const Config& config) {
  VerificationReport report{"reg-preservation", config.seed, points.size(), {}};
  Recorder rec(report, config.tolerance);

  guarded(rec, "setup", nlohmann::json::object(), [&] {
    const RegularQuotient right = right_action(f, a);
    const RegularQuotient left = left_action_by(a, f);
    const RegularQuotient conj = quotient_conjugate(f);
    for (const auto& q : points) {
      const nlohmann::json w = {{"q", to_json(q)}};
      guarded(rec, "right_action", w, [&] { rec.strict("right_action", evaluate(right, q).norm(), 1.0, w); });
      guarded(rec, "left_action", w, [&] { rec.strict("left_action", evaluate(left, q).norm(), 1.0, w); });
      guarded(rec, "conjugate", w, [&] { rec.strict("conjugate", evaluate(conj, q).norm(), 1.0, w); });
    }
  });
  return report;
}

namespace {

double dbar_residual(const PointFunction& f, double x, double y, const Quaternion& unit) {
  constexpr double h = 1e-5;
  const Quaternion dx = (f(on_slice(x + h, y, unit)) - f(on_slice(x - h, y, unit))) / (2.0 * h);
  const Quaternion dy = (f(on_slice(x, y + h, unit)) - f(on_slice(x, y - h, unit))) / (2.0 * h);
  return (0.5 * (dx + unit * dy)).norm();
}

}  // namespace

VerificationReport check_slice_regularity(const PointFunction& f, std::size_t sample_count,
                                          const Config& config) {
  VerificationReport report{"slice-regularity", config.seed, sample_count, {}};
  Recorder rec(report, config.tolerance);
  Rng rng(config.seed);
  for (std::size_t n = 0; n < sample_count; ++n) {
    const Quaternion unit = rng.unit_imaginary();
    double x = 0.0;
    double y = 0.0;
    do {
      x = rng.uniform(-0.9, 0.9);
      y = rng.uniform(-0.9, 0.9);
    } while (x * x + y * y >= 0.81);
    const nlohmann::json w = {{"q", to_json(on_slice(x, y, unit))}};
    guarded(rec, "dbar", w, [&] { rec.within("dbar", dbar_residual(f, x, y, unit), 1e-5, w); });
  }
  return report;
}

}  // namespace srq::verify
