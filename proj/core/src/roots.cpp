#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "srq/rational.hpp"

namespace srq {

namespace {

using Complex = std::complex<double>;

// Roots closer than this are grouped into one entry with multiplicity.
constexpr double kClusterTolerance = 1e-6;

Complex horner(const std::vector<double>& monic, Complex z) {
  Complex r = 0.0;
  for (std::size_t n = monic.size(); n-- > 0;) r = r * z + monic[n];
  return r;
}

double magnitude_scale(const std::vector<double>& monic, double r) {
  double s = 0.0;
  double power = 1.0;
  for (double c : monic) {
    s += std::abs(c) * power;
    power *= r;
  }
  return s;
}

struct Cluster {
  Complex center;
  int count;
};

std::vector<Cluster> cluster(std::vector<Complex> roots) {
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  std::vector<Cluster> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t a = 0; a < roots.size(); ++a) {
    if (used[a]) continue;
    Complex sum = roots[a];
    int count = 1;
    used[a] = true;
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      if (!used[b] && std::abs(roots[b] - roots[a]) <= kClusterTolerance * std::max(1.0, std::abs(roots[a]))) {
        used[b] = true;
        sum += roots[b];
        ++count;
      }
    }
    out.push_back({sum / static_cast<double>(count), count});
  }
  return out;
}

/// A root of multiplicity m is a simple root of the (m-1)-th derivative;
/// Newton there recovers the accuracy that clustering alone cannot.
Complex refine_multiple_root(const std::vector<double>& coefficients, Complex z, int multiplicity) {
  std::vector<double> d = coefficients;
  for (int k = 1; k < multiplicity && d.size() > 1; ++k) {
    for (std::size_t n = 1; n < d.size(); ++n) d[n - 1] = static_cast<double>(n) * d[n];
    d.pop_back();
  }
  if (d.size() < 2) return z;
  std::vector<double> dd(d.size() - 1);
  for (std::size_t n = 1; n < d.size(); ++n) dd[n - 1] = static_cast<double>(n) * d[n];
  for (int iteration = 0; iteration < 20; ++iteration) {
    const Complex slope = horner(dd, z);
    if (slope == Complex(0.0)) break;
    const Complex step = horner(d, z) / slope;
    z -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

}  // namespace

std::vector<std::complex<double>> durand_kerner(const std::vector<double>& coefficients,
                                                int max_iterations, double tolerance) {
  std::vector<double> monic = coefficients;
  while (!monic.empty() && monic.back() == 0.0) monic.pop_back();
  if (monic.empty()) {
    throw Error(ErrorCode::NonConvergence, "root finding on the zero polynomial");
  }
  const double lead = monic.back();
  for (double& c : monic) c /= lead;
  const std::size_t degree = monic.size() - 1;
  if (degree == 0) return {};

  // Fujiwara-style radius bound for the starting circle.
  double radius = 0.0;
  for (std::size_t k = 1; k <= degree; ++k) {
    radius = std::max(radius, std::pow(std::abs(monic[degree - k]), 1.0 / static_cast<double>(k)));
  }
  radius = std::max(2.0 * radius, 1e-3);

  std::vector<Complex> z(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(degree) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  for (int iteration = 0; iteration < max_iterations; ++iteration) {
    double largest_step = 0.0;
    bool residuals_small = true;
    for (std::size_t k = 0; k < degree; ++k) {
      const Complex value = horner(monic, z[k]);
      if (std::abs(value) > tolerance * magnitude_scale(monic, std::abs(z[k]))) {
        residuals_small = false;
      }
      Complex denom = 1.0;
      for (std::size_t m = 0; m < degree; ++m) {
        if (m != k) denom *= z[k] - z[m];
      }
      if (denom == Complex(0.0)) denom = tolerance;
      const Complex step = value / denom;
      z[k] -= step;
      largest_step = std::max(largest_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (residuals_small || largest_step < tolerance * 1e-2) return z;
  }
  throw Error(ErrorCode::NonConvergence, "Durand-Kerner iteration did not converge");
}

SphereZeroSet sphere_zero_set(const RegularPolynomial& f) {
  if (f.is_zero()) {
    throw Error(ErrorCode::NonConvergence, "the zero polynomial vanishes everywhere");
  }
  std::vector<double> coefficients;
  const RegularPolynomial fs = symmetrization(f);
  for (const auto& r : fs.coefficients()) coefficients.push_back(r.w);
  const auto roots = durand_kerner(coefficients);

  std::vector<Complex> real_roots;
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  for (const Complex& z : roots) {
    const double threshold = kClusterTolerance * std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) <= threshold) {
      real_roots.emplace_back(z.real(), 0.0);
    } else if (z.imag() > 0.0) {
      upper.push_back(z);
    } else {
      lower.push_back(z);
    }
  }

  // Real coefficients: pair every upper root with its nearest conjugate.
  std::vector<Complex> spheres;
  std::vector<bool> taken(lower.size(), false);
  for (const Complex& u : upper) {
    std::size_t best = lower.size();
    double best_distance = 0.0;
    for (std::size_t m = 0; m < lower.size(); ++m) {
      if (taken[m]) continue;
      const double d = std::abs(u - std::conj(lower[m]));
      if (best == lower.size() || d < best_distance) {
        best = m;
        best_distance = d;
      }
    }
    if (best == lower.size()) {
      spheres.push_back(u);
    } else {
      taken[best] = true;
      spheres.push_back(0.5 * (u + std::conj(lower[best])));
    }
  }

  SphereZeroSet out;
  for (const auto& c : cluster(real_roots)) {
    // f^s = |f|^2 on the reals, so real zeros always come in pairs.
    const Complex z = refine_multiple_root(coefficients, c.center, c.count);
    out.push_back({z.real(), 0.0, (c.count + 1) / 2});
  }
  for (const auto& c : cluster(spheres)) {
    const Complex z = refine_multiple_root(coefficients, c.center, c.count);
    out.push_back({z.real(), std::abs(z.imag()), c.count});
  }
  std::sort(out.begin(), out.end(), [](const SphereZero& a, const SphereZero& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return out;
}

ZerosOnSphere zeros_on_sphere(const RegularPolynomial& f, double x, double y, double tolerance) {
  ZerosOnSphere out;
  const double scale = std::max(1.0, coefficient_norm_sum(f)) *
                       std::pow(std::max(1.0, std::hypot(x, y)), std::max(0, f.degree()));
  if (y == 0.0) {
    out.point = x;
    out.residual = evaluate(f, x).norm();
    out.kind = out.residual <= tolerance * scale ? ZeroKind::isolated : ZeroKind::none;
    return out;
  }

  // On x + y S every regular function reads f(x + y I) = b + I c.
  const Quaternion i = Quaternion::i();
  const Quaternion up = evaluate(f, on_slice(x, y, i));
  const Quaternion down = evaluate(f, on_slice(x, -y, i));
  const Quaternion b = 0.5 * (up + down);
  const Quaternion c = -0.5 * (i * (up - down));

  if (c.norm() <= tolerance * scale) {
    out.kind = b.norm() <= tolerance * scale ? ZeroKind::spherical : ZeroKind::none;
    out.point = x;
    out.residual = b.norm();
    return out;
  }
  const Quaternion unit = -(b * invert(c));
  const double defect = std::abs(unit.w) + std::abs(unit.norm() - 1.0);
  if (defect > tolerance * std::max(1.0, b.norm() / c.norm()) || unit.imag_norm() == 0.0) {
    return out;
  }
  out.kind = ZeroKind::isolated;
  out.point = on_slice(x, y, unit.imag() / unit.imag_norm());
  out.residual = evaluate(f, out.point).norm();
  return out;
}

}  // namespace srq
