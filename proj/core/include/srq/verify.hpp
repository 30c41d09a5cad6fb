#ifndef SRQ_VERIFY_HPP
#define SRQ_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "srq/fractional.hpp"
#include "srq/random.hpp"
#include "srq/rational.hpp"

namespace srq::verify {

struct Config {
  std::uint64_t seed = 42;
  /// Primary sample count of a suite (points, triples or functions, see README).
  std::size_t samples = 10000;
  /// An inequality lhs <= rhs is violated when rhs - lhs < -tolerance (1 + |rhs|).
  double tolerance = 1e-9;
  /// Margin allowed where equality is expected (regular Moebius inputs).
  double equality_tolerance = 1e-8;
  /// Independent RNG streams; results do not depend on how batches are scheduled.
  unsigned batches = 8;
  /// Radius cap for sampled points of the ball.
  double radius = 0.99;
};

/// Outcome of one property over many samples. Merging only takes sums and
/// minima, so batch order never changes the result.
struct PropertyResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;
  bool has_margin = false;
  nlohmann::json witness;

  bool pass() const { return violations == 0; }
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<PropertyResult> properties;

  bool pass() const;
  /// Smallest margin over all properties.
  double worst_margin() const;
  /// Witness of the property holding the smallest margin.
  nlohmann::json witness() const;
  const PropertyResult* find(const std::string& name) const;

  /// Adds `other` property by property; `samples` of this report is kept.
  void merge(const VerificationReport& other);

  nlohmann::json to_json() const;
};

/// Accumulates margins into a report.
class Recorder {
 public:
  explicit Recorder(VerificationReport& report, double tolerance)
      : report_(report), tolerance_(tolerance) {}

  /// lhs <= rhs up to tolerance (1 + |rhs|).
  void bound(const std::string& name, double lhs, double rhs, const nlohmann::json& witness = {});
  /// lhs < rhs strictly.
  void strict(const std::string& name, double lhs, double rhs, const nlohmann::json& witness = {});
  /// residual <= limit, no extra slack.
  void within(const std::string& name, double residual, double limit,
              const nlohmann::json& witness = {});
  /// A property that failed to evaluate (pole, non-convergence); counted as a violation.
  void failure(const std::string& name, const std::string& reason, const nlohmann::json& witness = {});

 private:
  void add(const std::string& name, double margin, bool violated, const nlohmann::json& witness);

  VerificationReport& report_;
  double tolerance_;
};

nlohmann::json to_json(const Quaternion& q);

/// Uniform point of the 4-ball of the given radius.
inline Quaternion sample_ball(Rng& rng, double radius) { return rng.in_ball(radius); }

/// Random polynomial of the given degree with sum |a_n| < 1 - 1e-6, hence |f| < 1 on the ball.
RegularPolynomial random_self_map(std::uint64_t seed, int degree);
RegularPolynomial random_self_map(Rng& rng, int degree);

/// Random element of Sp(1,1) built from a random normal form.
QuaternionMatrix2 random_sp11(Rng& rng, double radius = 0.9);

/// Regular Schwarz-Pick inequalities at q0 for f: B -> B.
///   pick_bound       |(f - f(q0)) * D^{-*}| <= |(q - q0) * (1 - conj(q0) q)^{-*}|
///   pick_remainder   |R_{q0} f * D^{-*}| <= |(1 - q conj(q0))^{-*}|
///   pick_derivative  |d_c f * D^{-*}|(q0) <= 1 / (1 - |q0|^2)
/// where D = 1 - conj(f(q0)) * f.
/// With `moebius` set, also records the equality margins expected for regular
/// Moebius transformations.
VerificationReport check_schwarz_pick(const RegularQuotient& f, const Quaternion& q0,
                                      std::span<const Quaternion> points, const Config& config,
                                      bool moebius = false);
VerificationReport check_schwarz_pick(const RegularQuotient& f, const Quaternion& q0,
                                      std::size_t sample_count, const Config& config,
                                      bool moebius = false);

/// Bounds for f with f(q0) = 0: |M_{q0}^{-*} * f| <= 1, |f| <= |M_{q0}|,
/// |R_{q0} f| <= |(1 - q conj q0)^{-*}|, and the two derivative bounds at q0.
VerificationReport check_zero_case(const RegularQuotient& f, const Quaternion& q0,
                                   std::span<const Quaternion> points, const Config& config,
                                   bool moebius = false);

/// |f| <= |g| on the samples implies |h * f| <= |h * g| there; strict off Z_h
/// wherever |f| < |g| strictly.
VerificationReport check_modulus_product(const RegularQuotient& h, const RegularQuotient& f,
                                         const RegularQuotient& g,
                                         std::span<const Quaternion> points, const Config& config);

/// sup |f.A|, sup |A.f| and sup |f^c| over the samples stay below 1.
VerificationReport check_reg_preservation(const RegularQuotient& f, const QuaternionMatrix2& a,
                                          std::span<const Quaternion> points, const Config& config);

using PointFunction = std::function<Quaternion(const Quaternion&)>;

/// Central-difference (d/dx + I d/dy)/2 on random slices; regular iff < 1e-5.
VerificationReport check_slice_regularity(const PointFunction& f, std::size_t sample_count,
                                          const Config& config);

/// Randomized suites. Each runs `config.batches` independent streams.
VerificationReport run_schwarz_pick_suite(const Config& config);
VerificationReport run_zero_case_suite(const Config& config);
VerificationReport run_modulus_product_suite(const Config& config);
VerificationReport run_reg_preservation_suite(const Config& config);
VerificationReport run_slice_regularity_suite(const Config& config);
VerificationReport run_algebra_suite(const Config& config);
VerificationReport run_fractional_suite(const Config& config);
VerificationReport run_geometry_suite(const Config& config);

std::vector<std::string> suite_names();
/// Throws std::out_of_range for an unknown name.
VerificationReport run_suite(const std::string& name, const Config& config);

struct AggregateReport {
  std::uint64_t seed = 0;
  std::vector<VerificationReport> suites;

  bool pass() const;
  nlohmann::json to_json() const;
};

AggregateReport run_all(const Config& config);

}  // namespace srq::verify

#endif  // SRQ_VERIFY_HPP
