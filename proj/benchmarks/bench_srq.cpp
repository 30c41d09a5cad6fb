#include <benchmark/benchmark.h>

#include <vector>

#include "srq/geometry.hpp"
#include "srq/random.hpp"
#include "srq/rational.hpp"
#include "srq/verify.hpp"

namespace {

srq::RegularPolynomial random_polynomial(srq::Rng& rng, int degree) {
  std::vector<srq::Quaternion> a(static_cast<std::size_t>(degree) + 1);
  for (auto& c : a) c = rng.in_cube(1.0);
  return srq::RegularPolynomial(std::move(a));
}

std::vector<srq::Quaternion> points(srq::Rng& rng, std::size_t count) {
  std::vector<srq::Quaternion> out(count);
  for (auto& q : out) q = rng.in_ball(0.95);
  return out;
}

void BM_StarProduct(benchmark::State& state) {
  srq::Rng rng(1);
  const int degree = static_cast<int>(state.range(0));
  const auto f = random_polynomial(rng, degree);
  const auto g = random_polynomial(rng, degree);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
  state.SetComplexityN(degree);
}
BENCHMARK(BM_StarProduct)->RangeMultiplier(2)->Range(2, 256)->Complexity(benchmark::oNSquared);

void BM_PolynomialEvaluate(benchmark::State& state) {
  srq::Rng rng(2);
  const auto f = random_polynomial(rng, static_cast<int>(state.range(0)));
  const auto pts = points(rng, 64);
  std::size_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(srq::evaluate(f, pts[n++ & 63]));
}
BENCHMARK(BM_PolynomialEvaluate)->Arg(4)->Arg(60);

void BM_QuotientDirect(benchmark::State& state) {
  srq::Rng rng(3);
  const srq::RegularQuotient r(random_polynomial(rng, 4), random_polynomial(rng, 4));
  const auto pts = points(rng, 64);
  std::size_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(srq::eval_left_quotient(r, pts[n++ & 63]));
}
BENCHMARK(BM_QuotientDirect);

void BM_QuotientTransform(benchmark::State& state) {
  srq::Rng rng(3);
  const srq::RegularQuotient r(random_polynomial(rng, 4), random_polynomial(rng, 4));
  const auto pts = points(rng, 64);
  std::size_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(srq::eval_via_transform(r, pts[n++ & 63]));
}
BENCHMARK(BM_QuotientTransform);

void BM_SphereZeros(benchmark::State& state) {
  srq::Rng rng(4);
  const auto f = random_polynomial(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(srq::sphere_zero_set(f));
}
BENCHMARK(BM_SphereZeros)->Arg(2)->Arg(4)->Arg(8);

void BM_MoebiusExpansion(benchmark::State& state) {
  const srq::Quaternion q0(0.1, 0.2, -0.3, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(srq::spherical_expansion(srq::moebius_power_series(q0, 60), q0, 2));
  }
}
BENCHMARK(BM_MoebiusExpansion);

void BM_VerifySuite(benchmark::State& state, const char* suite) {
  srq::verify::Config config;
  config.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(srq::verify::run_suite(suite, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_VerifySuite, schwarz_pick, "schwarz-pick")->Arg(1000)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifySuite, algebra, "algebra")->Arg(1000)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
