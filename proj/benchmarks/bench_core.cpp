#include <benchmark/benchmark.h>

#include "amwp/catalog.hpp"
#include "amwp/curvature.hpp"
#include "amwp/identities.hpp"
#include "amwp/metric.hpp"
#include "amwp/verify.hpp"

using namespace amwp;

namespace {

CubicForm stu() { return catalog_get("STU").cubic.value(); }

void BM_MPolyMul(benchmark::State& state) {
  Rng rng(1);
  MPoly f = stu().polynomial();
  MPoly a = f.pow(3);
  MPoly b = f.pow(2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MPolyMul);

void BM_PolyGcd(benchmark::State& state) {
  MPoly f = stu().polynomial();
  MPoly h = hessian_data(stu()).H;
  MPoly a = f.pow(2) * h;
  MPoly b = f * h * h;
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd);

void BM_AmwpMetric(benchmark::State& state) {
  CubicForm f = stu();
  for (auto _ : state) benchmark::DoNotOptimize(amwp_metric(f));
}
BENCHMARK(BM_AmwpMetric);

void BM_CurvatureField(benchmark::State& state) {
  MetricField m = amwp_metric(stu());
  for (auto _ : state) benchmark::DoNotOptimize(curvature_field(m));
}
BENCHMARK(BM_CurvatureField)->Unit(benchmark::kMillisecond);

void BM_CurvatureAt(benchmark::State& state) {
  MetricField m = amwp_metric(stu());
  std::vector<BigRat> y = {BigRat(3, 2), BigRat(1), BigRat(2)};
  for (auto _ : state) benchmark::DoNotOptimize(curvature_at(m, y));
}
BENCHMARK(BM_CurvatureAt);

void BM_CurvatureIdentityRandomCubic(benchmark::State& state) {
  Rng rng(7);
  CubicForm f = random_integer_cubic(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(curvature_identity_holds(f.polynomial(), 3));
}
BENCHMARK(BM_CurvatureIdentityRandomCubic)->Unit(benchmark::kMillisecond);

void BM_SInvariant(benchmark::State& state) {
  CubicForm f = stu();
  for (auto _ : state) benchmark::DoNotOptimize(s_invariant(f));
}
BENCHMARK(BM_SInvariant);

void BM_ScalarCurvatureAt(benchmark::State& state) {
  CubicForm f = stu();
  std::vector<BigRat> y = {BigRat(100), BigRat(10), BigRat(10)};
  for (auto _ : state) benchmark::DoNotOptimize(scalar_curvature_at(f, y));
}
BENCHMARK(BM_ScalarCurvatureAt);

}  // namespace

BENCHMARK_MAIN();
