// Microbenchmarks for the hot paths: the scalar kernel, the exact bi-tensor
// assembly, and the quadratures behind the stress pipeline.

#include <benchmark/benchmark.h>

#include "fisheye/em_green.hpp"
#include "fisheye/profile.hpp"
#include "fisheye/scalar_green.hpp"
#include "fisheye/vacuum_stress.hpp"

namespace {

using namespace fisheye;

void BM_scalar_D(benchmark::State& state) {
  double kappa = 0.0;
  for (auto _ : state) {
    kappa += 1e-6;  // defeat value caching
    benchmark::DoNotOptimize(scalar_D({0.75, kappa}));
  }
}
BENCHMARK(BM_scalar_D);

void BM_scalar_derivatives(benchmark::State& state) {
  double kappa = 0.0;
  for (auto _ : state) {
    kappa += 1e-6;
    benchmark::DoNotOptimize(dD_dr({0.75, kappa}));
    benchmark::DoNotOptimize(d2D_dr2({0.75, kappa}));
  }
}
BENCHMARK(BM_scalar_derivatives);

void BM_green_free(benchmark::State& state) {
  const Point3 r{0.3, 0.1, -0.2}, r0{-0.1, 0.25, 0.1};
  double kappa = 1.0;
  for (auto _ : state) {
    kappa += 1e-9;
    benchmark::DoNotOptimize(green_free(r, r0, kappa));
  }
}
BENCHMARK(BM_green_free);

void BM_green_reflected_coincident(benchmark::State& state) {
  const Point3 r{0.3, 0.4, 0.0};
  double kappa = 1.0;
  for (auto _ : state) {
    kappa += 1e-9;
    benchmark::DoNotOptimize(green_reflected(r, r, kappa));
  }
}
BENCHMARK(BM_green_reflected_coincident);

void BM_integral_D_quad(benchmark::State& state) {
  const double rp = std::pow(10.0, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integral_D_quad(rp).value);
}
BENCHMARK(BM_integral_D_quad)->DenseRange(-1, 1);  // r' = 0.1, 1, 10

void BM_tau_quadrature_on_axis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tau_regularized_quad(0.5).m);
}
BENCHMARK(BM_tau_quadrature_on_axis);

void BM_tau_full_tensor(benchmark::State& state) {
  const Point3 p{0.3, 0.4, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(tau_full_tensor(p).m);
}
BENCHMARK(BM_tau_full_tensor);

void BM_profile_200(benchmark::State& state) {
  const MediumParams params;
  for (auto _ : state) benchmark::DoNotOptimize(make_profile(params, 0.0, 0.99, 200));
}
BENCHMARK(BM_profile_200);

}  // namespace

BENCHMARK_MAIN();
