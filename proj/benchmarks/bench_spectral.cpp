#include <benchmark/benchmark.h>

#include "aqg/dynamics.hpp"
#include "aqg/norms.hpp"
#include "aqg/operators.hpp"
#include "aqg/random_field.hpp"
#include "aqg/spectral_field.hpp"

namespace {

using namespace aqg;

SpectralField bench_field(int n, std::uint64_t seed = 1) {
  RandomFieldSpec spec;
  spec.seed = seed;
  spec.band_limit = n / 4;
  return random_field(GridSpec(n, n), spec);
}

void bm_transform_roundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GridSpec grid(n, n);
  auto f = bench_field(n);
  for (auto _ : state) {
    auto phys = inverse_transform(f);
    benchmark::DoNotOptimize(forward_transform(grid, phys));
  }
}
BENCHMARK(bm_transform_roundtrip)->Arg(64)->Arg(128)->Arg(256);

void bm_directional_derivative(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = bench_field(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(frac_deriv(f, Axis::x1, 0.75));
}
BENCHMARK(bm_directional_derivative)->Arg(64)->Arg(128)->Arg(256);

void bm_riesz_velocity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = bench_field(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(riesz_perp(f));
}
BENCHMARK(bm_riesz_velocity)->Arg(64)->Arg(128)->Arg(256);

void bm_dealiased_product(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = bench_field(n, 1);
  auto g = bench_field(n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(dealiased_product(f, g));
}
BENCHMARK(bm_dealiased_product)->Arg(64)->Arg(128)->Arg(256);

void bm_advection_term(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = bench_field(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(nonlinear_term(f));
}
BENCHMARK(bm_advection_term)->Arg(64)->Arg(128)->Arg(256);

void bm_full_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  AqgParams params{0.5, 0.75, 1.0, 1.0};
  TimeStepper stepper;
  stepper.dt = 0.005;
  SimState s{apply_dealias_mask(bench_field(n))};
  for (auto _ : state) {
    s = step(s, params, stepper);
    benchmark::DoNotOptimize(s.theta);
  }
}
BENCHMARK(bm_full_step)->Arg(64)->Arg(128)->Arg(256);

void bm_sobolev_norm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = bench_field(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(sobolev_norm(f, 1.5));
}
BENCHMARK(bm_sobolev_norm)->Arg(64)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
