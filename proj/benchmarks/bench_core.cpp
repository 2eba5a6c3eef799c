// Microbenchmarks for the hot paths behind the trace computation: field
// multiplication, character evaluation, single-fiber counts, profile
// construction, and the full trace at the performance-contract size.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "vgt/counting.hpp"
#include "vgt/ff.hpp"
#include "vgt/fibration.hpp"
#include "vgt/trace.hpp"

namespace {

using vgt::Field;
using vgt::Fq;
using vgt::PrimeModulus;
using vgt::ProjPoint;

void bm_field_mul_quadratic(benchmark::State& state) {
  Field f = Field::quadratic(PrimeModulus(101));
  Fq x = f.make(17, 39);
  Fq y = f.make(58, 91);
  for (auto _ : state) {
    x = f.mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(bm_field_mul_quadratic);

void bm_quad_char(benchmark::State& state) {
  Field f = Field::quadratic(PrimeModulus(101));
  Fq x = f.make(17, 39);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.quad_char(x));
  }
}
BENCHMARK(bm_quad_char);

void bm_char_table_build(benchmark::State& state) {
  Field f = Field::quadratic(PrimeModulus(static_cast<uint64_t>(state.range(0))));
  for (auto _ : state) {
    vgt::QuadCharTable chi(f);
    benchmark::DoNotOptimize(chi.at_index(1));
  }
}
BENCHMARK(bm_char_table_build)->Arg(41)->Arg(101);

void bm_fiber_count(benchmark::State& state) {
  Field f = Field::quadratic(PrimeModulus(101));
  vgt::QuadCharTable chi(f);
  Fq a = f.from_int(2);
  ProjPoint t = ProjPoint::finite(f.make(3, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vgt::fiber_count_charsum(f, a, t, &chi).n);
  }
}
BENCHMARK(bm_fiber_count);

void bm_profile_build(benchmark::State& state) {
  Field f = Field::quadratic(PrimeModulus(static_cast<uint64_t>(state.range(0))));
  for (auto _ : state) {
    auto prof = vgt::MultiplicityProfile::compute(f);
    benchmark::DoNotOptimize(prof.sum());
  }
}
BENCHMARK(bm_profile_build)->Arg(41)->Arg(101);

void bm_trace(benchmark::State& state) {
  vgt::SurfaceParam param{vgt::Rational(2)};
  Field f = Field::quadratic(PrimeModulus(static_cast<uint64_t>(state.range(0))));
  auto prof = vgt::MultiplicityProfile::compute(f);
  vgt::QuadCharTable chi(f);
  vgt::TraceOptions opt;
  opt.profile = &prof;
  opt.chi = &chi;
  opt.with_breakdown = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vgt::frobenius_trace(param, f, opt).trace);
  }
}
BENCHMARK(bm_trace)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_trace)->Arg(101)->Iterations(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
