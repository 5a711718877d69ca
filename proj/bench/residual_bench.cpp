// Parallel sweep vs the serial reference on realistic residual workloads.
// Both paths aggregate in index order, so their outputs agree exactly; the
// interesting number is the speedup on jet-heavy evaluators.

#include <benchmark/benchmark.h>

#include <vector>

#include "heavenlift/residuals.hpp"
#include "heavenlift/rng.hpp"
#include "heavenlift/solutions.hpp"

using namespace heavenlift;

namespace {

std::vector<Point4> helmholtz_cloud(int count) {
  const Point4Box box{{{-0.3, 0.3}, {-0.3, 0.3}, {-0.3, 0.3}, {-0.3, 0.3}}};
  return sample_box(CounterRng{301}, box, count);
}

FieldEvaluator helmholtz_field() {
  return helmholtz_lift(HelmholtzLiftParams{
      {{cplx(1.25, 0.0), cplx(0.8, 0.0), cplx(0.15, 0.0)},
       {cplx(1.0, 0.0), cplx(0.3, 0.2), cplx(-0.1, 0.4)}},
      0.0});
}

std::vector<Point4> bf_cloud(int count) {
  const Point4Box box{
      {{0.8, 1.5}, {-0.35, 0.35}, {0.45, 0.95}, {-0.25, 0.25}}};
  return sample_box(CounterRng{302}, box, count);
}

FieldEvaluator bf_field() {
  BFLiftParams params;
  params.variant = BFVariant::C;
  params.b = HolomorphicPoly{{cplx(0.1, 0.0), cplx(1.0, 0.0), cplx(0.0, 0.2)}};
  params.r = RealPoly{{0.3, -0.2, 0.1}};
  params.k = RealPoly{{0.2, 0.4}};
  return bf_lift(params);
}

void BM_sweep_duality_parallel(benchmark::State& state) {
  const FieldEvaluator v = helmholtz_field();
  const auto pts = helmholtz_cloud(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = sweep(EquationId::CMA_LEGENDRE, v, pts);
    benchmark::DoNotOptimize(r.max_normalized);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(pts.size()));
}

void BM_sweep_duality_serial(benchmark::State& state) {
  const FieldEvaluator v = helmholtz_field();
  const auto pts = helmholtz_cloud(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = sweep_serial(EquationId::CMA_LEGENDRE, v, pts);
    benchmark::DoNotOptimize(r.max_normalized);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(pts.size()));
}

void BM_sweep_rotation_parallel(benchmark::State& state) {
  const FieldEvaluator psi = bf_field();
  const auto pts = bf_cloud(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = sweep(EquationId::HCMA_LEG_ROT, psi, pts);
    benchmark::DoNotOptimize(r.max_normalized);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(pts.size()));
}

void BM_sweep_rotation_serial(benchmark::State& state) {
  const FieldEvaluator psi = bf_field();
  const auto pts = bf_cloud(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = sweep_serial(EquationId::HCMA_LEG_ROT, psi, pts);
    benchmark::DoNotOptimize(r.max_normalized);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(pts.size()));
}

}  // namespace

BENCHMARK(BM_sweep_duality_parallel)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_sweep_duality_serial)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_sweep_rotation_parallel)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_sweep_rotation_serial)->Arg(64)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
