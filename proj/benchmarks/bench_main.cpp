#include <benchmark/benchmark.h>

#include <vector>

#include "bpapprox/critical_points.hpp"
#include "bpapprox/discrepancy.hpp"
#include "bpapprox/hermitian.hpp"
#include "bpapprox/kernels.hpp"
#include "bpapprox/rng.hpp"
#include "bpapprox/trig_poly.hpp"

using namespace bpapprox;

static void BM_BuildExtremal(benchmark::State& state) {
  unsigned n = state.range(0), N = state.range(1);
  for (auto _ : state) {
    TrigPoly t = build_extremal(n, N, ApproxKind::kMinorant);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_BuildExtremal)->Args({0, 15})->Args({4, 15})->Args({8, 63});

static void BM_BuildBestL1(benchmark::State& state) {
  unsigned n = state.range(0), N = state.range(1);
  for (auto _ : state) {
    TrigPoly t = build_best_l1(n, N);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_BuildBestL1)->Args({0, 15})->Args({4, 15});

static void BM_Dhat(benchmark::State& state) {
  unsigned n = state.range(0);
  double delta = 16.0;
  double t = state.range(1) / 16.0 * delta;
  for (auto _ : state) benchmark::DoNotOptimize(dhat(n, t, delta, 0.3));
}
BENCHMARK(BM_Dhat)->Args({2, 4})->Args({2, 13})->Args({8, 13});

static void BM_EvalD(benchmark::State& state) {
  double x = static_cast<double>(state.range(0));
  ShiftTable sh = shifts(3);
  for (auto _ : state) benchmark::DoNotOptimize(eval_d(3, x + 0.37, 4.0, sh.beta));
}
BENCHMARK(BM_EvalD)->Arg(1)->Arg(100)->Arg(5000);

static void BM_EvalTrig(benchmark::State& state) {
  TrigPoly t = build_extremal(3, state.range(0), ApproxKind::kMajorant);
  double x = 0.123456;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.eval(x));
    x += 1e-6;
  }
}
BENCHMARK(BM_EvalTrig)->Arg(15)->Arg(63);

static void BM_SupViolation(benchmark::State& state) {
  TrigPoly t = build_extremal(2, 15, ApproxKind::kMinorant);
  for (auto _ : state)
    benchmark::DoNotOptimize(sup_violation(t, 2, ApproxKind::kMinorant, state.range(0)));
}
BENCHMARK(BM_SupViolation)->Arg(4096);

static void BM_EtBound(benchmark::State& state) {
  SplitMix64 rng(1);
  std::vector<double> pts;
  for (int i = 0; i < 20; ++i) pts.push_back(rng.next_double());
  PointSet ps(pts);
  for (auto _ : state) benchmark::DoNotOptimize(et_bound(ps, 1, state.range(0)));
}
BENCHMARK(BM_EtBound)->Arg(4)->Arg(16);

static void BM_BruteDiscrepancy(benchmark::State& state) {
  SplitMix64 rng(2);
  std::vector<double> pts;
  for (int i = 0; i < 20; ++i) pts.push_back(rng.next_double());
  PointSet ps(pts);
  for (auto _ : state) benchmark::DoNotOptimize(brute_discrepancy(ps, 1, state.range(0)));
}
BENCHMARK(BM_BruteDiscrepancy)->Arg(20000);

static void BM_HurwitzZeta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta(state.range(0), 0.37));
}
BENCHMARK(BM_HurwitzZeta)->Arg(2)->Arg(8);

static void BM_FormValue(benchmark::State& state) {
  SplitMix64 rng(3);
  std::vector<double> nodes;
  std::vector<std::complex<double>> ws;
  for (int r = 0; r < 32; ++r) {
    nodes.push_back(r / 32.0 + (rng.next_double() - 0.5) / 64.0);
    ws.push_back({rng.next_double(), rng.next_double()});
  }
  FormInput fi(nodes, ws, state.range(0), PeriodicKernel::kQ);
  for (auto _ : state) benchmark::DoNotOptimize(form_value(fi));
}
BENCHMARK(BM_FormValue)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
