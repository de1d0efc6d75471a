#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ifc/baire.hpp"
#include "ifc/classify.hpp"
#include "ifc/metric.hpp"
#include "ifc/oracle.hpp"

namespace {

using ifc::ExtInterval;
using ifc::ExtReal;
using ifc::Piece;
using ifc::PieceExpr;
using ifc::PiecewiseIntervalFn;

// Sawtooth-like function with n breakpoints on (0, n + 1) mixing affine and sigmoid pieces.
PiecewiseIntervalFn sawtooth(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> bps;
  std::vector<Piece> pieces;
  std::vector<ExtInterval> values;
  for (int i = 0; i <= n; ++i) {
    const auto e = i % 3 == 0 ? PieceExpr::sigmoid(1.0 + (i % 4), u(rng), u(rng)) : PieceExpr::affine(u(rng), u(rng));
    pieces.push_back({e, i % 2 == 0 ? e : PieceExpr::constant(ExtReal::pos_inf())});
    if (i < n) {
      bps.push_back(i + 1.0);
      values.emplace_back(-2.0 + u(rng), 2.0 + u(rng));
    }
  }
  return PiecewiseIntervalFn({0.0, n + 1.0}, bps, pieces, values);
}

void BM_GraphCompletion(benchmark::State& state) {
  const auto f = sawtooth(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ifc::graph_completion(f));
}
BENCHMARK(BM_GraphCompletion)->Arg(8)->Arg(64)->Arg(256);

void BM_NormalizeG(benchmark::State& state) {
  const auto f = sawtooth(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ifc::normalize_G(f));
}
BENCHMARK(BM_NormalizeG)->Arg(8)->Arg(64)->Arg(256);

void BM_PointwiseMax(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<PiecewiseIntervalFn> fs{sawtooth(n, 3), sawtooth(n, 4), sawtooth(n, 5)};
  for (auto _ : state) benchmark::DoNotOptimize(ifc::pointwise_max(fs));
}
BENCHMARK(BM_PointwiseMax)->Arg(8)->Arg(64);

void BM_GraphDistance(benchmark::State& state) {
  const ifc::Domain d{-2.0, 2.0};
  const auto f = PiecewiseIntervalFn::point(d, PieceExpr::sigmoid(2.0));
  const auto g = PiecewiseIntervalFn::point(d, PieceExpr::affine(0.5, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(ifc::graph_distance(f, g, {-1.5, 1.5}, 1e-6));
}
BENCHMARK(BM_GraphDistance);

void BM_Crosscheck(benchmark::State& state) {
  const ifc::Domain d{-3.0, 3.0};
  const auto f = PiecewiseIntervalFn::point(d, PieceExpr::sigmoid(1.0));
  for (auto _ : state) benchmark::DoNotOptimize(ifc::crosscheck(f, {-2.0, 2.0}, 1e-3, 1e-2));
}
BENCHMARK(BM_Crosscheck);

}  // namespace
BENCHMARK_MAIN();
