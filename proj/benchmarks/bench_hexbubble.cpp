#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hexbubble/embedded.hpp"
#include "hexbubble/hexnorm.hpp"
#include "hexbubble/kissing.hpp"
#include "hexbubble/oracle.hpp"
#include "hexbubble/singlebubble.hpp"
#include "hexbubble/solver.hpp"

namespace hb = hexbubble;

namespace {

std::vector<hb::PlanePoint> random_points(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<hb::PlanePoint> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng)};
  return pts;
}

void BM_HexNorm(benchmark::State& state) {
  const auto pts = random_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hb::hex_norm(pts[i++ & 1023]));
  }
}
BENCHMARK(BM_HexNorm);

void BM_Geodesic(benchmark::State& state) {
  const auto pts = random_points(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hb::geodesic_path(pts[i & 1023], pts[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_Geodesic);

void BM_SolveFixedSide(benchmark::State& state) {
  double L = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hb::solve_fixed_side(L, 1.0));
    L = L > 2.5 ? 0.1 : L + 0.01;
  }
}
BENCHMARK(BM_SolveFixedSide);

void BM_P3Minimizer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hb::p3_minimizer(0.5));
}
BENCHMARK(BM_P3Minimizer);

void BM_KissingMinimum(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(hb::kissing_minimum(alpha));
}
BENCHMARK(BM_KissingMinimum)->Arg(50)->Arg(500)->Arg(1000);

void BM_EmbeddedMinimum(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(hb::embedded_minimum(alpha));
}
BENCHMARK(BM_EmbeddedMinimum)->Arg(50)->Arg(500)->Arg(1000);

void BM_DoubleBubblePerimeter(benchmark::State& state) {
  const hb::KissingSolution k = hb::kissing_minimum(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(hb::double_bubble_perimeter(k.geometry_a, k.geometry_b));
}
BENCHMARK(BM_DoubleBubblePerimeter);

void BM_Degree8Roots(benchmark::State& state) {
  const hb::Poly8 p = hb::build_degree8(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(hb::poly_real_roots(p));
}
BENCHMARK(BM_Degree8Roots)->Unit(benchmark::kMillisecond);

void BM_FindAlpha0(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hb::find_alpha0());
}
BENCHMARK(BM_FindAlpha0)->Unit(benchmark::kMillisecond);

void BM_GridRefineKissing(benchmark::State& state) {
  const hb::BoxSpec box({1e-3, 1e-3}, {3.0, 3.0}, nullptr, {1.0, 1.0});
  const hb::Objective f = [](std::span<const double> x) { return hb::kissing_perimeter(x[0], x[1], 0.5); };
  for (auto _ : state) benchmark::DoNotOptimize(hb::grid_refine_min(f, box, 200, 60));
}
BENCHMARK(BM_GridRefineKissing)->Unit(benchmark::kMillisecond);

void BM_Sweep100(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hb::sweep(0.01, 1.0, 100));
}
BENCHMARK(BM_Sweep100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
