#include <benchmark/benchmark.h>

#include "icoq/klein.hpp"
#include "icoq/matgroup.hpp"
#include "icoq/singularity.hpp"
#include "icoq/symfunc.hpp"

namespace {

const icoq::KleinPackage& package() {
  static const icoq::KleinPackage k = icoq::klein_construct();
  return k;
}

const icoq::MatGroup& binary() {
  static const icoq::MatGroup g = icoq::binary_icosahedral();
  return g;
}

const icoq::MatGroup& ternary() {
  static const icoq::MatGroup g = icoq::ternary_icosahedral(binary());
  return g;
}

void BM_SkewSquare(benchmark::State& state) {
  const auto& z15 = package().z15;
  for (auto _ : state) benchmark::DoNotOptimize(z15 * z15);
}
BENCHMARK(BM_SkewSquare);

void BM_VandermondeSquare(benchmark::State& state) {
  const auto v = icoq::vandermonde_product(5);
  for (auto _ : state) benchmark::DoNotOptimize(v * v);
}
BENCHMARK(BM_VandermondeSquare);

void BM_SymmetricReduction(benchmark::State& state) {
  const auto v = icoq::vandermonde_product(5);
  const auto square = v * v;
  for (auto _ : state) benchmark::DoNotOptimize(icoq::to_elementary(square));
}
BENCHMARK(BM_SymmetricReduction)->Unit(benchmark::kMillisecond);

void BM_BinaryClosure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(icoq::binary_icosahedral());
}
BENCHMARK(BM_BinaryClosure)->Unit(benchmark::kMillisecond);

void BM_Reynolds(benchmark::State& state) {
  const auto& z2 = package().z2;
  const auto p = z2 * z2;
  for (auto _ : state) benchmark::DoNotOptimize(icoq::reynolds(ternary(), p));
}
BENCHMARK(BM_Reynolds)->Unit(benchmark::kMillisecond);

void BM_LocalIntersection(benchmark::State& state) {
  const auto f = icoq::qparse({"x", "y"}, "y^2 - x^9");
  const auto fx = f.diff("x");
  const auto fy = f.diff("y");
  for (auto _ : state) benchmark::DoNotOptimize(icoq::fulton_intersection(fx, fy));
}
BENCHMARK(BM_LocalIntersection);

}  // namespace
