#include <benchmark/benchmark.h>

#include "saturate/envelope.hpp"
#include "saturate/group.hpp"

using namespace saturate;

namespace {

std::vector<matgrp::SquareMatrix> root_generators(const ff::Field& f) {
  const auto id = matgrp::SquareMatrix::identity(f, 2);
  return {id + matgrp::SquareMatrix::unit(f, 2, 0, 1), id + matgrp::SquareMatrix::unit(f, 2, 1, 0)};
}

void BM_ClosureSL2(benchmark::State& state) {
  const ff::Field f = ff::Field::create(static_cast<std::uint32_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const auto gens = root_generators(f);
  std::size_t order = 0;
  for (auto _ : state) order = matgrp::group_closure(gens).order();
  state.counters["order"] = static_cast<double>(order);
}
BENCHMARK(BM_ClosureSL2)->Args({7, 1})->Args({13, 1})->Args({5, 2})->Args({31, 1})->Unit(benchmark::kMillisecond);

void BM_ClosureGL3F3(benchmark::State& state) {
  const ff::Field f = ff::Field::prime(3);
  const auto gens = matgrp::general_linear_generators(f, 3);
  for (auto _ : state) benchmark::DoNotOptimize(matgrp::group_closure(gens).order());
}
BENCHMARK(BM_ClosureGL3F3)->Unit(benchmark::kMillisecond);

void BM_NoriEnvelope(benchmark::State& state) {
  const ff::Field f = ff::Field::prime(static_cast<std::uint32_t>(state.range(0)));
  const auto g = matgrp::group_closure(root_generators(f));
  for (auto _ : state) benchmark::DoNotOptimize(envelope::nori_envelope(g).lie.dimension());
}
BENCHMARK(BM_NoriEnvelope)->Arg(5)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_SaturationCheck(benchmark::State& state) {
  const ff::Field f = ff::Field::create(5, 2);
  const auto g = matgrp::group_closure(root_generators(f));
  for (auto _ : state) benchmark::DoNotOptimize(envelope::is_saturated_points(g));
}
BENCHMARK(BM_SaturationCheck)->Unit(benchmark::kMillisecond);

}  // namespace
