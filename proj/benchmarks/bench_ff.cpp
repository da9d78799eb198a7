#include <benchmark/benchmark.h>

#include "saturate/ff.hpp"
#include "saturate/matrix.hpp"

using namespace saturate;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const ff::Field f = ff::Field::create(static_cast<std::uint32_t>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const auto elems = f.elements();
  std::size_t i = 0;
  ff::Elem acc = f.one();
  for (auto _ : state) {
    acc = f.mul(acc, elems[1 + i % (elems.size() - 1)]);
    acc = f.add(acc, elems[i % elems.size()]);
    if (!acc.code) acc = f.one();
    ++i;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_FieldMul)->Args({7, 1})->Args({5, 2})->Args({2, 8})->Args({3, 5});

void BM_MatrixProduct(benchmark::State& state) {
  const ff::Field f = ff::Field::create(5, 2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  matgrp::SquareMatrix a = matgrp::SquareMatrix::identity(f, n);
  matgrp::SquareMatrix b = a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b = b + matgrp::SquareMatrix::unit(f, n, i, j).scaled(f.from_int(i + 2 * j + 1));
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_MatrixProduct)->Arg(2)->Arg(4)->Arg(8);

void BM_CharPoly(benchmark::State& state) {
  const ff::Field f = ff::Field::create(7, 1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  matgrp::SquareMatrix m(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m = m + matgrp::SquareMatrix::unit(f, n, i, j).scaled(f.from_int(3 * i + j * j + 1));
  for (auto _ : state) benchmark::DoNotOptimize(matgrp::charpoly(m));
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
