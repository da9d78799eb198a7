#include <benchmark/benchmark.h>

#include "saturate/frobenius.hpp"

using namespace saturate::frobenius;

namespace {

// T^2 - a T + q with |a| <= 2 sqrt(q), raised to the k-th power.
ExactPolynomial weil_power(std::int64_t a, std::int64_t q, int k) {
  ExactPolynomial p = ExactPolynomial::from_ints({q, -a, 1});
  ExactPolynomial out = ExactPolynomial::from_ints({1});
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

void BM_PurityQuadratic(benchmark::State& state) {
  const auto p = ExactPolynomial::from_ints({125, -3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(purity_check(p, 125, 1).pass);
}
BENCHMARK(BM_PurityQuadratic);

void BM_PurityProduct(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  ExactPolynomial p = ExactPolynomial::from_ints({1});
  for (int i = 0; i < k; ++i) p = p * ExactPolynomial::from_ints({625, -(7 * i % 50) + 25, 1});
  for (auto _ : state) benchmark::DoNotOptimize(purity_check(p, 625, 1).pass);
}
BENCHMARK(BM_PurityProduct)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_PurityRepeatedRoots(benchmark::State& state) {
  const auto p = weil_power(4, 25, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(purity_check(p, 25, 1).pass);
}
BENCHMARK(BM_PurityRepeatedRoots)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_PurityOverQi(benchmark::State& state) {
  const NumberField k = NumberField::from_minpoly({1, 0, 1});
  // (T - (2+i)) over Q(i): weight 1 for q = 5.
  const ExactPolynomial p(k, {Coeff{Rational(-2), Rational(-1)}, Coeff{Rational(1), Rational(0)}});
  for (auto _ : state) benchmark::DoNotOptimize(purity_check(p, 5, 1).pass);
}
BENCHMARK(BM_PurityOverQi);

}  // namespace
