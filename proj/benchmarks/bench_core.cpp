#include <benchmark/benchmark.h>

#include <random>

#include "cesaro2/cesaro2.hpp"

using namespace cesaro2;

namespace {

Matrix<Rational> random_rational_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    return Matrix<Rational>(n, n, [&](std::size_t, std::size_t) { return Rational(num(eng), den(eng)); });
}

void BM_bareiss_det(benchmark::State& state) {
    const auto m = random_rational_matrix(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(bareiss_det(m));
}
BENCHMARK(BM_bareiss_det)->Arg(8)->Arg(16);

void BM_conjecture_minors_25(benchmark::State& state) {
    const Rational a(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(conjecture_minors(a, 25));
}
BENCHMARK(BM_conjecture_minors_25);

void BM_mqm_check_n25(benchmark::State& state) {
    const Rational a(1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(check_mqm(a, 25));
}
BENCHMARK(BM_mqm_check_n25);

void BM_mqm_symbolic_n8(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_mqm_symbolic(8));
}
BENCHMARK(BM_mqm_symbolic_n8);

void BM_bm_check_n15(benchmark::State& state) {
    const Rational a(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(check_bm(a, 15));
}
BENCHMARK(BM_bm_check_n15);

void BM_telescope_witness(benchmark::State& state) {
    const Rational a(5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(bm_lower_tail_witness(a, 7L, 3L));
}
BENCHMARK(BM_telescope_witness);

void BM_section_det_polynomial(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(section_det_polynomial(n));
}
BENCHMARK(BM_section_det_polynomial)->Arg(2)->Arg(3);

void BM_finite_section_pb(benchmark::State& state) {
    const OperatorSpec spec(OperatorKind::pB, Rational(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(finite_section(spec, 25));
}
BENCHMARK(BM_finite_section_pb);

}  // namespace

BENCHMARK_MAIN();
