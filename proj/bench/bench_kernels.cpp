#include <benchmark/benchmark.h>

#include "singulant/homalg.hpp"
#include "singulant/jacobian.hpp"

using namespace singulant;

namespace {

// 4 x 6 Jacobian of generic quadrics and cubics: 15 maximal minors.
const RingPresentation& minors_ring()
{
    static const auto R = RingPresentation::from_text(
        Field::rationals(), {"a", "b", "c", "d", "e", "f"},
        {"a^2 + b*c - d*e + f^2", "a*b*c + d^3 - e*f^2", "b^2*d - c*e + a*f", "c^3 + a*d*f - b*e^2"});
    return R;
}

const RingPresentation& witness_ring()
{
    static const auto R = RingPresentation::from_text(Field::rationals(), {"x", "y"}, {"x^2", "x*y"});
    return R;
}

void BM_MinorsSerial(benchmark::State& state)
{
    auto J = jacobian_matrix(minors_ring());
    for (auto _ : state)
        benchmark::DoNotOptimize(minors_serial(J, state.range(0)));
}

void BM_MinorsParallel(benchmark::State& state)
{
    auto J = jacobian_matrix(minors_ring());
    for (auto _ : state)
        benchmark::DoNotOptimize(minors(J, state.range(0)));
}

void BM_WitnessSerial(benchmark::State& state)
{
    const auto& R = witness_ring();
    auto corpus = default_corpus(R, 42);
    auto x = R.variable(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ca_witness_serial(x, state.range(0), corpus));
}

void BM_WitnessParallel(benchmark::State& state)
{
    const auto& R = witness_ring();
    auto corpus = default_corpus(R, 42);
    auto x = R.variable(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ca_witness(x, state.range(0), corpus));
}

}  // namespace

BENCHMARK(BM_MinorsSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorsParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessSerial)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessParallel)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
