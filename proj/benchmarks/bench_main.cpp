#include <benchmark/benchmark.h>

#include "tpb/analyzer.hpp"
#include "tpb/fourier.hpp"
#include "tpb/linalg.hpp"

namespace {

void BM_FourierCoefficients(benchmark::State& state) {
    const auto g = tpb::parse_symbol("(1-z)^-0.25 * (1+z)^0.5 + 2*z");
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tpb::fourier_coefficients(g, degree));
}
BENCHMARK(BM_FourierCoefficients)->Arg(256)->Arg(1024)->Arg(4096);

void BM_ProductSection(benchmark::State& state) {
    const auto u = tpb::parse_symbol("(1-z)^-1");
    const tpb::L2Symbol v(tpb::parse_symbol("1-z"));
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tpb::product_section(u, v, N));
}
BENCHMARK(BM_ProductSection)->Arg(32)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SectionNorm(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto A = tpb::product_section(tpb::parse_symbol("(1-z)^-1"), tpb::L2Symbol(tpb::parse_symbol("1")), N);
    for (auto _ : state) benchmark::DoNotOptimize(tpb::section_norm(A));
}
BENCHMARK(BM_SectionNorm)->Arg(32)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SectionNormClustered(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto A = tpb::product_section(tpb::parse_symbol("(1-z)^-0.25"), tpb::L2Symbol(tpb::parse_symbol("(1-z)^0.25")), N);
    for (auto _ : state) benchmark::DoNotOptimize(tpb::section_norm(A));
}
BENCHMARK(BM_SectionNormClustered)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
