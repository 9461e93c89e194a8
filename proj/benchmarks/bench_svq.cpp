#include <svq/twist.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace
{

std::vector<svq::Generator> random_word(std::mt19937_64 &rng, std::size_t length)
{
    const auto grid = svq::generator_grid(3);
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    std::vector<svq::Generator> w;
    for (std::size_t i = 0; i < length; ++i) {
        w.push_back(grid[pick(rng)]);
    }
    return w;
}

void BM_NormalizeCold(benchmark::State &state)
{
    std::mt19937_64 rng(1);
    const auto w = random_word(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        svq::clear_normal_form_cache();
        benchmark::DoNotOptimize(svq::normalize(w));
    }
}
BENCHMARK(BM_NormalizeCold)->DenseRange(2, 6, 2);

void BM_SeriesProduct(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    const svq::TwistData d = svq::build_twist(svq::TwistCase(1, 1), order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(d.scriptF * d.F);
    }
}
BENCHMARK(BM_SeriesProduct)->DenseRange(2, 6, 2);

void BM_BuildTwist(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(svq::build_twist(svq::TwistCase(2, 1), order));
    }
}
BENCHMARK(BM_BuildTwist)->DenseRange(2, 6, 2);

void BM_DeltaTwisted(benchmark::State &state)
{
    const svq::TwistData d = svq::build_twist(svq::TwistCase(2, 1), static_cast<int>(state.range(0)));
    const svq::UEAElement x = svq::uea(svq::Generator::L(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(svq::delta_twisted(x, d));
    }
}
BENCHMARK(BM_DeltaTwisted)->DenseRange(2, 6, 2);

void BM_TwistedHopfDefects(benchmark::State &state)
{
    const svq::TwistData d = svq::build_twist(svq::TwistCase(3, 1), static_cast<int>(state.range(0)));
    const svq::UEAElement x = svq::uea(svq::Generator::Y(svq::Rational(-1, 2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(svq::twisted_hopf_defects(x, d));
    }
}
BENCHMARK(BM_TwistedHopfDefects)->DenseRange(2, 4, 1);

} // namespace

BENCHMARK_MAIN();
