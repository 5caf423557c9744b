#include <benchmark/benchmark.h>

#include "stratolink/links.hpp"
#include "stratolink/montecarlo.hpp"
#include "stratolink/units.hpp"

namespace {

using namespace stratolink;

void BM_MonteCarloTrial(benchmark::State& state)
{
    const Scenario s;
    const LinkSet links = prepare_links(s, db_to_linear(10.0));
    const TrialRandom random(s.seed, 0);
    const auto strategy = state.range(0) == 1 ? Strategy::MinZenith : Strategy::MaxSnr;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_trial(links, strategy, s.gamma_th_linear(), random, trial++));
    }
}
BENCHMARK(BM_MonteCarloTrial)->Arg(1)->Arg(2);

void BM_ClosedFormOutage(benchmark::State& state)
{
    const Scenario s;
    const LinkSet links = prepare_links(s, db_to_linear(10.0));
    const auto strategy = state.range(0) == 1 ? Strategy::MinZenith : Strategy::MaxSnr;
    for (auto _ : state) {
        benchmark::DoNotOptimize(analytic_outage(links, strategy, s.gamma_th_linear()));
    }
}
BENCHMARK(BM_ClosedFormOutage)->Arg(1)->Arg(2);

void BM_PrepareLinks(benchmark::State& state)
{
    const Scenario s;
    for (auto _ : state) {
        benchmark::DoNotOptimize(prepare_links(s));
    }
}
BENCHMARK(BM_PrepareLinks);

}  // namespace
