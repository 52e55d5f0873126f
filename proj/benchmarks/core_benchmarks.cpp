#include <benchmark/benchmark.h>

#include "locktrials/analytic.hpp"
#include "locktrials/exact_dist.hpp"
#include "locktrials/montecarlo.hpp"
#include "locktrials/problem.hpp"
#include "locktrials/strategies.hpp"

namespace lt = locktrials;

namespace {

void BM_ShuffleKeyring(benchmark::State& state) {
    lt::RngStream rng(1);
    const auto keys = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lt::random_keyring(keys, rng));
    }
}
BENCHMARK(BM_ShuffleKeyring)->Arg(8)->Arg(64)->Arg(512);

void BM_PlayLockFirst(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const lt::Problem problem{n, 2 * n};
    lt::RngStream rng(2);
    const lt::Keyring ring = lt::random_keyring(problem.keys, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lt::play_lock_first(problem, ring));
    }
}
BENCHMARK(BM_PlayLockFirst)->Arg(10)->Arg(50);

void BM_PlayKeyFirst(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const lt::Problem problem{n, 2 * n};
    lt::RngStream rng(2);
    const lt::Keyring ring = lt::random_keyring(problem.keys, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lt::play_key_first(problem, ring));
    }
}
BENCHMARK(BM_PlayKeyFirst)->Arg(10)->Arg(50);

void BM_PlayTotallyRandom(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const lt::Problem problem{n, n};
    lt::RngStream rng(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lt::play_totally_random(problem, rng));
    }
}
BENCHMARK(BM_PlayTotallyRandom)->Arg(8)->Arg(32);

void BM_ExactPmfOrdered(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const lt::Problem problem{n, n};
    for (auto _ : state) {
        benchmark::DoNotOptimize(lt::exact_pmf_ordered(problem));
    }
}
BENCHMARK(BM_ExactPmfOrdered)->Arg(10)->Arg(20)->Arg(40);

void BM_ExactPmfRandom(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const lt::Problem problem{n, n};
    for (auto _ : state) {
        benchmark::DoNotOptimize(lt::exact_pmf_random(problem));
    }
}
BENCHMARK(BM_ExactPmfRandom)->Arg(4)->Arg(8);

void BM_BruteForcePmf(benchmark::State& state) {
    const auto keys = static_cast<std::uint32_t>(state.range(0));
    const lt::Problem problem{keys / 2, keys};
    for (auto _ : state) {
        benchmark::DoNotOptimize(lt::brute_force_pmf(problem, lt::StrategyKind::LockFirst));
    }
}
BENCHMARK(BM_BruteForcePmf)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ChuVandermonde(benchmark::State& state) {
    const auto max_keys = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lt::verify_chu_vandermonde(max_keys));
    }
}
BENCHMARK(BM_ChuVandermonde)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Campaign(benchmark::State& state) {
    lt::Campaign campaign;
    campaign.problem = lt::Problem{8, 8};
    campaign.strategy = lt::StrategyKind::TotallyRandom;
    campaign.samples = static_cast<std::uint64_t>(state.range(0));
    campaign.seed = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lt::run_campaign(campaign));
    }
}
BENCHMARK(BM_Campaign)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
