#include "stratolink/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "stratolink/errors.hpp"
#include "stratolink/fading.hpp"
#include "stratolink/units.hpp"

namespace stratolink {

namespace {

constexpr std::uint64_t kChunk = 1 << 15;

double hop_snr(const HopLink& hop, double u)
{
    const double irradiance = hop.attenuation_g * ew_quantile(u, hop.ew);
    return hop.avg_snr * irradiance * irradiance;
}

std::uint64_t count_outages(const LinkSet& links, Strategy strategy, double gamma_th, const TrialRandom& random,
                            std::uint64_t begin, std::uint64_t end)
{
    std::uint64_t outages = 0;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
        outages += simulate_trial(links, strategy, gamma_th, random, trial).outage ? 1 : 0;
    }
    return outages;
}

}  // namespace

unsigned resolve_thread_count(unsigned requested) noexcept
{
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

TrialOutcome simulate_trial(const LinkSet& links, Strategy strategy, double gamma_th, const TrialRandom& random,
                            std::uint64_t trial)
{
    auto block = random.block(trial, 0);
    std::uint64_t block_index = 0;
    const auto uniform = [&](std::uint64_t hop) {
        if (hop / 4 != block_index) {
            block_index = hop / 4;
            block = random.block(trial, block_index);
        }
        return block[hop % 4];
    };

    TrialOutcome out;
    out.gamma_ah = hop_snr(links.uplink, uniform(0));
    if (strategy == Strategy::MinZenith) {
        out.gamma_hb = hop_snr(links.ss1_hop, uniform(links.ss1_position + 1));
    } else {
        for (std::size_t k = 0; k < links.candidates.size(); ++k) {
            out.gamma_hb = std::max(out.gamma_hb, hop_snr(links.candidates[k], uniform(k + 1)));
        }
    }
    out.gamma_end_to_end = std::min(out.gamma_ah, out.gamma_hb);
    out.outage = out.gamma_end_to_end <= gamma_th;
    return out;
}

OutageEstimate simulate_outage(const LinkSet& links, Strategy strategy, double gamma_th,
                               const MonteCarloOptions& options)
{
    require(options.trials >= 1, "monte carlo: trials must be at least 1");
    require(!links.candidates.empty(), "monte carlo: no candidate satellites");
    require(gamma_th >= 0.0, "monte carlo: threshold must be >= 0");

    const TrialRandom random(options.seed, options.stream);
    const std::uint64_t chunks = (options.trials + kChunk - 1) / kChunk;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_thread_count(options.threads), chunks));

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> outages{0};
    auto work = [&] {
        std::uint64_t local = 0;
        for (std::uint64_t c = next_chunk++; c < chunks; c = next_chunk++) {
            const std::uint64_t begin = c * kChunk;
            const std::uint64_t end = std::min(options.trials, begin + kChunk);
            local += count_outages(links, strategy, gamma_th, random, begin, end);
        }
        outages += local;
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }

    const double n = static_cast<double>(options.trials);
    const double p = static_cast<double>(outages.load()) / n;
    OutageEstimate estimate;
    estimate.value = p;
    estimate.method = OutageMethod::MonteCarlo;
    estimate.std_error = std::sqrt(p * (1.0 - p) / n);
    return estimate;
}

OutageEstimate simulate_outage(const Scenario& scenario, Strategy strategy, double gamma_bar_db, unsigned threads)
{
    const double grid[] = {gamma_bar_db};
    return sweep(scenario, strategy, grid, threads).front().estimate;
}

std::vector<SweepPoint> sweep(const Scenario& scenario, Strategy strategy, std::span<const double> gamma_bar_db,
                              unsigned threads)
{
    std::vector<SweepPoint> out;
    if (gamma_bar_db.empty()) {
        return out;
    }
    const LinkSet base = prepare_links(scenario);
    MonteCarloOptions options;
    options.trials = scenario.trials;
    options.seed = scenario.seed;
    options.threads = threads;

    out.reserve(gamma_bar_db.size());
    for (std::size_t i = 0; i < gamma_bar_db.size(); ++i) {
        options.stream = i;
        const LinkSet links = base.with_avg_snr(db_to_linear(gamma_bar_db[i]));
        out.push_back({gamma_bar_db[i], simulate_outage(links, strategy, scenario.gamma_th_linear(), options)});
    }
    return out;
}

}  // namespace stratolink
