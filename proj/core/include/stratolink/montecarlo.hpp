#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stratolink/analytics.hpp"
#include "stratolink/links.hpp"
#include "stratolink/random.hpp"
#include "stratolink/scenario.hpp"

namespace stratolink {

struct MonteCarloOptions {
    std::uint64_t trials = 10'000'000;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;  ///< substream, e.g. the index of a sweep point
    unsigned threads = 0;      ///< 0 = hardware concurrency
};

struct TrialOutcome {
    double gamma_ah = 0.0;
    double gamma_hb = 0.0;
    double gamma_end_to_end = 0.0;  ///< min(gamma_ah, gamma_hb)
    bool outage = false;
};

/// Draw numbering: hop 0 is the uplink, hop k + 1 is candidate k. A trial's
/// draws depend only on (seed, stream, trial, hop). SS-I draws the uplink
/// and the scheduled candidate; SS-II draws every candidate and keeps the
/// strongest.
TrialOutcome simulate_trial(const LinkSet& links, Strategy strategy, double gamma_th, const TrialRandom& random,
                            std::uint64_t trial);

/// Outage frequency over `options.trials` independent trials, with binomial
/// standard error sqrt(p (1 - p) / trials). The count is a sum of integers
/// over fixed trial indices, so the result does not depend on `threads`.
OutageEstimate simulate_outage(const LinkSet& links, Strategy strategy, double gamma_th,
                               const MonteCarloOptions& options);

/// Scenario form: prepares the links at `gamma_bar_db` and simulates with
/// the scenario's trials and seed on substream 0.
OutageEstimate simulate_outage(const Scenario& scenario, Strategy strategy, double gamma_bar_db,
                               unsigned threads = 0);

struct SweepPoint {
    double gamma_bar_db = 0.0;
    OutageEstimate estimate;
};

/// simulate_outage at every grid point, point i on substream i.
std::vector<SweepPoint> sweep(const Scenario& scenario, Strategy strategy, std::span<const double> gamma_bar_db,
                              unsigned threads = 0);

/// Worker count for a request, 0 meaning all hardware threads.
unsigned resolve_thread_count(unsigned requested) noexcept;

}  // namespace stratolink
