#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "stratolink/analytics.hpp"
#include "stratolink/fading.hpp"
#include "stratolink/scenario.hpp"
#include "stratolink/scheduling.hpp"
#include "stratolink/cli/result_table.hpp"

namespace stratolink::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitConvergence = 3;

/// Closed-form and/or series outage at every grid point, ordered by
/// strategy, then method, then grid point.
std::vector<ResultRow> analyze_rows(const Scenario& scenario, std::span<const Strategy> strategies,
                                    std::span<const OutageMethod> methods);

/// Monte-Carlo estimates, ordered by strategy then grid point.
std::vector<ResultRow> simulate_rows(const Scenario& scenario, std::span<const Strategy> strategies,
                                     unsigned threads);

/// Analytic outage at one average SNR for each HAPS altitude, ordered by
/// altitude, then strategy, then method.
std::vector<ResultRow> altitude_sweep_rows(const Scenario& scenario, std::span<const double> haps_altitudes_km,
                                           double gamma_bar_db, std::span<const Strategy> strategies,
                                           std::span<const OutageMethod> methods);

struct FitReport {
    double sigma2 = 0.0;
    EwParams ew;
};

FitReport fit_sigma2(double sigma2);
/// Scintillation of the scenario's uplink or a downlink at `zenith_deg`, then the fit.
FitReport fit_link(const Scenario& scenario, bool uplink, double zenith_deg);

/// Worker cap from STRATOLINK_THREADS (unset or empty = 0 = automatic).
unsigned threads_from_environment();

/// Entry point of the stratolink executable; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stratolink::cli
