#include "stratolink/cli/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "stratolink/atmosphere.hpp"
#include "stratolink/cli/scenario_io.hpp"
#include "stratolink/errors.hpp"
#include "stratolink/links.hpp"
#include "stratolink/montecarlo.hpp"
#include "stratolink/units.hpp"

namespace stratolink::cli {

namespace {

std::vector<Strategy> strategies_from(const std::string& name)
{
    if (name == "both") {
        return {Strategy::MinZenith, Strategy::MaxSnr};
    }
    return {*parse_strategy(name)};
}

std::vector<OutageMethod> methods_from(const std::string& name)
{
    if (name == "closed") {
        return {OutageMethod::ClosedForm};
    }
    if (name == "series") {
        return {OutageMethod::Series};
    }
    return {OutageMethod::ClosedForm, OutageMethod::Series};
}

ResultRow analytic_row(const LinkSet& links, double h_haps_km, double gamma_bar_db, Strategy strategy,
                       OutageMethod method, double gamma_th)
{
    const OutageEstimate e = analytic_outage(links, strategy, gamma_th, method);
    return {h_haps_km, gamma_bar_db, strategy, method, e.value, e.std_error, e.terms_used};
}

struct TableOptions {
    std::string scenario_path;
    std::string strategy = "both";
    std::string format = "csv";
    std::string out_path;

    void attach(CLI::App& cmd)
    {
        cmd.add_option("--scenario", scenario_path, "Scenario JSON file (default: built-in parameters)");
        cmd.add_option("--strategy", strategy, "Scheduling strategy")
            ->check(CLI::IsMember({"ss1", "ss2", "both"}))
            ->capture_default_str();
        cmd.add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json", "gnuplot"}))
            ->capture_default_str();
        cmd.add_option("--out", out_path, "Write the table here instead of standard output");
    }

    Scenario scenario() const
    {
        return scenario_path.empty() ? Scenario{} : load_scenario(scenario_path);
    }
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    file << text;
    if (!file) {
        throw ScenarioParseError(fmt::format("{}: cannot write output file", out_path));
    }
}

void emit_table(const std::vector<ResultRow>& rows, const TableOptions& options, std::ostream& out)
{
    std::ostringstream text;
    write_table(text, rows, *parse_output_format(options.format));
    emit(text.str(), options.out_path, out);
}

std::string format_fit(const FitReport& report, const std::string& format)
{
    if (format == "json") {
        return fmt::format("{{\"sigma2\": {:.9e}, \"alpha\": {:.9e}, \"beta\": {:.9e}, \"eta\": {:.9e}}}\n",
                           report.sigma2, report.ew.alpha, report.ew.beta, report.ew.eta);
    }
    return fmt::format("sigma2 = {:.9e}\nalpha  = {:.9e}\nbeta   = {:.9e}\neta    = {:.9e}\n", report.sigma2,
                       report.ew.alpha, report.ew.beta, report.ew.eta);
}

}  // namespace

std::vector<ResultRow> analyze_rows(const Scenario& scenario, std::span<const Strategy> strategies,
                                    std::span<const OutageMethod> methods)
{
    const LinkSet base = prepare_links(scenario);
    const auto grid = scenario.gamma_bar_grid_db();
    std::vector<ResultRow> rows;
    for (const Strategy strategy : strategies) {
        for (const OutageMethod method : methods) {
            for (const double db : grid) {
                rows.push_back(analytic_row(base.with_avg_snr(db_to_linear(db)), scenario.haps_altitude_km, db,
                                            strategy, method, scenario.gamma_th_linear()));
            }
        }
    }
    return rows;
}

std::vector<ResultRow> simulate_rows(const Scenario& scenario, std::span<const Strategy> strategies, unsigned threads)
{
    const auto grid = scenario.gamma_bar_grid_db();
    std::vector<ResultRow> rows;
    for (const Strategy strategy : strategies) {
        for (const auto& point : sweep(scenario, strategy, grid, threads)) {
            rows.push_back({scenario.haps_altitude_km, point.gamma_bar_db, strategy, point.estimate.method,
                            point.estimate.value, point.estimate.std_error, point.estimate.terms_used});
        }
    }
    return rows;
}

std::vector<ResultRow> altitude_sweep_rows(const Scenario& scenario, std::span<const double> haps_altitudes_km,
                                           double gamma_bar_db, std::span<const Strategy> strategies,
                                           std::span<const OutageMethod> methods)
{
    for (const double h : haps_altitudes_km) {
        if (!(h > 0.0 && h < scenario.sat_altitude_km)) {
            throw DomainError(fmt::format("--altitudes: {} km is outside (0, geometry.h_sat_km = {} km)", h,
                                          scenario.sat_altitude_km));
        }
    }
    std::vector<ResultRow> rows;
    for (const double h : haps_altitudes_km) {
        Scenario at = scenario;
        at.haps_altitude_km = h;
        const LinkSet links = prepare_links(at, db_to_linear(gamma_bar_db));
        for (const Strategy strategy : strategies) {
            for (const OutageMethod method : methods) {
                rows.push_back(analytic_row(links, h, gamma_bar_db, strategy, method, at.gamma_th_linear()));
            }
        }
    }
    return rows;
}

FitReport fit_sigma2(double sigma2)
{
    return {sigma2, fit_from_scintillation(sigma2)};
}

FitReport fit_link(const Scenario& scenario, bool uplink, double zenith_deg)
{
    Scenario at = scenario;
    if (uplink) {
        at.uplink_zenith_deg = zenith_deg;
        at.validate();
        return fit_sigma2(derive_uplink(at).scintillation);
    }
    at.candidate_zenith_deg = {zenith_deg};
    at.validate();
    return fit_sigma2(derive_downlink(at, 0).scintillation);
}

unsigned threads_from_environment()
{
    const char* value = std::getenv("STRATOLINK_THREADS");
    if (value == nullptr || *value == '\0') {
        return 0;
    }
    const std::string_view text(value);
    unsigned threads = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), threads);
    if (ec != std::errc{} || end != text.data() + text.size() || threads > 4096) {
        throw ScenarioParseError(fmt::format("STRATOLINK_THREADS: expected an integer in [0, 4096], got '{}'", text));
    }
    return threads;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dual-hop HAPS-relayed optical inter-satellite link analysis", "stratolink"};
    app.require_subcommand(0, 1);

    bool dump_defaults = false;
    app.add_flag("--dump-defaults", dump_defaults, "Print the built-in scenario as JSON and exit");

    TableOptions analyze;
    std::string analyze_method = "closed";
    auto* analyze_cmd = app.add_subcommand("analyze", "Closed-form outage over the scenario's SNR grid");
    analyze.attach(*analyze_cmd);
    analyze_cmd->add_option("--method", analyze_method, "Analytic evaluation")
        ->check(CLI::IsMember({"closed", "series", "both"}))
        ->capture_default_str();

    TableOptions simulate;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte-Carlo outage over the scenario's SNR grid");
    simulate.attach(*simulate_cmd);
    simulate_cmd->add_option("--trials", trials, "Override run.trials");
    simulate_cmd->add_option("--seed", seed, "Override run.seed");

    TableOptions sweep_opts;
    std::vector<double> altitudes;
    double sweep_gamma_bar = 10.0;
    std::string sweep_method = "closed";
    auto* sweep_cmd = app.add_subcommand("altitude-sweep", "Analytic outage across HAPS altitudes");
    sweep_opts.attach(*sweep_cmd);
    sweep_cmd->add_option("--altitudes", altitudes, "HAPS altitudes in km, comma separated")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--gamma-bar", sweep_gamma_bar, "Average SNR in dB")->capture_default_str();
    sweep_cmd->add_option("--method", sweep_method, "Analytic evaluation")
        ->check(CLI::IsMember({"closed", "series", "both"}))
        ->capture_default_str();

    std::string fit_scenario;
    std::optional<double> sigma2;
    std::string link;
    std::optional<double> zenith;
    std::string fit_format = "text";
    auto* fit_cmd = app.add_subcommand("fit", "Fit EW parameters to a scintillation index or link geometry");
    fit_cmd->add_option("--scenario", fit_scenario, "Scenario JSON file (default: built-in parameters)");
    auto* sigma2_opt = fit_cmd->add_option("--sigma2", sigma2, "Scintillation index");
    auto* link_opt = fit_cmd->add_option("--link", link, "Derive sigma2 from this hop's geometry")
                         ->check(CLI::IsMember({"uplink", "downlink"}));
    fit_cmd->add_option("--zenith", zenith, "Zenith angle in degrees (uplink default: geometry.zenith_ah_deg)");
    fit_cmd->add_option("--format", fit_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sigma2_opt->excludes(link_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "stratolink: " << e.what() << '\n';
        return kExitParse;
    }

    try {
        if (dump_defaults) {
            out << dump_scenario(Scenario{});
            return kExitOk;
        }
        if (*analyze_cmd) {
            const Scenario scenario = analyze.scenario();
            emit_table(analyze_rows(scenario, strategies_from(analyze.strategy), methods_from(analyze_method)),
                       analyze, out);
        } else if (*simulate_cmd) {
            Scenario scenario = simulate.scenario();
            if (trials) {
                scenario.trials = *trials;
            }
            if (seed) {
                scenario.seed = *seed;
            }
            scenario.validate();
            const unsigned threads = threads_from_environment();
            emit_table(simulate_rows(scenario, strategies_from(simulate.strategy), threads), simulate, out);
        } else if (*sweep_cmd) {
            const Scenario scenario = sweep_opts.scenario();
            emit_table(altitude_sweep_rows(scenario, altitudes, sweep_gamma_bar, strategies_from(sweep_opts.strategy),
                                           methods_from(sweep_method)),
                       sweep_opts, out);
        } else if (*fit_cmd) {
            FitReport report;
            if (sigma2) {
                report = fit_sigma2(*sigma2);
            } else if (!link.empty()) {
                const Scenario scenario = fit_scenario.empty() ? Scenario{} : load_scenario(fit_scenario);
                const bool uplink = link == "uplink";
                if (!uplink && !zenith) {
                    err << "stratolink: fit --link downlink needs --zenith\n";
                    return kExitParse;
                }
                report = fit_link(scenario, uplink, zenith.value_or(scenario.uplink_zenith_deg));
            } else {
                err << "stratolink: fit needs --sigma2 or --link\n";
                return kExitParse;
            }
            out << format_fit(report, fit_format);
        } else {
            out << app.help();
        }
    } catch (const ScenarioParseError& e) {
        err << "stratolink: " << e.what() << '\n';
        return kExitParse;
    } catch (const DomainError& e) {
        err << "stratolink: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ConvergenceError& e) {
        err << "stratolink: " << e.what() << " (error estimate " << e.error_estimate() << ")\n";
        return kExitConvergence;
    }
    return kExitOk;
}

}  // namespace stratolink::cli
