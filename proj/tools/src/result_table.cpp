#include "stratolink/cli/result_table.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

namespace stratolink::cli {

namespace {

std::string probability(double p)
{
    return fmt::format("{:.12e}", p);
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept
{
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "gnuplot") {
        return OutputFormat::Gnuplot;
    }
    return std::nullopt;
}

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_csv(std::ostream& out, std::span<const ResultRow> rows)
{
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << fmt::format("{},{},{},{},{},{},{}\n", r.h_haps_km, r.gamma_bar_db, csv_field(to_string(r.strategy)),
                           csv_field(to_string(r.method)), probability(r.outage),
                           r.std_error ? probability(*r.std_error) : std::string(),
                           r.terms_used ? std::to_string(*r.terms_used) : std::string());
    }
}

void write_json(std::ostream& out, std::span<const ResultRow> rows)
{
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["h_haps_km"] = r.h_haps_km;
        row["gamma_bar_db"] = r.gamma_bar_db;
        row["strategy"] = std::string(to_string(r.strategy));
        row["method"] = std::string(to_string(r.method));
        row["outage"] = r.outage;
        row["std_error"] = r.std_error ? nlohmann::ordered_json(*r.std_error) : nlohmann::ordered_json(nullptr);
        row["terms_used"] = r.terms_used ? nlohmann::ordered_json(*r.terms_used) : nlohmann::ordered_json(nullptr);
        array.push_back(std::move(row));
    }
    out << array.dump(2) << '\n';
}

void write_gnuplot(std::ostream& out, std::span<const ResultRow> rows)
{
    std::vector<std::pair<Strategy, OutageMethod>> blocks;
    for (const auto& r : rows) {
        const std::pair key{r.strategy, r.method};
        if (std::find(blocks.begin(), blocks.end(), key) == blocks.end()) {
            blocks.push_back(key);
        }
    }
    out << "# h_haps_km gamma_bar_db outage std_error terms_used\n";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b > 0) {
            out << "\n\n";
        }
        out << fmt::format("# strategy={} method={}\n", to_string(blocks[b].first), to_string(blocks[b].second));
        for (const auto& r : rows) {
            if (std::pair{r.strategy, r.method} != blocks[b]) {
                continue;
            }
            out << fmt::format("{} {} {} {} {}\n", r.h_haps_km, r.gamma_bar_db, probability(r.outage),
                               r.std_error ? probability(*r.std_error) : std::string("NaN"),
                               r.terms_used ? std::to_string(*r.terms_used) : std::string("NaN"));
        }
    }
}

void write_table(std::ostream& out, std::span<const ResultRow> rows, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Csv:
        write_csv(out, rows);
        break;
    case OutputFormat::Json:
        write_json(out, rows);
        break;
    case OutputFormat::Gnuplot:
        write_gnuplot(out, rows);
        break;
    }
}

}  // namespace stratolink::cli
