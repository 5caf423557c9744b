#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "stratolink/analytics.hpp"
#include "stratolink/scheduling.hpp"

namespace stratolink::cli {

enum class OutputFormat { Csv, Json, Gnuplot };

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept;

struct ResultRow {
    double h_haps_km = 0.0;
    double gamma_bar_db = 0.0;
    Strategy strategy = Strategy::MinZenith;
    OutageMethod method = OutageMethod::ClosedForm;
    double outage = 0.0;
    std::optional<double> std_error;
    std::optional<int> terms_used;
};

inline constexpr std::string_view kCsvHeader =
    "h_haps_km,gamma_bar_db,strategy,method,outage,std_error,terms_used";

/// RFC 4180 field: quoted when it holds a comma, quote or line break.
std::string csv_field(std::string_view text);

/// Header plus one line per row. Probabilities use scientific notation;
/// absent optional values are empty fields.
void write_csv(std::ostream& out, std::span<const ResultRow> rows);
/// Array of objects keyed like the CSV header; absent values are null.
void write_json(std::ostream& out, std::span<const ResultRow> rows);
/// Whitespace-separated columns, one data block per (strategy, method) in
/// order of first appearance, blocks separated by two blank lines.
void write_gnuplot(std::ostream& out, std::span<const ResultRow> rows);

void write_table(std::ostream& out, std::span<const ResultRow> rows, OutputFormat format);

}  // namespace stratolink::cli
