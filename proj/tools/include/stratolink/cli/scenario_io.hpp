#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stratolink/scenario.hpp"

namespace stratolink::cli {

/// Malformed scenario document: bad JSON, wrong types, missing or unknown
/// fields. Messages have the form "source:line: field.path: problem".
class ScenarioParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a scenario document. Every section and field is required except
/// run.ss1_rule. Physical invariants are checked too; violations throw
/// DomainError with the same "source:line: field.path" prefix.
Scenario parse_scenario(std::string_view text, std::string_view source = "<scenario>");

Scenario load_scenario(const std::filesystem::path& path);

/// Pretty-printed JSON that parse_scenario reads back to an equal Scenario.
std::string dump_scenario(const Scenario& scenario);

/// 1-based line of the innermost key of `field_path` ("run.trials",
/// "geometry.zenith_b_deg[2]") that can be found in `text`, or 0.
int locate_field_line(std::string_view text, std::string_view field_path);

}  // namespace stratolink::cli
