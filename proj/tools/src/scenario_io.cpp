#include "stratolink/cli/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "stratolink/errors.hpp"

namespace stratolink::cli {

namespace {

using Json = nlohmann::ordered_json;

class Reader {
public:
    Reader(std::string_view text, std::string_view source) : text_(text), source_(source) {}

    [[noreturn]] void fail(const std::string& path, const std::string& problem) const
    {
        throw ScenarioParseError(fmt::format("{}: {}: {}", where(path), path, problem));
    }

    std::string where(const std::string& path) const
    {
        const int line = locate_field_line(text_, path);
        return line > 0 ? fmt::format("{}:{}", source_, line) : std::string(source_);
    }

    const Json& object(const Json& parent, const std::string& path, const char* key,
                       std::initializer_list<const char*> allowed) const
    {
        const Json& j = member(parent, path, key);
        const std::string here = join(path, key);
        if (!j.is_object()) {
            fail(here, "expected an object");
        }
        reject_unknown(j, here, allowed);
        return j;
    }

    const Json& member(const Json& parent, const std::string& path, const char* key) const
    {
        const auto it = parent.find(key);
        if (it == parent.end()) {
            fail(join(path, key), "missing required field");
        }
        return *it;
    }

    void reject_unknown(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) const
    {
        for (const auto& item : obj.items()) {
            bool known = false;
            for (const char* name : allowed) {
                known = known || item.key() == name;
            }
            if (!known) {
                fail(join(path, item.key().c_str()), "unknown field");
            }
        }
    }

    double number(const Json& j, const std::string& path) const
    {
        if (!j.is_number()) {
            fail(path, "expected a number");
        }
        return j.get<double>();
    }

    double number(const Json& parent, const std::string& path, const char* key) const
    {
        return number(member(parent, path, key), join(path, key));
    }

    std::uint64_t unsigned_integer(const Json& parent, const std::string& path, const char* key) const
    {
        const Json& j = member(parent, path, key);
        const std::string here = join(path, key);
        if (j.is_number_unsigned()) {
            return j.get<std::uint64_t>();
        }
        if (j.is_number_integer()) {
            throw DomainError(fmt::format("{}: {}: must be a non-negative integer", where(here), here));
        }
        if (j.is_number_float()) {
            const double x = j.get<double>();
            if (x >= 0.0 && x < 0x1.0p64 && std::floor(x) == x) {
                return static_cast<std::uint64_t>(x);
            }
            throw DomainError(fmt::format("{}: {}: must be a non-negative integer", where(here), here));
        }
        fail(here, "expected an integer");
    }

    std::string string(const Json& parent, const std::string& path, const char* key) const
    {
        const Json& j = member(parent, path, key);
        if (!j.is_string()) {
            fail(join(path, key), "expected a string");
        }
        return j.get<std::string>();
    }

    static std::string join(const std::string& path, const char* key)
    {
        return path.empty() ? std::string(key) : path + "." + key;
    }

private:
    std::string_view text_;
    std::string_view source_;
};

Scenario read(const Json& root, const Reader& in)
{
    if (!root.is_object()) {
        in.fail("", "scenario must be a JSON object");
    }
    in.reject_unknown(root, "", {"geometry", "atmosphere", "beam", "turbulence", "run"});

    Scenario s;

    const Json& geometry =
        in.object(root, "", "geometry", {"h_sat_km", "h_haps_km", "zenith_ah_deg", "zenith_b_deg"});
    s.sat_altitude_km = in.number(geometry, "geometry", "h_sat_km");
    s.haps_altitude_km = in.number(geometry, "geometry", "h_haps_km");
    s.uplink_zenith_deg = in.number(geometry, "geometry", "zenith_ah_deg");
    const Json& zeniths = in.member(geometry, "geometry", "zenith_b_deg");
    if (!zeniths.is_array()) {
        in.fail("geometry.zenith_b_deg", "expected an array of numbers");
    }
    s.candidate_zenith_deg.clear();
    for (std::size_t i = 0; i < zeniths.size(); ++i) {
        s.candidate_zenith_deg.push_back(in.number(zeniths[i], fmt::format("geometry.zenith_b_deg[{}]", i)));
    }

    const Json& atmosphere =
        in.object(root, "", "atmosphere", {"regime", "theta1_per_km", "theta2_per_km", "rho_fraction"});
    const bool has_regime = atmosphere.contains("regime");
    const bool has_theta = atmosphere.contains("theta1_per_km") || atmosphere.contains("theta2_per_km");
    if (has_regime && has_theta) {
        in.fail("atmosphere.regime", "give either regime or theta1_per_km + theta2_per_km, not both");
    }
    if (has_regime) {
        const std::string name = in.string(atmosphere, "atmosphere", "regime");
        const auto regime = parse_volcanic_regime(name);
        if (!regime) {
            in.fail("atmosphere.regime", "expected one of moderate, high, extreme");
        }
        s.extinction = *regime;
    } else if (has_theta) {
        s.extinction = RawExtinction{in.number(atmosphere, "atmosphere", "theta1_per_km"),
                                     in.number(atmosphere, "atmosphere", "theta2_per_km")};
    } else {
        in.fail("atmosphere.regime", "missing required field (or theta1_per_km + theta2_per_km)");
    }
    s.rho_fraction = in.number(atmosphere, "atmosphere", "rho_fraction");

    const Json& beam = in.object(root, "", "beam", {"wavelength_nm", "aperture_m"});
    s.wavelength_nm = in.number(beam, "beam", "wavelength_nm");
    s.aperture_m = in.number(beam, "beam", "aperture_m");

    const Json& turbulence = in.object(root, "", "turbulence", {"v_g_mps", "ground_A"});
    s.wind_speed_mps = in.number(turbulence, "turbulence", "v_g_mps");
    s.ground_cn2 = in.number(turbulence, "turbulence", "ground_A");

    const Json& run = in.object(root, "", "run", {"gamma_bar_db", "gamma_th_db", "trials", "seed", "ss1_rule"});
    const Json& grid = in.member(run, "run", "gamma_bar_db");
    if (grid.is_array()) {
        std::vector<double> values;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            values.push_back(in.number(grid[i], fmt::format("run.gamma_bar_db[{}]", i)));
        }
        s.gamma_bar_db = std::move(values);
    } else if (grid.is_object()) {
        in.reject_unknown(grid, "run.gamma_bar_db", {"start", "stop", "step"});
        s.gamma_bar_db = DbRange{in.number(grid, "run.gamma_bar_db", "start"),
                                 in.number(grid, "run.gamma_bar_db", "stop"),
                                 in.number(grid, "run.gamma_bar_db", "step")};
    } else {
        in.fail("run.gamma_bar_db", "expected an array of numbers or {start, stop, step}");
    }
    s.gamma_th_db = in.number(run, "run", "gamma_th_db");
    s.trials = in.unsigned_integer(run, "run", "trials");
    s.seed = in.unsigned_integer(run, "run", "seed");
    if (run.contains("ss1_rule")) {
        const std::string name = in.string(run, "run", "ss1_rule");
        const auto rule = parse_ss1_rule(name);
        if (!rule) {
            in.fail("run.ss1_rule", "expected min_zenith_fit or extrema");
        }
        s.ss1_rule = *rule;
    }
    return s;
}

}  // namespace

int locate_field_line(std::string_view text, std::string_view field_path)
{
    std::size_t pos = 0;
    std::size_t found = std::string_view::npos;
    std::size_t start = 0;
    while (start <= field_path.size() && !field_path.empty()) {
        std::size_t end = field_path.find('.', start);
        if (end == std::string_view::npos) {
            end = field_path.size();
        }
        std::string_view key = field_path.substr(start, end - start);
        key = key.substr(0, key.find('['));
        const std::string quoted = fmt::format("\"{}\"", key);
        const std::size_t hit = text.find(quoted, pos);
        if (hit == std::string_view::npos) {
            break;
        }
        found = hit;
        pos = hit + quoted.size();
        start = end + 1;
    }
    if (found == std::string_view::npos) {
        return 0;
    }
    int line = 1;
    for (std::size_t i = 0; i < found; ++i) {
        line += text[i] == '\n' ? 1 : 0;
    }
    return line;
}

Scenario parse_scenario(std::string_view text, std::string_view source)
{
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ScenarioParseError(fmt::format("{}: invalid JSON: {}", source, e.what()));
    }

    const Reader in(text, source);
    Scenario scenario = read(root, in);
    try {
        scenario.validate();
    } catch (const DomainError& e) {
        const std::string message = e.what();
        const std::string field = message.substr(0, message.find(':'));
        throw DomainError(fmt::format("{}: {}", in.where(field), message));
    }
    return scenario;
}

Scenario load_scenario(const std::filesystem::path& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw ScenarioParseError(fmt::format("{}: cannot open scenario file", path.string()));
    }
    std::ostringstream text;
    text << file.rdbuf();
    return parse_scenario(text.str(), path.string());
}

std::string dump_scenario(const Scenario& s)
{
    Json root;
    root["geometry"] = {
        {"h_sat_km", s.sat_altitude_km},
        {"h_haps_km", s.haps_altitude_km},
        {"zenith_ah_deg", s.uplink_zenith_deg},
        {"zenith_b_deg", s.candidate_zenith_deg},
    };

    Json atmosphere = Json::object();
    if (const auto* regime = std::get_if<VolcanicRegime>(&s.extinction)) {
        atmosphere["regime"] = std::string(to_string(*regime));
    } else {
        const auto& raw = std::get<RawExtinction>(s.extinction);
        atmosphere["theta1_per_km"] = raw.meso_per_km;
        atmosphere["theta2_per_km"] = raw.strato_per_km;
    }
    atmosphere["rho_fraction"] = s.rho_fraction;
    root["atmosphere"] = atmosphere;

    root["beam"] = {{"wavelength_nm", s.wavelength_nm}, {"aperture_m", s.aperture_m}};
    root["turbulence"] = {{"v_g_mps", s.wind_speed_mps}, {"ground_A", s.ground_cn2}};

    Json run = Json::object();
    if (const auto* values = std::get_if<std::vector<double>>(&s.gamma_bar_db)) {
        run["gamma_bar_db"] = *values;
    } else {
        const auto& range = std::get<DbRange>(s.gamma_bar_db);
        run["gamma_bar_db"] = {{"start", range.start}, {"stop", range.stop}, {"step", range.step}};
    }
    run["gamma_th_db"] = s.gamma_th_db;
    run["trials"] = s.trials;
    run["seed"] = s.seed;
    run["ss1_rule"] = std::string(to_string(s.ss1_rule));
    root["run"] = run;

    return root.dump(2) + "\n";
}

}  // namespace stratolink::cli
