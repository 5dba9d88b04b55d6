#include "dengue/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "dengue/format.hpp"
#include "dengue/integrator.hpp"

namespace dengue {

namespace {

struct NumericKey {
    const char* name;
    std::function<double&(ScenarioConfig&)> field;
};

// Every numeric key in canonical file order; `schedule` is handled apart.
const std::vector<NumericKey>& numeric_keys()
{
    static const std::vector<NumericKey> keys = {
        {"N_h", [](ScenarioConfig& c) -> double& { return c.params.N_h; }},
        {"B", [](ScenarioConfig& c) -> double& { return c.params.B; }},
        {"beta_mh", [](ScenarioConfig& c) -> double& { return c.params.beta_mh; }},
        {"beta_hm", [](ScenarioConfig& c) -> double& { return c.params.beta_hm; }},
        {"mu_h", [](ScenarioConfig& c) -> double& { return c.params.mu_h; }},
        {"eta_h", [](ScenarioConfig& c) -> double& { return c.params.eta_h; }},
        {"mu_m", [](ScenarioConfig& c) -> double& { return c.params.mu_m; }},
        {"mu_b", [](ScenarioConfig& c) -> double& { return c.params.mu_b; }},
        {"mu_A", [](ScenarioConfig& c) -> double& { return c.params.mu_A; }},
        {"eta_A", [](ScenarioConfig& c) -> double& { return c.params.eta_A; }},
        {"eta_m", [](ScenarioConfig& c) -> double& { return c.params.eta_m; }},
        {"nu_h", [](ScenarioConfig& c) -> double& { return c.params.nu_h; }},
        {"m", [](ScenarioConfig& c) -> double& { return c.params.m; }},
        {"k", [](ScenarioConfig& c) -> double& { return c.params.k; }},
        {"K", [](ScenarioConfig& c) -> double& { return c.params.K; }},
        {"S_h0", [](ScenarioConfig& c) -> double& { return c.S_h0; }},
        {"E_h0", [](ScenarioConfig& c) -> double& { return c.E_h0; }},
        {"I_h0", [](ScenarioConfig& c) -> double& { return c.I_h0; }},
        {"R_h0", [](ScenarioConfig& c) -> double& { return c.R_h0; }},
        {"A_m0", [](ScenarioConfig& c) -> double& { return c.A_m0; }},
        {"S_m0", [](ScenarioConfig& c) -> double& { return c.S_m0; }},
        {"E_m0", [](ScenarioConfig& c) -> double& { return c.E_m0; }},
        {"I_m0", [](ScenarioConfig& c) -> double& { return c.I_m0; }},
        {"t_f", [](ScenarioConfig& c) -> double& { return c.t_f; }},
        {"h", [](ScenarioConfig& c) -> double& { return c.h; }},
    };
    return keys;
}

std::string valid_key_list()
{
    std::string names;
    for (const auto& key : numeric_keys()) {
        names += key.name;
        names += ", ";
    }
    names += "schedule";
    return names;
}

double parse_value(const std::string& key, const std::string& text)
{
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << "config key '" << key << "': cannot parse '" << text << "' as a number";
        throw ConfigError(msg.str());
    }
    return value;
}

std::string trim(std::string_view text)
{
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos)
        return {};
    const auto end = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(begin, end - begin + 1));
}

// key -> raw value text, insertion-ordered semantics: later entries win
using RawConfig = std::map<std::string, std::string>;

void apply_line(RawConfig& raw, const std::string& line, const std::string& where)
{
    std::string stripped = line;
    if (const auto hash = stripped.find('#'); hash != std::string::npos)
        stripped.erase(hash);
    stripped = trim(stripped);
    if (stripped.empty())
        return;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
        std::ostringstream msg;
        msg << where << ": expected 'key = value', got '" << trim(line) << "'";
        throw ConfigError(msg.str());
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
        throw ConfigError(where + ": missing key before '='");
    raw[key] = value;
}

void require_nonnegative(double value, const char* name)
{
    if (!(value >= 0.0)) {
        std::ostringstream msg;
        msg << "initial condition " << name << " must be nonnegative, got " << value;
        throw ConfigError(msg.str());
    }
}

} // namespace

ScenarioConfig default_config()
{
    ScenarioConfig cfg;
    cfg.params = default_parameters();
    cfg.E_h0 = 216.0;
    cfg.I_h0 = 434.0;
    cfg.R_h0 = 0.0;
    cfg.E_m0 = 0.0;
    cfg.I_m0 = 0.0;
    cfg.S_h0 = cfg.params.N_h - cfg.E_h0 - cfg.I_h0;
    cfg.A_m0 = cfg.params.k * cfg.params.N_h;
    cfg.S_m0 = cfg.params.m * cfg.params.N_h;
    cfg.t_f = 84.0;
    cfg.h = kDefaultStep;
    cfg.schedule = "zero";
    return cfg;
}

ScenarioConfig load_config(const std::optional<std::string>& path,
                           const std::vector<std::string>& overrides)
{
    RawConfig raw;
    if (path) {
        std::ifstream file(*path);
        if (!file)
            throw ConfigError("cannot open config file '" + *path + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(file, line)) {
            ++lineno;
            std::ostringstream where;
            where << *path << ":" << lineno;
            apply_line(raw, line, where.str());
        }
    }
    for (const auto& entry : overrides)
        apply_line(raw, entry, "override '" + entry + "'");

    ScenarioConfig cfg = default_config();
    // Track what was given explicitly; the rest is derived below.
    std::map<std::string, bool> seen;
    for (const auto& [key, value] : raw) {
        if (key == "schedule") {
            cfg.schedule = value;
            continue;
        }
        const auto it = std::find_if(numeric_keys().begin(), numeric_keys().end(),
                                     [&](const NumericKey& k) { return key == k.name; });
        if (it == numeric_keys().end()) {
            std::ostringstream msg;
            msg << "unknown config key '" << key << "'; valid keys: " << valid_key_list();
            throw ConfigError(msg.str());
        }
        it->field(cfg) = parse_value(key, value);
        seen[key] = true;
    }

    // Derivation rules for omitted fields.
    if (!seen["K"])
        cfg.params.K = cfg.params.k * cfg.params.N_h;
    if (!seen["S_h0"]) {
        cfg.S_h0 = cfg.params.N_h - cfg.E_h0 - cfg.I_h0;
        if (cfg.S_h0 < 0.0) {
            std::ostringstream msg;
            msg << "derived S_h0 = N_h - E_h0 - I_h0 = " << cfg.S_h0
                << " is negative; reduce E_h0 + I_h0 below N_h = " << cfg.params.N_h;
            throw ConfigError(msg.str());
        }
    }
    if (!seen["A_m0"])
        cfg.A_m0 = cfg.params.k * cfg.params.N_h;
    if (!seen["S_m0"])
        cfg.S_m0 = cfg.params.m * cfg.params.N_h;

    cfg.params.validate();
    require_nonnegative(cfg.S_h0, "S_h0");
    require_nonnegative(cfg.E_h0, "E_h0");
    require_nonnegative(cfg.I_h0, "I_h0");
    require_nonnegative(cfg.R_h0, "R_h0");
    require_nonnegative(cfg.A_m0, "A_m0");
    require_nonnegative(cfg.S_m0, "S_m0");
    require_nonnegative(cfg.E_m0, "E_m0");
    require_nonnegative(cfg.I_m0, "I_m0");
    if (!(cfg.t_f > 0.0))
        throw ConfigError("t_f must be positive");
    if (!(cfg.h > 0.0 && cfg.h <= cfg.t_f))
        throw ConfigError("step h must satisfy 0 < h <= t_f");
    parse_schedule(cfg.schedule); // validates the descriptor
    return cfg;
}

void write_config(std::ostream& out, const ScenarioConfig& config)
{
    ScenarioConfig copy = config;
    for (const auto& key : numeric_keys()) {
        const std::string_view name = key.name;
        if (name == "N_h")
            out << "# model parameters\n";
        else if (name == "S_h0")
            out << "\n# initial conditions\n";
        else if (name == "t_f")
            out << "\n# run\n";
        out << key.name << " = " << format_exact(key.field(copy)) << "\n";
    }
    out << "schedule = " << config.schedule << "\n";
}

} // namespace dengue
