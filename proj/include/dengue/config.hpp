#ifndef DENGUE_CONFIG_HPP
#define DENGUE_CONFIG_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dengue/model.hpp"
#include "dengue/schedule.hpp"

namespace dengue {

/// A fully resolved scenario: model parameters, initial conditions,
/// horizon, step, and control schedule.
struct ScenarioConfig {
    ModelParameters params;
    double S_h0, E_h0, I_h0, R_h0; // initial human compartments
    double A_m0, S_m0, E_m0, I_m0; // initial mosquito compartments
    double t_f;                    // horizon, days
    double h;                      // integrator step, days
    std::string schedule;          // control descriptor

    StateVector initial_state() const
    {
        return {S_h0, E_h0, I_h0, R_h0, A_m0, S_m0, E_m0, I_m0};
    }
    ControlSchedule parsed_schedule() const { return parse_schedule(schedule); }

    bool operator==(const ScenarioConfig&) const = default;
};

/// The built-in default scenario: no control over 84 days at step 0.01.
ScenarioConfig default_config();

/// Loads a scenario from an optional flat `key = value` config file
/// (# starts a comment), then applies `overrides` ("key=value" strings,
/// later entries win). Omitted fields fall back to the defaults, with
///   S_h0 = N_h - E_h0 - I_h0,  A_m0 = k * N_h,  S_m0 = m * N_h,
///   K = k * N_h,  R_h0 = E_m0 = I_m0 = 0
/// derived when not given explicitly. Throws ConfigError for unknown keys
/// (the message lists valid ones), unparsable values, or violated
/// invariants, naming the offending field.
ScenarioConfig load_config(const std::optional<std::string>& path,
                           const std::vector<std::string>& overrides = {});

/// Writes every key of `config` so that load_config reads back an
/// identical scenario.
void write_config(std::ostream& out, const ScenarioConfig& config);

} // namespace dengue

#endif
