// Command-line front end: simulate, sweep, find-period, r0, plot-script.
#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dengue/config.hpp"
#include "dengue/report.hpp"

namespace {

struct CommonOptions {
    std::optional<std::string> config_path;
    std::vector<std::string> overrides;
    std::string schedule;
    double horizon = -1.0;
    double step = -1.0;
    std::string out_path;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts, bool scenario = true)
{
    if (scenario) {
        cmd->add_option("--config", opts.config_path, "scenario config file (key = value lines)");
        cmd->add_option("--set", opts.overrides, "override a config key, e.g. --set B=0.8")
            ->take_all();
        cmd->add_option("--schedule", opts.schedule, "control schedule descriptor");
        cmd->add_option("--horizon", opts.horizon, "final time t_f in days");
        cmd->add_option("--step", opts.step, "integrator step in days");
    }
    cmd->add_option("--out", opts.out_path, "output file (default: stdout)");
}

dengue::ScenarioConfig resolve_config(const CommonOptions& opts)
{
    std::vector<std::string> overrides = opts.overrides;
    // Dedicated flags outrank --set entries.
    if (!opts.schedule.empty())
        overrides.push_back("schedule=" + opts.schedule);
    if (opts.horizon >= 0.0)
        overrides.push_back("t_f=" + dengue::format_exact(opts.horizon));
    if (opts.step >= 0.0)
        overrides.push_back("h=" + dengue::format_exact(opts.step));
    return dengue::load_config(opts.config_path, overrides);
}

// Output stream selection; keeps the ofstream alive while in use.
struct OutputStream {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit OutputStream(const std::string& path)
    {
        if (path.empty())
            return;
        file.open(path);
        if (!file)
            throw dengue::ConfigError("cannot open output file '" + path + "'");
        stream = &file;
    }
    std::ostream& get() { return *stream; }
};

double parse_token(const std::string& token, const char* what)
{
    double value = 0.0;
    const char* end = token.c_str() + token.size();
    auto [ptr, ec] = std::from_chars(token.c_str(), end, value);
    if (ec != std::errc{} || ptr != end) {
        std::string msg = "malformed ";
        msg += what;
        msg += " token '" + token + "'";
        throw dengue::ConfigError(msg);
    }
    return value;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Deterministic simulator for a dengue transmission model with "
                 "insecticide scheduling"};
    app.require_subcommand(1);

    CommonOptions sim_opts;
    auto* sim = app.add_subcommand("simulate", "integrate one scenario and write a CSV time series");
    add_common_options(sim, sim_opts);

    CommonOptions sweep_opts;
    std::vector<std::string> period_tokens;
    auto* sweep = app.add_subcommand("sweep", "compare pulsed periods against the constant-0.084 reference");
    add_common_options(sweep, sweep_opts);
    sweep->add_option("periods", period_tokens, "pulse periods in days (default: 7 11 12 15 30)");

    CommonOptions find_opts;
    int range_lo = 7, range_hi = 30;
    auto* find = app.add_subcommand("find-period", "largest feasible pulse period in a range");
    add_common_options(find, find_opts);
    find->add_option("lo", range_lo, "smallest period to try (days)");
    find->add_option("hi", range_hi, "largest period to try (days)");

    CommonOptions r0_opts;
    std::vector<std::string> c_tokens;
    bool with_threshold = false;
    auto* r0 = app.add_subcommand("r0", "basic reproduction number at constant control levels");
    add_common_options(r0, r0_opts);
    r0->add_option("c", c_tokens, "control levels (default: 0 0.084)");
    r0->add_flag("--threshold", with_threshold, "also bisect R0(c) = 1 on [0,1]");

    CommonOptions plot_opts;
    std::string csv_path = "trajectory.csv";
    auto* plot = app.add_subcommand("plot-script", "emit a gnuplot script for a trajectory CSV");
    add_common_options(plot, plot_opts, /*scenario=*/false);
    plot->add_option("--csv", csv_path, "trajectory CSV the script should read");

    try {
        app.parse(argc, argv);

        if (sim->parsed()) {
            OutputStream out(sim_opts.out_path);
            dengue::cmd_simulate(resolve_config(sim_opts), out.get(), std::cerr);
        }
        else if (sweep->parsed()) {
            std::vector<double> periods;
            for (const auto& token : period_tokens)
                periods.push_back(parse_token(token, "period"));
            if (periods.empty())
                periods = {7, 11, 12, 15, 30};
            OutputStream out(sweep_opts.out_path);
            dengue::cmd_sweep(resolve_config(sweep_opts), periods, out.get());
        }
        else if (find->parsed()) {
            if (!(1 <= range_lo && range_lo <= range_hi))
                throw dengue::ConfigError("find-period needs 1 <= lo <= hi");
            OutputStream out(find_opts.out_path);
            dengue::cmd_find_period(resolve_config(find_opts), range_lo, range_hi, out.get());
        }
        else if (r0->parsed()) {
            std::vector<double> c_values;
            for (const auto& token : c_tokens)
                c_values.push_back(parse_token(token, "control level"));
            if (c_values.empty())
                c_values = {0.0, 0.084};
            for (double c : c_values)
                if (!(c >= 0.0))
                    throw dengue::ConfigError("control levels must be nonnegative");
            OutputStream out(r0_opts.out_path);
            dengue::cmd_r0(resolve_config(r0_opts), c_values, with_threshold, out.get());
        }
        else if (plot->parsed()) {
            OutputStream out(plot_opts.out_path);
            dengue::write_plot_script(out.get(), csv_path);
        }
    }
    catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    }
    catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }
    catch (const dengue::ConfigError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
