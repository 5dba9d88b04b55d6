#ifndef DENGUE_REPORT_HPP
#define DENGUE_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dengue/config.hpp"
#include "dengue/experiments.hpp"
#include "dengue/format.hpp"

/// Writes `t,S_h,E_h,I_h,R_h,A_m,S_m,E_m,I_m,c` rows. Rows are thinned to
/// one per `output_interval` days (every n-th grid point); the final point
/// is always written. Round-off negatives are clamped to zero here only.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          double output_interval = 0.1);

/// One-line `key=value` rendering of a report.
std::string format_report_line(const StrategyReport& report);

/// Sweep table: `period,insecticide_amount,peak_I_h,t_peak_I_h,peak_I_m,
/// cumulative_infections,feasible`, one row per period plus the
/// constant-0.084 reference row.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

/// Runs the configured scenario, streaming CSV to `csv_out` and a summary
/// line to `summary_out`.
void cmd_simulate(const ScenarioConfig& config, std::ostream& csv_out,
                  std::ostream& summary_out);

/// Runs the period sweep for the configured scenario and writes the table.
void cmd_sweep(const ScenarioConfig& config, const std::vector<double>& periods,
               std::ostream& out);

/// Searches [lo, hi] for the cheapest feasible period and reports it.
void cmd_find_period(const ScenarioConfig& config, int lo, int hi,
                     std::ostream& out);

/// Tabulates (c, R0); with `threshold` also bisects R0(c) = 1 on [0,1].
void cmd_r0(const ScenarioConfig& config, const std::vector<double>& c_values,
            bool threshold, std::ostream& out);

/// Emits a gnuplot script that plots the infected series of a trajectory CSV.
void write_plot_script(std::ostream& out, const std::string& csv_path);

} // namespace dengue

#endif
