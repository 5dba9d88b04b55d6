#include "dengue/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace dengue {

namespace {

double clamp_output(double value)
{
    // Round-off can leave dust below zero; emitted data is physical.
    return value < 0.0 ? 0.0 : value;
}

void write_row(std::ostream& out, const Trajectory& trajectory, std::size_t i)
{
    out << format_number(trajectory.times[i]);
    for (double v : trajectory.states[i].to_array())
        out << ',' << format_number(clamp_output(v));
    out << ',' << format_number(trajectory.levels[i]) << '\n';
}

} // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          double output_interval)
{
    out << "t,S_h,E_h,I_h,R_h,A_m,S_m,E_m,I_m,c\n";
    if (trajectory.size() == 0)
        return;

    std::size_t stride = 1;
    if (output_interval > 0.0 && trajectory.size() > 1) {
        // Nominal step recovered from the grid; events only shorten steps.
        const double step = trajectory.times[1] - trajectory.times[0];
        const double ratio = output_interval / step;
        if (ratio > 1.0)
            stride = static_cast<std::size_t>(std::llround(ratio));
    }
    std::size_t last_written = 0;
    for (std::size_t i = 0; i < trajectory.size(); i += stride) {
        write_row(out, trajectory, i);
        last_written = i;
    }
    if (last_written != trajectory.size() - 1)
        write_row(out, trajectory, trajectory.size() - 1);
}

std::string format_report_line(const StrategyReport& report)
{
    std::string line = "schedule=" + report.schedule;
    line += " peak_I_h=" + format_number(report.peak_I_h);
    line += " t_peak_I_h=" + format_number(report.t_peak_I_h);
    line += " peak_I_m=" + format_number(report.peak_I_m);
    line += " t_peak_I_m=" + format_number(report.t_peak_I_m);
    line += " cumulative_infections=" + format_number(report.cumulative_infections);
    line += " insecticide_amount=" + format_number(report.insecticide_amount);
    if (report.feasible_vs_reference)
        line += std::string(" feasible=") + (*report.feasible_vs_reference ? "true" : "false");
    return line;
}

namespace {

void write_sweep_row(std::ostream& out, const std::string& label,
                     const StrategyReport& report)
{
    out << label << ',' << format_number(report.insecticide_amount) << ','
        << format_number(report.peak_I_h) << ',' << format_number(report.t_peak_I_h)
        << ',' << format_number(report.peak_I_m) << ','
        << format_number(report.cumulative_infections) << ','
        << (report.feasible_vs_reference.value_or(false) ? "true" : "false") << '\n';
}

} // namespace

void write_sweep_csv(std::ostream& out, const SweepResult& sweep)
{
    out << "period,insecticide_amount,peak_I_h,t_peak_I_h,peak_I_m,"
           "cumulative_infections,feasible\n";
    for (const auto& entry : sweep.periods)
        write_sweep_row(out, format_exact(entry.period), entry.report);
    write_sweep_row(out, "constant_" + format_exact(kReferenceControlLevel),
                    sweep.reference);
}

void cmd_simulate(const ScenarioConfig& config, std::ostream& csv_out,
                  std::ostream& summary_out)
{
    const Trajectory trajectory =
        simulate(config.params, config.initial_state(), config.parsed_schedule(),
                 config.t_f, config.h);
    write_trajectory_csv(csv_out, trajectory);
    summary_out << format_report_line(metrics(trajectory)) << '\n';
}

void cmd_sweep(const ScenarioConfig& config, const std::vector<double>& periods,
               std::ostream& out)
{
    const SweepResult sweep =
        sweep_periods(config.params, config.initial_state(), periods, config.t_f, config.h);
    write_sweep_csv(out, sweep);
}

void cmd_find_period(const ScenarioConfig& config, int lo, int hi, std::ostream& out)
{
    const BestPeriodResult best =
        find_best_period(config.params, config.initial_state(), lo, hi, config.t_f, config.h);
    out << "best_period=" << best.period << '\n'
        << format_report_line(best.report) << '\n';
}

void cmd_r0(const ScenarioConfig& config, const std::vector<double>& c_values,
            bool threshold, std::ostream& out)
{
    out << "c,R0\n";
    for (double c : c_values)
        out << format_exact(c) << ',' << format_number(compute_r0(config.params, c))
            << '\n';
    if (threshold) {
        const ThresholdResult result = r0_threshold(config.params, 0.0, 1.0);
        out << "# threshold c* = " << format_number(result.c_star)
            << " (R0(c*) = " << format_number(result.r0) << ")\n";
    }
}

void write_plot_script(std::ostream& out, const std::string& csv_path)
{
    out << "# gnuplot script: infected humans and mosquitoes from a trajectory CSV\n"
        << "set datafile separator ','\n"
        << "set xlabel 'time (days)'\n"
        << "set ylabel 'individuals'\n"
        << "set key top left\n"
        << "plot '" << csv_path << "' using 1:4 with lines title 'infected humans (I_h)', \\\n"
        << "     '" << csv_path << "' using 1:9 with lines title 'infected mosquitoes (I_m)'\n"
        << "pause -1 'press enter to close'\n";
}

} // namespace dengue
