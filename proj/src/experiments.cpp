#include "dengue/experiments.hpp"

#include <algorithm>
#include <sstream>

namespace dengue {

namespace {

double infected_component(const StateVector& state, InfectedSeries series)
{
    return series == InfectedSeries::Humans ? state.I_h : state.I_m;
}

[[noreturn]] void annotate_period(const std::exception& err, double period)
{
    std::ostringstream msg;
    msg << "period " << period << ": " << err.what();
    throw SimulationError(msg.str());
}

} // namespace

StrategyReport metrics(const Trajectory& trajectory)
{
    if (trajectory.size() == 0)
        throw std::invalid_argument("metrics: empty trajectory");

    StrategyReport report;
    report.schedule = trajectory.schedule.descriptor();
    report.peak_I_h = trajectory.states[0].I_h;
    report.t_peak_I_h = trajectory.times[0];
    report.peak_I_m = trajectory.states[0].I_m;
    report.t_peak_I_m = trajectory.times[0];
    report.cumulative_infections = 0.0;

    for (std::size_t i = 1; i < trajectory.size(); ++i) {
        const StateVector& s = trajectory.states[i];
        if (s.I_h > report.peak_I_h) { // strict: ties keep the earliest time
            report.peak_I_h = s.I_h;
            report.t_peak_I_h = trajectory.times[i];
        }
        if (s.I_m > report.peak_I_m) {
            report.peak_I_m = s.I_m;
            report.t_peak_I_m = trajectory.times[i];
        }
        // incidence integral of nu_h * E_h, trapezoidal on the grid
        const double dt = trajectory.times[i] - trajectory.times[i - 1];
        report.cumulative_infections += 0.5 * dt * trajectory.params.nu_h *
                                        (trajectory.states[i - 1].E_h + s.E_h);
    }
    report.insecticide_amount = trajectory.schedule.total_amount(trajectory.horizon());
    return report;
}

bool dominates(const Trajectory& candidate, const Trajectory& reference,
               InfectedSeries series)
{
    if (candidate.size() != reference.size() ||
        !std::equal(candidate.times.begin(), candidate.times.end(),
                    reference.times.begin())) {
        throw SimulationError(
            "dominates: time grids differ; re-simulate both schedules on the "
            "merged switch-time set");
    }
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        if (infected_component(candidate.states[i], series) >
            infected_component(reference.states[i], series))
            return false;
    }
    return true;
}

SweepResult sweep_periods(const ModelParameters& params, const StateVector& initial,
                          const std::vector<double>& periods, double horizon,
                          double step)
{
    if (periods.empty())
        throw std::invalid_argument("sweep_periods: empty period list");
    for (double p : periods)
        if (!(p > 0.0))
            throw std::invalid_argument("sweep_periods: periods must be positive");

    const ControlSchedule reference = ControlSchedule::constant(kReferenceControlLevel);

    SweepResult result;
    result.periods.reserve(periods.size());
    for (double period : periods) {
        try {
            const ControlSchedule candidate = ControlSchedule::pulsed(period);
            const Trajectory run = simulate(params, initial, candidate, horizon, step);
            // Same grid for both curves: re-run the reference with the
            // candidate's switch times injected as events.
            const Trajectory reference_run = simulate(
                params, initial, reference, horizon, step, candidate.switch_times(horizon));
            StrategyReport report = metrics(run);
            report.feasible_vs_reference =
                dominates(run, reference_run, InfectedSeries::Humans);
            result.periods.push_back({period, std::move(report)});
        }
        catch (const SimulationError& err) {
            annotate_period(err, period);
        }
    }

    const Trajectory reference_run = simulate(params, initial, reference, horizon, step);
    result.reference = metrics(reference_run);
    result.reference.feasible_vs_reference = true; // dominance is reflexive
    return result;
}

BestPeriodResult find_best_period(const ModelParameters& params,
                                  const StateVector& initial, int lo, int hi,
                                  double horizon, double step)
{
    if (!(1 <= lo && lo <= hi))
        throw std::invalid_argument("find_best_period: need 1 <= lo <= hi");

    std::vector<double> periods;
    periods.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int p = lo; p <= hi; ++p)
        periods.push_back(p);

    SweepResult sweep = sweep_periods(params, initial, periods, horizon, step);

    // Insecticide amount is non-increasing in the period, so the largest
    // feasible period is the cheapest choice.
    const PeriodReport* best = nullptr;
    for (const auto& entry : sweep.periods)
        if (entry.report.feasible_vs_reference.value_or(false))
            best = &entry;
    if (best == nullptr) {
        std::ostringstream msg;
        msg << "no feasible period in [" << lo << ", " << hi
            << "]: every pulsed run exceeds the constant-"
            << kReferenceControlLevel << " infected-human curve; sweep:";
        for (const auto& entry : sweep.periods)
            msg << "\n  period " << entry.period << ": peak_I_h = "
                << entry.report.peak_I_h << ", amount = "
                << entry.report.insecticide_amount;
        msg << "\n  reference: peak_I_h = " << sweep.reference.peak_I_h
            << ", amount = " << sweep.reference.insecticide_amount;
        throw NoFeasiblePeriodError(msg.str(), std::move(sweep));
    }
    return {static_cast<int>(best->period), best->report};
}

} // namespace dengue
