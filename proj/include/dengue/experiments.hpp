#ifndef DENGUE_EXPERIMENTS_HPP
#define DENGUE_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dengue/integrator.hpp"

namespace dengue {

/// Constant control level that keeps the basic reproduction number just
/// below one; the reference all pulsed strategies are compared against.
inline constexpr double kReferenceControlLevel = 0.084;

enum class InfectedSeries { Humans, Mosquitoes };

/// Per-strategy summary metrics.
struct StrategyReport {
    std::string schedule;          // descriptor text
    double peak_I_h;               // grid maximum, earliest time on ties
    double t_peak_I_h;
    double peak_I_m;
    double t_peak_I_m;
    double cumulative_infections;  // integral of nu_h * E_h over the run
    double insecticide_amount;     // integral of c(t) over the run
    std::optional<bool> feasible_vs_reference;
};

/// Summary metrics of a trajectory; the feasibility flag is left unset.
StrategyReport metrics(const Trajectory& trajectory);

/// True iff the candidate's infected series stays at or below the
/// reference's at every shared grid point (non-strict). Both trajectories
/// must have identical time grids; re-simulate on the merged switch-time
/// set first (see sweep_periods), else this throws SimulationError.
bool dominates(const Trajectory& candidate, const Trajectory& reference,
               InfectedSeries series);

struct PeriodReport {
    double period;
    StrategyReport report;
};

struct SweepResult {
    std::vector<PeriodReport> periods; // input order
    StrategyReport reference;          // the constant-0.084 run
};

/// Simulates a one-day full-capacity pulse for each period and compares the
/// infected-human curve against the constant-0.084 reference re-simulated on
/// the candidate's switch-time grid. Throws std::invalid_argument for an
/// empty period list; simulation errors are annotated with the period.
SweepResult sweep_periods(const ModelParameters& params, const StateVector& initial,
                          const std::vector<double>& periods, double horizon,
                          double step);

struct BestPeriodResult {
    int period;
    StrategyReport report;
};

/// Raised when no period in the searched range is feasible; carries the
/// full sweep for diagnostics.
class NoFeasiblePeriodError : public SimulationError {
public:
    NoFeasiblePeriodError(std::string message, SweepResult sweep_result)
        : SimulationError(std::move(message)), sweep(std::move(sweep_result))
    {
    }
    SweepResult sweep;
};

/// Largest integer period in [lo, hi] whose infected-human curve stays below
/// the constant-0.084 reference. Larger periods use less insecticide, so the
/// largest feasible period is the cheapest.
BestPeriodResult find_best_period(const ModelParameters& params,
                                  const StateVector& initial, int lo, int hi,
                                  double horizon, double step);

} // namespace dengue

#endif
