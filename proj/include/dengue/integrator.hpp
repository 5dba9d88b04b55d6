#ifndef DENGUE_INTEGRATOR_HPP
#define DENGUE_INTEGRATOR_HPP

#include <cstddef>
#include <vector>

#include "dengue/model.hpp"
#include "dengue/schedule.hpp"

namespace dengue {

/// Default integration step, in days. The system is non-stiff at the
/// default parameters; a fixed step keeps runs exactly reproducible.
inline constexpr double kDefaultStep = 0.01;

/// Result of a simulation run. The time grid starts at 0, ends at the
/// horizon, and contains every switch time of the schedule, so no step
/// straddles a control discontinuity. States are stored as integrated
/// (round-off dips below zero are preserved here and clamped only when
/// written out).
struct Trajectory {
    ModelParameters params;
    ControlSchedule schedule;
    std::vector<double> times;
    std::vector<StateVector> states;
    std::vector<double> levels; // control level at each grid point

    std::size_t size() const { return times.size(); }
    double horizon() const { return times.empty() ? 0.0 : times.back(); }
};

/// One classical 4th-order Runge-Kutta step with constant control.
/// Throws SimulationError if any stage or the result is non-finite.
StateVector rk4_step(const StateVector& state, const ModelParameters& params,
                     double control_level, double step);

/// Integrates the model over [0, horizon] with nominal step `step`,
/// splitting the run at every switch time of `schedule` (plus any
/// `extra_events`, e.g. another schedule's switch times when two runs must
/// share a grid). Within each segment the control is constant and equals
/// level_at at the segment's left end; the last step of a segment is
/// shortened so segment boundaries are hit exactly.
///
/// Throws SimulationError on divergence or when a state component falls
/// below -1e-9 * N_h, naming the component and time.
Trajectory simulate(const ModelParameters& params, const StateVector& initial,
                    const ControlSchedule& schedule, double horizon, double step,
                    const std::vector<double>& extra_events = {});

} // namespace dengue

#endif
