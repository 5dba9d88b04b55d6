#include "dengue/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dengue {

namespace {

bool all_finite(const StateVector& state)
{
    for (double v : state.to_array())
        if (!std::isfinite(v))
            return false;
    return true;
}

void check_state(const StateVector& state, const ModelParameters& params, double t)
{
    const double floor = -1e-9 * params.N_h;
    const auto a = state.to_array();
    for (int i = 0; i < StateVector::kSize; ++i) {
        if (!std::isfinite(a[i])) {
            std::ostringstream msg;
            msg << "simulation diverged: " << StateVector::kComponentNames[i]
                << " is non-finite at t = " << t;
            throw SimulationError(msg.str());
        }
        if (a[i] < floor) {
            std::ostringstream msg;
            msg << "state component " << StateVector::kComponentNames[i] << " = " << a[i]
                << " fell below tolerance " << floor << " at t = " << t;
            throw SimulationError(msg.str());
        }
    }
}

} // namespace

StateVector rk4_step(const StateVector& state, const ModelParameters& params,
                     double control_level, double step)
{
    if (!(step > 0.0))
        throw std::invalid_argument("rk4_step: step must be positive");

    const StateVector k1 = derivative(state, params, control_level);
    const StateVector k2 = derivative(state + (0.5 * step) * k1, params, control_level);
    const StateVector k3 = derivative(state + (0.5 * step) * k2, params, control_level);
    const StateVector k4 = derivative(state + step * k3, params, control_level);
    const StateVector next =
        state + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!all_finite(k1) || !all_finite(k2) || !all_finite(k3) || !all_finite(k4) ||
        !all_finite(next))
        throw SimulationError("rk4_step: non-finite value encountered; step diverged");
    return next;
}

Trajectory simulate(const ModelParameters& params, const StateVector& initial,
                    const ControlSchedule& schedule, double horizon, double step,
                    const std::vector<double>& extra_events)
{
    params.validate();
    if (!(horizon > 0.0))
        throw std::invalid_argument("simulate: horizon must be positive");
    if (!(step > 0.0 && step <= horizon))
        throw std::invalid_argument("simulate: need 0 < step <= horizon");
    check_state(initial, params, 0.0);

    // Segment boundaries: every control discontinuity, plus any externally
    // imposed events so that two runs can share one grid.
    std::vector<double> events = schedule.switch_times(horizon);
    for (double t : extra_events)
        if (t > 0.0 && t < horizon)
            events.push_back(t);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    events.push_back(horizon);

    Trajectory trajectory;
    trajectory.params = params;
    trajectory.schedule = schedule;
    const auto estimated = static_cast<std::size_t>(
        std::min(std::ceil(horizon / step) + static_cast<double>(events.size()) + 1.0, 1e7));
    trajectory.times.reserve(estimated);
    trajectory.states.reserve(estimated);
    trajectory.levels.reserve(estimated);

    trajectory.times.push_back(0.0);
    trajectory.states.push_back(initial);
    trajectory.levels.push_back(schedule.level_at(0.0));

    StateVector state = initial;
    double left = 0.0;
    for (double right : events) {
        const double level = schedule.level_at(left);
        const double segment = right - left;
        const auto steps = static_cast<long>(std::ceil(segment / step - 1e-9));
        double t_prev = left;
        for (long i = 1; i <= steps; ++i) {
            // Land exactly on the segment boundary with a shortened last step.
            const double t = (i == steps) ? right : left + static_cast<double>(i) * step;
            state = rk4_step(state, params, level, t - t_prev);
            check_state(state, params, t);
            trajectory.times.push_back(t);
            trajectory.states.push_back(state);
            // A grid point on a switch instant reports the left-closed value,
            // i.e. the level of the segment it opens.
            trajectory.levels.push_back(schedule.level_at(t));
            t_prev = t;
        }
        left = right;
    }
    return trajectory;
}

} // namespace dengue
