#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dengue/config.hpp"
#include "dengue/integrator.hpp"

using namespace dengue;

namespace {

double max_abs_component(const StateVector& a)
{
    double result = 0.0;
    for (double v : a.to_array())
        result = std::max(result, std::abs(v));
    return result;
}

double max_abs_diff(const StateVector& a, const StateVector& b)
{
    double result = 0.0;
    const auto xa = a.to_array(), xb = b.to_array();
    for (int i = 0; i < StateVector::kSize; ++i)
        result = std::max(result, std::abs(xa[i] - xb[i]));
    return result;
}

} // namespace

TEST_CASE("rk4_step holds the disease-free equilibrium fixed")
{
    const ScenarioConfig cfg = default_config();
    const DfeState eq = dfe(cfg.params, 0.0);
    const StateVector next = rk4_step(eq.state, cfg.params, 0.0, 0.01);
    CHECK(max_abs_diff(next, eq.state) <= 1e-12 * max_abs_component(eq.state));
}

TEST_CASE("rk4_step agrees with the derivative to first order")
{
    const ScenarioConfig cfg = default_config();
    const StateVector x0 = cfg.initial_state();
    const double h = 0.01;
    const StateVector x1 = rk4_step(x0, cfg.params, 0.0, h);
    const double rate = derivative(x0, cfg.params, 0.0).E_h; // -54.008334941...
    CHECK(std::abs((x1.E_h - x0.E_h) - h * rate) <= 5e-3); // O(h^2) residual
}

TEST_CASE("empirical convergence order is fourth-order")
{
    const ScenarioConfig cfg = default_config();
    const StateVector x0 = cfg.initial_state();
    const ControlSchedule none = ControlSchedule::zero();

    const StateVector coarse = simulate(cfg.params, x0, none, 1.0, 0.05).states.back();
    const StateVector medium = simulate(cfg.params, x0, none, 1.0, 0.025).states.back();
    const StateVector fine = simulate(cfg.params, x0, none, 1.0, 0.0125).states.back();
    const double e1 = max_abs_diff(coarse, medium);
    const double e2 = max_abs_diff(medium, fine);
    const double order = std::log2(e1 / e2);
    CHECK(order >= 3.5);
    CHECK(order <= 6.0); // sanity: not in a round-off or pre-asymptotic regime
}

TEST_CASE("step halving leaves the 84-day final state unchanged to 1e-6")
{
    const ScenarioConfig cfg = default_config();
    const ControlSchedule reference = ControlSchedule::constant(0.084);
    const StateVector a =
        simulate(cfg.params, cfg.initial_state(), reference, 84.0, 0.01).states.back();
    const StateVector b =
        simulate(cfg.params, cfg.initial_state(), reference, 84.0, 0.005).states.back();
    CHECK(max_abs_diff(a, b) <= 1e-6 * max_abs_component(b));
}

TEST_CASE("simulation from the equilibrium is a constant trajectory")
{
    const ScenarioConfig cfg = default_config();
    const DfeState eq = dfe(cfg.params, 0.0);
    const Trajectory t =
        simulate(cfg.params, eq.state, ControlSchedule::zero(), 84.0, 0.01);
    const double scale = max_abs_component(eq.state);
    for (const StateVector& s : t.states)
        CHECK(max_abs_diff(s, eq.state) <= 1e-9 * scale);
}

TEST_CASE("human population is conserved along outbreak runs")
{
    const ScenarioConfig cfg = default_config();
    for (const char* descriptor : {"zero", "constant:0.084", "pulsed:7:1:1"}) {
        const Trajectory t = simulate(cfg.params, cfg.initial_state(),
                                      parse_schedule(descriptor), 84.0, 0.01);
        double worst = 0.0;
        for (const StateVector& s : t.states)
            worst = std::max(worst, std::abs(human_total(s) - cfg.params.N_h));
        CHECK(worst <= 1e-6 * cfg.params.N_h);
    }
}

TEST_CASE("the grid hits every switch time and no step straddles one")
{
    const ScenarioConfig cfg = default_config();
    const ControlSchedule weekly = ControlSchedule::pulsed(7.0);
    const std::vector<double> extra = ControlSchedule::pulsed(11.0).switch_times(84.0);
    const Trajectory t =
        simulate(cfg.params, cfg.initial_state(), weekly, 84.0, 0.01, extra);

    CHECK(t.times.front() == 0.0);
    CHECK(t.times.back() == 84.0);
    CHECK(std::is_sorted(t.times.begin(), t.times.end()));

    std::vector<double> events = weekly.switch_times(84.0);
    events.insert(events.end(), extra.begin(), extra.end());
    for (double s : events) {
        CHECK(std::binary_search(t.times.begin(), t.times.end(), s));
        const auto after = std::upper_bound(t.times.begin(), t.times.end(), s);
        REQUIRE(after != t.times.begin());
        // the event is a grid point, never interior to a step
        CHECK(*(after - 1) == s);
    }

    // recorded level is the left-closed schedule value at each grid point
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(t.levels[i] == weekly.level_at(t.times[i]));
}

TEST_CASE("runs sharing a merged event set share a bit-identical grid")
{
    const ScenarioConfig cfg = default_config();
    const ControlSchedule weekly = ControlSchedule::pulsed(7.0);
    const Trajectory a = simulate(cfg.params, cfg.initial_state(), weekly, 84.0, 0.01);
    const Trajectory b =
        simulate(cfg.params, cfg.initial_state(), ControlSchedule::constant(0.084),
                 84.0, 0.01, weekly.switch_times(84.0));
    CHECK((a.times == b.times));
}

TEST_CASE("identical inputs give bit-identical trajectories")
{
    const ScenarioConfig cfg = default_config();
    const ControlSchedule weekly = ControlSchedule::pulsed(7.0);
    const Trajectory a = simulate(cfg.params, cfg.initial_state(), weekly, 84.0, 0.01);
    const Trajectory b = simulate(cfg.params, cfg.initial_state(), weekly, 84.0, 0.01);
    CHECK((a.times == b.times));
    CHECK((a.states == b.states));
    CHECK((a.levels == b.levels));
}

TEST_CASE("invalid runs are rejected")
{
    const ScenarioConfig cfg = default_config();
    const ControlSchedule none = ControlSchedule::zero();

    CHECK_THROWS_AS(simulate(cfg.params, cfg.initial_state(), none, -1.0, 0.01),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate(cfg.params, cfg.initial_state(), none, 10.0, 20.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(rk4_step(cfg.initial_state(), cfg.params, 0.0, 0.0),
                    std::invalid_argument);

    StateVector bad = cfg.initial_state();
    bad.I_m = -2.0;
    CHECK_THROWS_WITH_AS(simulate(cfg.params, bad, none, 10.0, 0.01),
                         doctest::Contains("I_m"), SimulationError);
}

TEST_CASE("blow-ups raise a divergence error instead of emitting garbage")
{
    ModelParameters p = default_parameters();
    p.mu_b = 1e155; // absurd recruitment: the aquatic phase explodes
    const ScenarioConfig cfg = default_config();
    CHECK_THROWS_AS(simulate(p, cfg.initial_state(), ControlSchedule::zero(), 10.0, 1.0),
                    SimulationError);
}
