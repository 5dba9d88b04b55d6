#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dengue/schedule.hpp"
#include "oracles.hpp"

using namespace dengue;

TEST_CASE("level_at follows the left-closed, right-open convention")
{
    const ControlSchedule weekly = ControlSchedule::pulsed(7.0);
    CHECK(weekly.level_at(0.5) == 1.0);
    CHECK(weekly.level_at(3.0) == 0.0);
    CHECK(weekly.level_at(1.0) == 0.0); // pulse ends, right-open
    CHECK(weekly.level_at(7.0) == 1.0); // next pulse begins, left-closed

    CHECK(ControlSchedule::constant(0.084).level_at(42.0) == 0.084);
    CHECK(ControlSchedule::zero().level_at(12.3) == 0.0);

    const ControlSchedule steps =
        ControlSchedule::piecewise({{0.0, 0.3}, {5.5, 0.0}, {20.0, 1.0}});
    CHECK(steps.level_at(0.0) == 0.3);
    CHECK(steps.level_at(5.4) == 0.3);
    CHECK(steps.level_at(5.5) == 0.0);
    CHECK(steps.level_at(25.0) == 1.0);

    CHECK_THROWS_AS(weekly.level_at(-0.1), SimulationError);
}

TEST_CASE("delayed pulse trains are off before their start")
{
    const ControlSchedule delayed = ControlSchedule::pulsed(7.0, 1.0, 1.0, 3.0);
    CHECK(delayed.level_at(0.0) == 0.0);
    CHECK(delayed.level_at(2.9) == 0.0);
    CHECK(delayed.level_at(3.0) == 1.0);
    CHECK(delayed.level_at(10.5) == 1.0);
}

TEST_CASE("schedule invariants are enforced at construction")
{
    CHECK_THROWS_AS(ControlSchedule::constant(1.5), ConfigError);
    CHECK_THROWS_AS(ControlSchedule::constant(-0.1), ConfigError);
    CHECK_THROWS_AS(ControlSchedule::pulsed(0.0), ConfigError);
    CHECK_THROWS_AS(ControlSchedule::pulsed(7.0, 8.0), ConfigError); // pulse > period
    CHECK_THROWS_AS(ControlSchedule::pulsed(7.0, 1.0, 2.0), ConfigError);
    CHECK_THROWS_AS(ControlSchedule::piecewise({}), ConfigError);
    CHECK_THROWS_AS(ControlSchedule::piecewise({{1.0, 0.5}}), ConfigError);
    CHECK_THROWS_AS(ControlSchedule::piecewise({{0.0, 0.5}, {0.0, 0.2}}), ConfigError);
}

TEST_CASE("switch_times enumerates every discontinuity inside the horizon")
{
    CHECK(ControlSchedule::constant(0.084).switch_times(84.0).empty());
    CHECK(ControlSchedule::zero().switch_times(84.0).empty());

    CHECK((ControlSchedule::pulsed(7.0).switch_times(84.0) ==
          test_oracles::pulse_switches(7.0, 84.0)));
    CHECK((ControlSchedule::pulsed(30.0).switch_times(84.0) ==
          std::vector<double>{1.0, 30.0, 31.0, 60.0, 61.0}));
    CHECK((ControlSchedule::pulsed(11.0).switch_times(84.0) ==
          test_oracles::pulse_switches(11.0, 84.0)));

    // wall-to-wall pulses have no discontinuities
    CHECK(ControlSchedule::pulsed(5.0, 5.0, 0.7).switch_times(84.0).empty());

    const ControlSchedule steps =
        ControlSchedule::piecewise({{0.0, 0.3}, {5.5, 0.0}, {20.0, 1.0}, {90.0, 0.0}});
    CHECK((steps.switch_times(84.0) == std::vector<double>{5.5, 20.0}));
}

TEST_CASE("total_amount integrates the step function exactly")
{
    CHECK(ControlSchedule::pulsed(7.0).total_amount(84.0) == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(ControlSchedule::pulsed(11.0).total_amount(84.0) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(ControlSchedule::pulsed(12.0).total_amount(84.0) == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(ControlSchedule::pulsed(15.0).total_amount(84.0) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(ControlSchedule::pulsed(30.0).total_amount(84.0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(ControlSchedule::constant(0.084).total_amount(84.0) ==
          doctest::Approx(7.056).epsilon(1e-12));
    CHECK(ControlSchedule::zero().total_amount(84.0) == 0.0);

    // a pulse truncated by the horizon contributes only its in-horizon part
    CHECK(ControlSchedule::pulsed(10.0, 3.0, 0.5).total_amount(12.0) ==
          doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("total_amount matches pulse enumeration for random pulse trains")
{
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> period_dist(0.5, 40.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double period = period_dist(rng);
        const double pulse_length = period * (0.05 + 0.95 * unit(rng));
        const double level = unit(rng);
        const double start = 5.0 * unit(rng);
        const double horizon = 20.0 + 80.0 * unit(rng);
        const ControlSchedule s = ControlSchedule::pulsed(period, pulse_length, level, start);
        const double expected =
            test_oracles::pulsed_amount(period, pulse_length, level, start, horizon);
        CHECK(s.total_amount(horizon) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("level is constant between consecutive switch times")
{
    const double horizon = 84.0;
    const std::vector<ControlSchedule> schedules = {
        ControlSchedule::pulsed(7.0),
        ControlSchedule::pulsed(11.3, 2.7, 0.6, 0.4),
        ControlSchedule::piecewise({{0.0, 0.3}, {5.5, 0.0}, {20.0, 1.0}}),
        ControlSchedule::constant(0.42),
        ControlSchedule::zero(),
    };
    for (const auto& s : schedules) {
        std::vector<double> bounds = {0.0};
        for (double t : s.switch_times(horizon))
            bounds.push_back(t);
        bounds.push_back(horizon);
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
            const double left = bounds[i], right = bounds[i + 1];
            const double at_left = s.level_at(left);
            for (double frac : {0.25, 0.5, 0.75})
                CHECK(s.level_at(left + frac * (right - left)) == at_left);
        }
    }
}

TEST_CASE("a pulse covering the whole period behaves like a constant")
{
    const ControlSchedule pulsed = ControlSchedule::pulsed(5.0, 5.0, 0.7);
    const ControlSchedule constant = ControlSchedule::constant(0.7);
    for (double t = 0.0; t <= 84.0; t += 0.37)
        CHECK(pulsed.level_at(t) == constant.level_at(t));
}

TEST_CASE("insecticide amount never increases with the pulse period")
{
    double previous = ControlSchedule::pulsed(1.0).total_amount(84.0);
    for (int period = 2; period <= 30; ++period) {
        const double amount = ControlSchedule::pulsed(period).total_amount(84.0);
        CHECK(amount <= previous);
        previous = amount;
    }
}

TEST_CASE("descriptors parse case-insensitively and round-trip")
{
    CHECK((parse_schedule("zero") == ControlSchedule::zero()));
    CHECK((parse_schedule("ZERO") == ControlSchedule::zero()));
    CHECK((parse_schedule("constant:0.084") == ControlSchedule::constant(0.084)));
    CHECK((parse_schedule("Pulsed:7:1:1") == ControlSchedule::pulsed(7.0)));
    CHECK((parse_schedule("pulsed:7") == ControlSchedule::pulsed(7.0))); // defaults fill in
    CHECK((parse_schedule("pulsed:11:2.5") == ControlSchedule::pulsed(11.0, 2.5)));
    CHECK((parse_schedule("piecewise:0=0.5,10=0") ==
          ControlSchedule::piecewise({{0.0, 0.5}, {10.0, 0.0}})));

    const std::vector<ControlSchedule> schedules = {
        ControlSchedule::zero(),
        ControlSchedule::constant(0.084),
        ControlSchedule::pulsed(7.0),
        ControlSchedule::pulsed(11.3, 2.7, 0.6),
        ControlSchedule::piecewise({{0.0, 0.5}, {10.0, 0.0}, {21.5, 0.25}}),
    };
    for (const auto& s : schedules)
        CHECK((parse_schedule(s.descriptor()) == s));
}

TEST_CASE("malformed descriptors are rejected with context")
{
    CHECK_THROWS_AS(parse_schedule("pulsed:abc"), ConfigError);
    CHECK_THROWS_AS(parse_schedule("pulsed"), ConfigError);
    CHECK_THROWS_AS(parse_schedule("constant:1.5"), ConfigError);
    CHECK_THROWS_AS(parse_schedule("constant"), ConfigError);
    CHECK_THROWS_AS(parse_schedule("wavelet:3"), ConfigError);
    CHECK_THROWS_AS(parse_schedule("piecewise:5=1"), ConfigError);  // must start at 0
    CHECK_THROWS_AS(parse_schedule("piecewise:0=x"), ConfigError);
    CHECK_THROWS_AS(parse_schedule("pulsed:7:9"), ConfigError);     // pulse > period
    CHECK_THROWS_WITH(parse_schedule("pulsed:7:oops"), doctest::Contains("oops"));
}
