#ifndef DENGUE_SCHEDULE_HPP
#define DENGUE_SCHEDULE_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dengue/errors.hpp"

namespace dengue {

// Piecewise-constant insecticide policies c(t) on t >= 0. Levels are
// capacity fractions in [0,1]. All segments follow the left-closed,
// right-open convention, so c is well defined at switch instants.

struct ZeroSchedule {
    bool operator==(const ZeroSchedule&) const = default;
};

struct ConstantSchedule {
    double level;
    bool operator==(const ConstantSchedule&) const = default;
};

/// Repeated application: `level` for `pulse_length` days at the start of
/// every `period`, beginning at `start`. Defaults model a one-day
/// full-capacity pulse anchored at t = 0.
struct PulsedSchedule {
    double period;
    double pulse_length = 1.0;
    double level = 1.0;
    double start = 0.0;
    bool operator==(const PulsedSchedule&) const = default;
};

/// Explicit switch list: level of the last switch at or before t applies.
struct PiecewiseSchedule {
    struct Segment {
        double time;
        double level;
        bool operator==(const Segment&) const = default;
    };
    std::vector<Segment> segments; // strictly increasing times, first at 0
    bool operator==(const PiecewiseSchedule&) const = default;
};

class ControlSchedule {
public:
    ControlSchedule() : impl_(ZeroSchedule{}) {}
    ControlSchedule(ZeroSchedule s) : impl_(s) {}
    ControlSchedule(ConstantSchedule s);
    ControlSchedule(PulsedSchedule s);
    ControlSchedule(PiecewiseSchedule s);

    static ControlSchedule zero() { return ControlSchedule{}; }
    static ControlSchedule constant(double level);
    static ControlSchedule pulsed(double period, double pulse_length = 1.0,
                                  double level = 1.0, double start = 0.0);
    static ControlSchedule piecewise(std::vector<PiecewiseSchedule::Segment> segments);

    /// Control level at time t >= 0 (throws SimulationError for t < 0).
    double level_at(double t) const;

    /// All discontinuity instants of c(t) strictly inside (0, horizon),
    /// sorted and deduplicated. Empty for zero/constant schedules.
    std::vector<double> switch_times(double horizon) const;

    /// Integral of c(t) over [0, horizon], computed segment by segment from
    /// the piecewise-constant structure; no quadrature error.
    double total_amount(double horizon) const;

    /// Canonical textual descriptor, e.g. "pulsed:7:1:1"; parse_schedule
    /// round-trips it.
    std::string descriptor() const;

    bool operator==(const ControlSchedule&) const = default;

private:
    std::variant<ZeroSchedule, ConstantSchedule, PulsedSchedule, PiecewiseSchedule> impl_;
};

/// Parses a schedule descriptor, case-insensitively:
///   zero
///   constant:<level>
///   pulsed:<period>[:<pulse_length>[:<level>]]
///   piecewise:<t0=v0,t1=v1,...>
/// Throws ConfigError for malformed descriptors or violated invariants.
ControlSchedule parse_schedule(std::string_view descriptor);

} // namespace dengue

#endif
