#include "dengue/schedule.hpp"

#include "dengue/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace dengue {

namespace {

// Phase snap for pulsed schedules: times within ~1e-12 of a period boundary
// count as the start of the next pulse, so event times produced by
// switch_times always land inside the pulse they open.
constexpr double kPhaseEps = 1e-12;

void require_level(double level, const char* what)
{
    if (!(level >= 0.0 && level <= 1.0)) {
        std::ostringstream msg;
        msg << what << " level " << level << " outside [0,1]";
        throw ConfigError(msg.str());
    }
}

} // namespace

ControlSchedule::ControlSchedule(ConstantSchedule s) : impl_(s)
{
    require_level(s.level, "constant schedule");
}

ControlSchedule::ControlSchedule(PulsedSchedule s) : impl_(s)
{
    if (!(s.period > 0.0))
        throw ConfigError("pulsed schedule period must be positive");
    if (!(s.pulse_length > 0.0 && s.pulse_length <= s.period))
        throw ConfigError("pulsed schedule pulse length must lie in (0, period]");
    if (!(s.start >= 0.0))
        throw ConfigError("pulsed schedule start must be nonnegative");
    require_level(s.level, "pulsed schedule");
}

ControlSchedule::ControlSchedule(PiecewiseSchedule s) : impl_(std::move(s))
{
    const auto& segments = std::get<PiecewiseSchedule>(impl_).segments;
    if (segments.empty())
        throw ConfigError("piecewise schedule needs at least one segment");
    if (segments.front().time != 0.0)
        throw ConfigError("piecewise schedule must start at time 0");
    for (std::size_t i = 0; i < segments.size(); ++i) {
        require_level(segments[i].level, "piecewise schedule");
        if (i > 0 && !(segments[i].time > segments[i - 1].time))
            throw ConfigError("piecewise schedule times must be strictly increasing");
    }
}

ControlSchedule ControlSchedule::constant(double level)
{
    return ControlSchedule(ConstantSchedule{level});
}

ControlSchedule ControlSchedule::pulsed(double period, double pulse_length,
                                        double level, double start)
{
    return ControlSchedule(PulsedSchedule{period, pulse_length, level, start});
}

ControlSchedule ControlSchedule::piecewise(std::vector<PiecewiseSchedule::Segment> segments)
{
    return ControlSchedule(PiecewiseSchedule{std::move(segments)});
}

double ControlSchedule::level_at(double t) const
{
    if (!(t >= 0.0)) {
        std::ostringstream msg;
        msg << "schedule level requested at negative time " << t;
        throw SimulationError(msg.str());
    }
    return std::visit(
        [t](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ZeroSchedule>) {
                return 0.0;
            }
            else if constexpr (std::is_same_v<T, ConstantSchedule>) {
                return s.level;
            }
            else if constexpr (std::is_same_v<T, PulsedSchedule>) {
                if (t < s.start)
                    return 0.0;
                // Pulse boundaries are recomputed with exactly the arithmetic
                // switch_times uses, so grid events and level changes agree
                // to the last bit.
                double cycle = std::floor((t - s.start) / s.period + kPhaseEps);
                double on = s.start + cycle * s.period;
                if (t < on) { // quotient rounded up across a boundary
                    cycle -= 1.0;
                    on = s.start + cycle * s.period;
                }
                return t < on + s.pulse_length ? s.level : 0.0;
            }
            else {
                double level = s.segments.front().level;
                for (const auto& seg : s.segments) {
                    if (seg.time <= t)
                        level = seg.level;
                    else
                        break;
                }
                return level;
            }
        },
        impl_);
}

std::vector<double> ControlSchedule::switch_times(double horizon) const
{
    std::vector<double> times;
    if (const auto* pulsed = std::get_if<PulsedSchedule>(&impl_)) {
        if (pulsed->pulse_length >= pulsed->period) {
            // wall-to-wall pulses: constant after the (possibly delayed) start
            if (pulsed->start > 0.0 && pulsed->start < horizon)
                times.push_back(pulsed->start);
            return times;
        }
        for (long cycle = 0;; ++cycle) {
            const double on = pulsed->start + static_cast<double>(cycle) * pulsed->period;
            if (on >= horizon)
                break;
            const double off = on + pulsed->pulse_length;
            if (on > 0.0)
                times.push_back(on);
            if (off > 0.0 && off < horizon)
                times.push_back(off);
        }
    }
    else if (const auto* piecewise = std::get_if<PiecewiseSchedule>(&impl_)) {
        for (const auto& seg : piecewise->segments)
            if (seg.time > 0.0 && seg.time < horizon)
                times.push_back(seg.time);
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

double ControlSchedule::total_amount(double horizon) const
{
    const auto switches = switch_times(horizon);
    double total = 0.0;
    double left = 0.0;
    for (double right : switches) {
        total += level_at(left) * (right - left);
        left = right;
    }
    total += level_at(left) * (horizon - left);
    return total;
}

std::string ControlSchedule::descriptor() const
{
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ZeroSchedule>) {
                return "zero";
            }
            else if constexpr (std::is_same_v<T, ConstantSchedule>) {
                return "constant:" + format_exact(s.level);
            }
            else if constexpr (std::is_same_v<T, PulsedSchedule>) {
                return "pulsed:" + format_exact(s.period) + ":" +
                       format_exact(s.pulse_length) + ":" + format_exact(s.level);
            }
            else {
                std::string text = "piecewise:";
                for (std::size_t i = 0; i < s.segments.size(); ++i) {
                    if (i > 0)
                        text += ',';
                    text += format_exact(s.segments[i].time) + "=" +
                            format_exact(s.segments[i].level);
                }
                return text;
            }
        },
        impl_);
}

namespace {

double parse_double_field(std::string_view text, std::string_view descriptor)
{
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        std::ostringstream msg;
        msg << "bad number '" << text << "' in schedule descriptor '" << descriptor << "'";
        throw ConfigError(msg.str());
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t pos = text.find(sep, begin);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(begin));
            return parts;
        }
        parts.push_back(text.substr(begin, pos - begin));
        begin = pos + 1;
    }
}

} // namespace

ControlSchedule parse_schedule(std::string_view descriptor)
{
    std::string lowered(descriptor);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });

    const auto parts = split(lowered, ':');
    const std::string_view kind = parts[0];
    try {
        if (kind == "zero") {
            if (parts.size() != 1)
                throw ConfigError("'zero' takes no arguments");
            return ControlSchedule::zero();
        }
        if (kind == "constant") {
            if (parts.size() != 2)
                throw ConfigError("'constant' needs exactly one level");
            return ControlSchedule::constant(parse_double_field(parts[1], descriptor));
        }
        if (kind == "pulsed") {
            if (parts.size() < 2 || parts.size() > 4)
                throw ConfigError("'pulsed' needs 1 to 3 arguments: period[:pulse_length[:level]]");
            PulsedSchedule s;
            s.period = parse_double_field(parts[1], descriptor);
            if (parts.size() > 2)
                s.pulse_length = parse_double_field(parts[2], descriptor);
            if (parts.size() > 3)
                s.level = parse_double_field(parts[3], descriptor);
            return ControlSchedule(s);
        }
        if (kind == "piecewise") {
            if (parts.size() != 2 || parts[1].empty())
                throw ConfigError("'piecewise' needs a t0=v0,t1=v1,... list");
            PiecewiseSchedule s;
            for (const auto entry : split(parts[1], ',')) {
                const std::size_t eq = entry.find('=');
                if (eq == std::string_view::npos)
                    throw ConfigError("piecewise entries must look like t=level");
                s.segments.push_back({parse_double_field(entry.substr(0, eq), descriptor),
                                      parse_double_field(entry.substr(eq + 1), descriptor)});
            }
            return ControlSchedule(std::move(s));
        }
    }
    catch (const ConfigError& err) {
        std::ostringstream msg;
        msg << "invalid schedule descriptor '" << descriptor << "': " << err.what();
        throw ConfigError(msg.str());
    }
    std::ostringstream msg;
    msg << "unknown schedule kind '" << kind
        << "'; expected zero, constant:<level>, pulsed:<period>[:<pulse_length>[:<level>]], "
           "or piecewise:<t0=v0,...>";
    throw ConfigError(msg.str());
}

} // namespace dengue
