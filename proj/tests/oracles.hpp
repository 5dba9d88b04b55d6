// Test-side oracles, deliberately independent of the library code paths
// they are used to check.
#ifndef DENGUE_TESTS_ORACLES_HPP
#define DENGUE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "dengue/model.hpp"

namespace dengue::test_oracles {

// Closed-form basic reproduction number of the two-species transmission
// loop at the disease-free equilibrium, via the product of the
// human->mosquito and mosquito->human branch gains.
inline double closed_form_r0(const ModelParameters& p, double c)
{
    const double loss = p.mu_m + c;
    const double bracket = 1.0 - (p.eta_A + p.mu_A) * loss / (p.mu_b * p.eta_A);
    if (bracket <= 0.0)
        return 0.0;
    const double aquatic = p.K * bracket;
    const double susceptible_mosquitoes = p.eta_A * aquatic / loss;
    const double numerator = p.B * p.B * p.beta_mh * p.beta_hm * p.nu_h * p.eta_m *
                             (susceptible_mosquitoes / p.N_h);
    const double denominator = (p.nu_h + p.mu_h) * (p.eta_h + p.mu_h) *
                               (p.mu_m + p.eta_m + c) * loss;
    return std::sqrt(numerator / denominator);
}

// Insecticide amount of a pulsed policy by direct pulse enumeration:
// sum of level * overlap([pulse start, pulse end], [0, horizon]).
inline double pulsed_amount(double period, double pulse_length, double level,
                            double start, double horizon)
{
    double total = 0.0;
    for (long cycle = 0;; ++cycle) {
        const double on = start + static_cast<double>(cycle) * period;
        if (on >= horizon)
            break;
        const double off = std::min(on + pulse_length, horizon);
        if (off > on)
            total += level * (off - on);
    }
    return total;
}

// Discontinuities of a default one-day unit pulse with the given period,
// enumerated directly.
inline std::vector<double> pulse_switches(double period, double horizon)
{
    std::vector<double> times;
    for (long cycle = 0;; ++cycle) {
        const double on = static_cast<double>(cycle) * period;
        if (on >= horizon)
            break;
        if (on > 0.0)
            times.push_back(on);
        if (on + 1.0 < horizon)
            times.push_back(on + 1.0);
    }
    std::sort(times.begin(), times.end());
    return times;
}

} // namespace dengue::test_oracles

#endif
