#ifndef DENGUE_MODEL_HPP
#define DENGUE_MODEL_HPP

#include <array>
#include <string_view>

#include "dengue/errors.hpp"

namespace dengue {

/// Rate constants and population scalars of the transmission model.
/// All rates are per day; time is measured in days throughout.
struct ModelParameters {
    double N_h;     // total human population
    double B;       // average daily biting rate (1/day)
    double beta_mh; // transmission probability per bite, mosquito -> human
    double beta_hm; // transmission probability per bite, human -> mosquito
    double mu_h;    // human mortality rate (1/day)
    double eta_h;   // human recovery rate (1/day)
    double mu_m;    // adult mosquito mortality rate (1/day)
    double mu_b;    // eggs per deposit per capita (1/day)
    double mu_A;    // larval mortality rate (1/day)
    double eta_A;   // larva-to-adult maturation rate (1/day)
    double eta_m;   // mosquito incubation rate (1/day)
    double nu_h;    // human incubation rate (1/day)
    double m;       // female mosquitoes per human
    double k;       // larvae per human
    double K;       // maximal larval capacity, k * N_h

    // Throws ConfigError naming the offending field. Requires all fields
    // strictly positive, both betas in [0,1], and K == k * N_h.
    void validate() const;

    bool operator==(const ModelParameters&) const = default;
};

/// Built-in scenario: 2009 Cape Verde outbreak data for the human side,
/// Aedes aegypti life-cycle rates from the Brazilian literature.
ModelParameters default_parameters();

/// One point of the state space: four human and four mosquito compartments.
struct StateVector {
    double S_h; // susceptible humans
    double E_h; // exposed humans
    double I_h; // infectious humans
    double R_h; // recovered humans
    double A_m; // aquatic-phase mosquitoes (egg, larva, pupa)
    double S_m; // susceptible adult mosquitoes
    double E_m; // exposed adult mosquitoes
    double I_m; // infectious adult mosquitoes

    static constexpr int kSize = 8;
    static constexpr std::array<std::string_view, kSize> kComponentNames = {
        "S_h", "E_h", "I_h", "R_h", "A_m", "S_m", "E_m", "I_m"};

    std::array<double, kSize> to_array() const
    {
        return {S_h, E_h, I_h, R_h, A_m, S_m, E_m, I_m};
    }
    static StateVector from_array(const std::array<double, kSize>& a)
    {
        return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
    }

    bool operator==(const StateVector&) const = default;
};

inline StateVector operator+(const StateVector& a, const StateVector& b)
{
    return {a.S_h + b.S_h, a.E_h + b.E_h, a.I_h + b.I_h, a.R_h + b.R_h,
            a.A_m + b.A_m, a.S_m + b.S_m, a.E_m + b.E_m, a.I_m + b.I_m};
}

inline StateVector operator*(double s, const StateVector& a)
{
    return {s * a.S_h, s * a.E_h, s * a.I_h, s * a.R_h,
            s * a.A_m, s * a.S_m, s * a.E_m, s * a.I_m};
}

/// Disease-free equilibrium for a constant control level. When the control
/// (plus natural mortality) exceeds what larval recruitment can sustain, the
/// vector population collapses and the extinction equilibrium (A_m = S_m = 0)
/// is returned with `extinct` set.
struct DfeState {
    StateVector state;
    double control_level;
    bool extinct;
};

/// S_h + E_h + I_h + R_h.
double human_total(const StateVector& state);

/// Right-hand side of the transmission model at control level c.
/// The control removes adult mosquitoes only (S_m, E_m, I_m); the aquatic
/// phase is unaffected. Throws SimulationError if a state component lies
/// below -1e-9 * N_h or if c is outside [0,1].
StateVector derivative(const StateVector& state, const ModelParameters& params,
                       double control_level);

/// Rate of new human infections, B * beta_mh * I_m / N_h * S_h.
double human_infection_rate(const StateVector& state, const ModelParameters& params);

/// Rate of new mosquito infections, B * beta_hm * I_h / N_h * S_m.
double mosquito_infection_rate(const StateVector& state, const ModelParameters& params);

/// Disease-free equilibrium under constant control c >= 0.
DfeState dfe(const ModelParameters& params, double control_level);

/// Basic reproduction number at constant control c >= 0: spectral radius of
/// the next-generation matrix assembled by linearizing the infected
/// subsystem (E_h, I_h, E_m, I_m) at the disease-free equilibrium.
/// Returns 0 for the extinction equilibrium.
double compute_r0(const ModelParameters& params, double control_level);

struct ThresholdResult {
    double c_star;     // midpoint of the final bracket
    double bracket_lo; // final bracket, width <= requested tolerance
    double bracket_hi;
    double r0;         // compute_r0(c_star)
};

/// Bisects compute_r0(c) - 1 on [c_lo, c_hi]. Requires R0(c_lo) > 1 > R0(c_hi);
/// throws SimulationError otherwise. The returned c_star satisfies
/// |R0(c_star) - 1| <= 1e-6.
ThresholdResult r0_threshold(const ModelParameters& params, double c_lo,
                             double c_hi, double bracket_tol = 1e-8);

} // namespace dengue

#endif
