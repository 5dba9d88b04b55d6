#include "dengue/model.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <string>

namespace dengue {

namespace {

// Unvalidated right-hand side. The control term -c*X appears in the three
// adult-mosquito equations and nowhere else; the aquatic phase is not
// reached by adult insecticide.
StateVector rhs(const StateVector& x, const ModelParameters& p, double c)
{
    const double human_infection = p.B * p.beta_mh * x.I_m / p.N_h * x.S_h;
    const double mosquito_infection = p.B * p.beta_hm * x.I_h / p.N_h * x.S_m;
    const double adults = x.S_m + x.E_m + x.I_m;

    StateVector d;
    d.S_h = p.mu_h * p.N_h - human_infection - p.mu_h * x.S_h;
    d.E_h = human_infection - (p.nu_h + p.mu_h) * x.E_h;
    d.I_h = p.nu_h * x.E_h - (p.eta_h + p.mu_h) * x.I_h;
    d.R_h = p.eta_h * x.I_h - p.mu_h * x.R_h;
    d.A_m = p.mu_b * (1.0 - x.A_m / p.K) * adults - (p.eta_A + p.mu_A) * x.A_m;
    d.S_m = -(p.B * p.beta_hm * x.I_h / p.N_h + p.mu_m) * x.S_m + p.eta_A * x.A_m - c * x.S_m;
    d.E_m = mosquito_infection - (p.mu_m + p.eta_m) * x.E_m - c * x.E_m;
    d.I_m = p.eta_m * x.E_m - p.mu_m * x.I_m - c * x.I_m;
    return d;
}

void require_positive(double value, const char* name)
{
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << "parameter " << name << " must be strictly positive, got " << value;
        throw ConfigError(msg.str());
    }
}

constexpr int kInfected = 4;
// indices of E_h, I_h, E_m, I_m within a state array
constexpr std::array<int, kInfected> kInfectedIndex = {1, 2, 6, 7};

} // namespace

void ModelParameters::validate() const
{
    require_positive(N_h, "N_h");
    require_positive(B, "B");
    require_positive(beta_mh, "beta_mh");
    require_positive(beta_hm, "beta_hm");
    require_positive(mu_h, "mu_h");
    require_positive(eta_h, "eta_h");
    require_positive(mu_m, "mu_m");
    require_positive(mu_b, "mu_b");
    require_positive(mu_A, "mu_A");
    require_positive(eta_A, "eta_A");
    require_positive(eta_m, "eta_m");
    require_positive(nu_h, "nu_h");
    require_positive(m, "m");
    require_positive(k, "k");
    require_positive(K, "K");
    if (beta_mh > 1.0)
        throw ConfigError("parameter beta_mh must lie in [0,1]");
    if (beta_hm > 1.0)
        throw ConfigError("parameter beta_hm must lie in [0,1]");
    if (K != k * N_h) {
        std::ostringstream msg;
        msg << "parameter K must equal k * N_h = " << k * N_h << ", got " << K;
        throw ConfigError(msg.str());
    }
}

ModelParameters default_parameters()
{
    ModelParameters p;
    p.N_h = 480000.0;
    p.B = 1.0;
    p.beta_mh = 0.375;
    p.beta_hm = 0.375;
    p.mu_h = 1.0 / (71.0 * 365.0);
    p.eta_h = 1.0 / 3.0;
    p.mu_m = 1.0 / 11.0;
    p.mu_b = 6.0;
    p.mu_A = 1.0 / 4.0;
    p.eta_A = 0.08;
    p.eta_m = 1.0 / 11.0;
    p.nu_h = 1.0 / 4.0;
    p.m = 6.0;
    p.k = 3.0;
    p.K = p.k * p.N_h;
    return p;
}

double human_total(const StateVector& state)
{
    return state.S_h + state.E_h + state.I_h + state.R_h;
}

double human_infection_rate(const StateVector& state, const ModelParameters& params)
{
    return params.B * params.beta_mh * state.I_m / params.N_h * state.S_h;
}

double mosquito_infection_rate(const StateVector& state, const ModelParameters& params)
{
    return params.B * params.beta_hm * state.I_h / params.N_h * state.S_m;
}

StateVector derivative(const StateVector& state, const ModelParameters& params,
                       double control_level)
{
    const double floor = -1e-9 * params.N_h;
    const auto a = state.to_array();
    for (int i = 0; i < StateVector::kSize; ++i) {
        if (!(a[i] >= floor)) {
            std::ostringstream msg;
            msg << "state component " << StateVector::kComponentNames[i] << " = "
                << a[i] << " is negative beyond tolerance " << floor;
            throw SimulationError(msg.str());
        }
    }
    if (!(control_level >= 0.0 && control_level <= 1.0)) {
        std::ostringstream msg;
        msg << "control level " << control_level << " outside [0,1]";
        throw SimulationError(msg.str());
    }
    return rhs(state, params, control_level);
}

DfeState dfe(const ModelParameters& params, double control_level)
{
    if (!(control_level >= 0.0))
        throw std::invalid_argument("dfe: control level must be nonnegative");

    DfeState result;
    result.control_level = control_level;
    result.state = StateVector{params.N_h, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};

    // Setting dA_m/dt = dS_m/dt = 0 with no infection gives the aquatic and
    // susceptible-adult equilibrium; a nonpositive bracket means recruitment
    // cannot offset mortality plus control and the vector dies out.
    const double loss = params.mu_m + control_level;
    const double bracket = 1.0 - (params.eta_A + params.mu_A) * loss / (params.mu_b * params.eta_A);
    if (bracket <= 0.0) {
        result.extinct = true;
        return result;
    }
    result.extinct = false;
    result.state.A_m = params.K * bracket;
    result.state.S_m = params.eta_A * result.state.A_m / loss;
    return result;
}

double compute_r0(const ModelParameters& params, double control_level)
{
    const DfeState equilibrium = dfe(params, control_level);
    if (equilibrium.extinct)
        return 0.0;

    // Linearize the infected subsystem at the equilibrium. The subsystem is
    // linear in the infected compartments once the susceptible pools are
    // held at their equilibrium values, so unit-perturbation differences
    // recover the Jacobian columns exactly.
    const auto base = equilibrium.state.to_array();
    Eigen::Matrix4d jac;            // d(infected rates)/d(infected states)
    Eigen::Matrix4d new_infections; // the cross-species infection block F
    for (int col = 0; col < kInfected; ++col) {
        auto perturbed = base;
        perturbed[kInfectedIndex[col]] += 1.0;
        const StateVector x = StateVector::from_array(perturbed);
        const StateVector d = rhs(x, params, control_level);
        const auto rates = d.to_array();
        for (int row = 0; row < kInfected; ++row)
            jac(row, col) = rates[kInfectedIndex[row]];
        new_infections(0, col) = human_infection_rate(x, params);
        new_infections(1, col) = 0.0;
        new_infections(2, col) = mosquito_infection_rate(x, params);
        new_infections(3, col) = 0.0;
    }

    // Split J = F - V; R0 is the spectral radius of F V^-1.
    const Eigen::Matrix4d transitions = new_infections - jac;
    Eigen::FullPivLU<Eigen::Matrix4d> lu(transitions);
    if (!lu.isInvertible())
        throw std::logic_error("compute_r0: singular transition matrix");
    const Eigen::Matrix4d ngm = new_infections * lu.inverse();

    Eigen::EigenSolver<Eigen::Matrix4d> eigensolver(ngm, /*computeEigenvectors=*/false);
    double radius = 0.0;
    for (int i = 0; i < 4; ++i)
        radius = std::max(radius, std::abs(eigensolver.eigenvalues()[i]));
    return radius;
}

ThresholdResult r0_threshold(const ModelParameters& params, double c_lo,
                             double c_hi, double bracket_tol)
{
    if (!(c_lo < c_hi)) {
        std::ostringstream msg;
        msg << "r0_threshold: empty search interval [" << c_lo << ", " << c_hi << "]";
        throw SimulationError(msg.str());
    }
    double f_lo = compute_r0(params, c_lo) - 1.0;
    double f_hi = compute_r0(params, c_hi) - 1.0;
    if (!(f_lo > 0.0 && f_hi < 0.0)) {
        std::ostringstream msg;
        msg << "r0_threshold: R0 - 1 not bracketed on [" << c_lo << ", " << c_hi
            << "] (endpoint values " << f_lo + 1.0 << ", " << f_hi + 1.0 << ")";
        throw SimulationError(msg.str());
    }

    double lo = c_lo, hi = c_hi;
    while (hi - lo > bracket_tol) {
        const double mid = 0.5 * (lo + hi);
        if (compute_r0(params, mid) - 1.0 > 0.0)
            lo = mid;
        else
            hi = mid;
    }

    ThresholdResult result;
    result.bracket_lo = lo;
    result.bracket_hi = hi;
    result.c_star = 0.5 * (lo + hi);
    result.r0 = compute_r0(params, result.c_star);
    if (std::abs(result.r0 - 1.0) > 1e-6)
        throw SimulationError("r0_threshold: bisection converged but |R0 - 1| > 1e-6");
    return result;
}

} // namespace dengue
