#pragma once

#include <span>
#include <vector>

#include "qotto/spin_algebra.hpp"

namespace qotto {

/// Canonical equilibrium over a discrete set of levels at inverse
/// temperature beta (k_B = 1). Beta may be negative; beta = 0 is the
/// uniform state.
struct ThermalState {
    double beta = 0.0;
    std::vector<double> energies;
    std::vector<double> populations;
    double log_z = 0.0;
};

/// p_i = exp(-beta e_i - log Z), evaluated with the exponent shifted by its
/// maximum so that |beta| * spread(e) of several hundred stays finite.
/// Throws std::invalid_argument on empty or non-finite input.
ThermalState thermal_state(std::span<const double> energies, double beta);

/// F = -ln Z / beta. Throws std::domain_error at beta = 0 (T infinite).
double free_energy(const ThermalState& state);

/// U = sum_i e_i p_i  (= -d ln Z / d beta).
double internal_energy(const ThermalState& state);

/// S = -sum_i p_i ln p_i, with 0 ln 0 = 0.
double entropy(const ThermalState& state);

/// C = beta^2 (<E^2> - <E>^2). Non-negative for either sign of beta.
double heat_capacity(const ThermalState& state);

/// Convenience: thermal state of the two-spin system at (h, J, beta).
ThermalState thermal_state(SpinKind kind, double h, double j, double beta);

/// rho = sum_i p_i P_i over the analytic eigenprojectors.
ComplexMatrix gibbs_density_matrix(SpinKind kind, double h, double j, double beta);

/// Biquartit Gibbs density matrix.
ComplexMatrix gibbs_density_matrix(double h, double j, double beta);

/// Converts a bath temperature to inverse temperature.
/// Throws std::domain_error for T = 0 or non-finite T.
double inverse_temperature(double temperature);

}  // namespace qotto
