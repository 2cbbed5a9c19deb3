#include "qotto/gibbs_thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qotto/spectrum.hpp"

namespace qotto {

ThermalState thermal_state(std::span<const double> energies, double beta) {
    if (energies.empty()) {
        throw std::invalid_argument("thermal_state: no energy levels");
    }
    if (!std::isfinite(beta)) {
        throw std::invalid_argument("thermal_state: beta is not finite");
    }
    for (double e : energies) {
        if (!std::isfinite(e)) throw std::invalid_argument("thermal_state: energy is not finite");
    }

    ThermalState state;
    state.beta = beta;
    state.energies.assign(energies.begin(), energies.end());
    state.populations.resize(energies.size());

    double shift = -beta * energies[0];
    for (double e : energies) shift = std::max(shift, -beta * e);

    double sum = 0.0;
    for (std::size_t i = 0; i < energies.size(); ++i) {
        state.populations[i] = std::exp(-beta * energies[i] - shift);
        sum += state.populations[i];
    }
    for (double& p : state.populations) p /= sum;
    state.log_z = shift + std::log(sum);
    return state;
}

ThermalState thermal_state(SpinKind kind, double h, double j, double beta) {
    const auto e = levels(kind, h, j);
    return thermal_state(e, beta);
}

double free_energy(const ThermalState& state) {
    if (state.beta == 0.0) {
        throw std::domain_error("free_energy: undefined at infinite temperature (beta = 0)");
    }
    return -state.log_z / state.beta;
}

double internal_energy(const ThermalState& state) {
    double u = 0.0;
    for (std::size_t i = 0; i < state.energies.size(); ++i) {
        u += state.energies[i] * state.populations[i];
    }
    return u;
}

double entropy(const ThermalState& state) {
    double s = 0.0;
    for (double p : state.populations) {
        if (p > 0.0) s -= p * std::log(p);
    }
    return s;
}

double heat_capacity(const ThermalState& state) {
    const double u = internal_energy(state);
    double variance = 0.0;
    for (std::size_t i = 0; i < state.energies.size(); ++i) {
        const double d = state.energies[i] - u;
        variance += d * d * state.populations[i];
    }
    return state.beta * state.beta * variance;
}

ComplexMatrix gibbs_density_matrix(SpinKind kind, double h, double j, double beta) {
    if (beta == 0.0) {
        // Completeness of the projectors; exact, without summation rounding.
        const int dim = level_count(kind);
        return ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    }
    const auto state = thermal_state(kind, h, j, beta);
    const auto vectors = eigenvectors(kind);
    const int dim = static_cast<int>(state.populations.size());
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const auto& v = vectors[static_cast<std::size_t>(i)];
        rho.noalias() += state.populations[static_cast<std::size_t>(i)] * (v * v.adjoint());
    }
    return rho;
}

ComplexMatrix gibbs_density_matrix(double h, double j, double beta) {
    return gibbs_density_matrix(SpinKind::ThreeHalves, h, j, beta);
}

double inverse_temperature(double temperature) {
    if (temperature == 0.0 || !std::isfinite(temperature)) {
        throw std::domain_error("temperature must be finite and nonzero");
    }
    return 1.0 / temperature;
}

}  // namespace qotto
