#include "qotto/local_quartit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qotto/gibbs_thermo.hpp"
#include "qotto/spectrum.hpp"

namespace qotto {

namespace {

constexpr double kClampFloor = -1e-14;
constexpr double kSingularSlope = 1e-12;

}  // namespace

std::array<double, 4> local_energies(double h) {
    return {1.5 * h, 0.5 * h, -0.5 * h, -1.5 * h};
}

LocalState reduce_closed_form(std::span<const double> p, double h) {
    if (p.size() != kBiquartitLevels) {
        throw std::invalid_argument("reduce_closed_form: expected 16 level populations");
    }
    // 1-based aliases keep the combinations readable against the level list.
    const auto q = [&](int i) { return p[static_cast<std::size_t>(i - 1)]; };

    std::array<double, 4> pi{
        (5.0 - 5.0 * q(1) + q(2) - 5.0 * q(3) - 5.0 * q(4) - 5.0 * q(5) + 5.0 * q(6) +
         5.0 * q(7) + 4.0 * q(9) - 4.0 * q(11) + 15.0 * q(12) - 5.0 * q(13) - 5.0 * q(14) -
         q(15) + 5.0 * q(16)) / 20.0,
        (5.0 + q(1) + 3.0 * q(2) - 5.0 * q(3) + 5.0 * q(4) - 5.0 * q(5) - 5.0 * q(6) +
         5.0 * q(7) - 4.0 * q(9) + 4.0 * q(11) - 5.0 * q(12) - 5.0 * q(13) - q(14) +
         7.0 * q(15) + 5.0 * q(16)) / 20.0,
        (5.0 + 3.0 * q(1) + q(2) + 5.0 * q(3) - 5.0 * q(4) - 5.0 * q(5) + 5.0 * q(6) -
         5.0 * q(7) - 4.0 * q(9) + 4.0 * q(11) - 5.0 * q(12) + 5.0 * q(13) + 7.0 * q(14) -
         q(15) - 5.0 * q(16)) / 20.0,
        (5.0 + q(1) - 5.0 * q(2) + 5.0 * q(3) + 5.0 * q(4) + 15.0 * q(5) - 5.0 * q(6) -
         5.0 * q(7) + 4.0 * q(9) - 4.0 * q(11) - 5.0 * q(12) + 5.0 * q(13) - q(14) -
         5.0 * q(15) - 5.0 * q(16)) / 20.0,
    };

    bool clamped = false;
    for (double& x : pi) {
        if (x < 0.0) {
            if (x < kClampFloor) {
                throw std::domain_error("reduce_closed_form: negative local population");
            }
            x = 0.0;
            clamped = true;
        }
    }
    if (clamped) {
        const double total = std::accumulate(pi.begin(), pi.end(), 0.0);
        for (double& x : pi) x /= total;
    }
    return {pi, local_energies(h)};
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_left, int dim_right,
                            TracedFactor traced) {
    const Eigen::Index dim = static_cast<Eigen::Index>(dim_left) * dim_right;
    if (dim_left <= 0 || dim_right <= 0 || rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("partial_trace: dimension mismatch");
    }
    if (traced == TracedFactor::Right) {
        ComplexMatrix out = ComplexMatrix::Zero(dim_left, dim_left);
        for (int i = 0; i < dim_left; ++i)
            for (int j = 0; j < dim_left; ++j)
                for (int k = 0; k < dim_right; ++k)
                    out(i, j) += rho(i * dim_right + k, j * dim_right + k);
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_right, dim_right);
    for (int i = 0; i < dim_right; ++i)
        for (int j = 0; j < dim_right; ++j)
            for (int k = 0; k < dim_left; ++k)
                out(i, j) += rho(k * dim_right + i, k * dim_right + j);
    return out;
}

ComplexMatrix partial_trace_oracle(const ComplexMatrix& rho) {
    return partial_trace(rho, 4, 4, TracedFactor::Right);
}

LocalState local_state(double h, double j, double beta) {
    const auto e = biquartit_levels(h, j);
    const auto state = thermal_state(e, beta);
    return reduce_closed_form(state.populations, h);
}

double local_entropy(const LocalState& ls) {
    double s = 0.0;
    for (double p : ls.populations) {
        if (p > 0.0) s -= p * std::log(p);
    }
    return s;
}

double local_internal_energy(const LocalState& ls) {
    double u = 0.0;
    for (std::size_t k = 0; k < 4; ++k) u += ls.energies[k] * ls.populations[k];
    return u;
}

double local_beta(double h, double j, double beta, std::optional<double> step) {
    const double delta = step.value_or(1e-5 * std::max(1.0, std::abs(beta)));
    if (!(delta > 0.0)) throw std::invalid_argument("local_beta: step must be positive");

    const auto plus = local_state(h, j, beta + delta);
    const auto minus = local_state(h, j, beta - delta);
    const double ds = (local_entropy(plus) - local_entropy(minus)) / (2.0 * delta);
    const double du = (local_internal_energy(plus) - local_internal_energy(minus)) / (2.0 * delta);
    if (std::abs(du) < kSingularSlope) {
        throw std::domain_error("local_beta: du/dbeta vanishes, local temperature undefined");
    }
    return ds / du;
}

double spectroscopic_beta(const LocalState& ls) {
    std::array<std::size_t, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ls.energies[a] < ls.energies[b];
    });

    std::array<double, 4> pi{};
    std::array<double, 4> eps{};
    for (std::size_t k = 0; k < 4; ++k) {
        pi[k] = ls.populations[order[k]];
        eps[k] = ls.energies[order[k]];
        if (!(pi[k] > 0.0)) {
            throw std::domain_error("spectroscopic_beta: zero local population");
        }
    }

    double sum = 0.0;
    for (std::size_t i = 1; i < 4; ++i) {
        const double gap = eps[i] - eps[i - 1];
        if (gap == 0.0) throw std::domain_error("spectroscopic_beta: zero energy gap");
        const double weight = 0.5 * (pi[i] + pi[i - 1]);
        sum += weight * (std::log(pi[i]) - std::log(pi[i - 1])) / gap;
    }
    return -sum / (1.0 - 0.5 * (pi[0] + pi[3]));
}

}  // namespace qotto
