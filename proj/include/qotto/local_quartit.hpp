#pragma once

#include <array>
#include <optional>
#include <span>

#include "qotto/spin_algebra.hpp"

namespace qotto {

/// Diagonal of one quartit's reduced density matrix.
/// Index k = 0..3 corresponds to m = 3/2, 1/2, -1/2, -3/2, so the local
/// energies are h/2 * (3, 1, -1, -3).
struct LocalState {
    std::array<double, 4> populations{};
    std::array<double, 4> energies{};
};

/// Local level energies h/2 * (3, 1, -1, -3).
std::array<double, 4> local_energies(double h);

/// Reduced quartit populations from the 16 biquartit level populations
/// (level-index order), via the closed-form linear combinations
///
///   pi1 = (5 - 5p1 + p2 - 5p3 - 5p4 - 5p5 + 5p6 + 5p7 + 4p9 - 4p11
///          + 15p12 - 5p13 - 5p14 - p15 + 5p16) / 20
///   pi2 = (5 + p1 + 3p2 - 5p3 + 5p4 - 5p5 - 5p6 + 5p7 - 4p9 + 4p11
///          - 5p12 - 5p13 - p14 + 7p15 + 5p16) / 20
///   pi3 = (5 + 3p1 + p2 + 5p3 - 5p4 - 5p5 + 5p6 - 5p7 - 4p9 + 4p11
///          - 5p12 + 5p13 + 7p14 - p15 - 5p16) / 20
///   pi4 = (5 + p1 - 5p2 + 5p3 + 5p4 + 15p5 - 5p6 - 5p7 + 4p9 - 4p11
///          - 5p12 + 5p13 - p14 - 5p15 - 5p16) / 20
///
/// The constant terms rely on sum(p) = 1. Results below zero by at most
/// 1e-14 are clamped and the vector renormalized.
LocalState reduce_closed_form(std::span<const double> p, double h);

/// Which factor of kron(left, right) is traced out.
enum class TracedFactor { Left, Right };

/// Partial trace of a (dim_left * dim_right) square matrix.
/// Throws std::invalid_argument on a dimension mismatch.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_left, int dim_right,
                            TracedFactor traced);

/// Reduced state of the left quartit: traces out the right factor of a
/// 16x16 biquartit matrix.
ComplexMatrix partial_trace_oracle(const ComplexMatrix& rho);

/// Reduced local state of the biquartit Gibbs state at (h, J, beta).
LocalState local_state(double h, double j, double beta);

/// s = -sum pi_k ln pi_k  (0 ln 0 = 0).
double local_entropy(const LocalState& ls);

/// u = sum eps_k pi_k.
double local_internal_energy(const LocalState& ls);

/// beta_loc = ds/du = (ds/dbeta) / (du/dbeta) by central differences in
/// the biquartit beta. Default step is 1e-5 * max(1, |beta|). Throws
/// std::domain_error when |du/dbeta| < 1e-12.
double local_beta(double h, double j, double beta, std::optional<double> step = std::nullopt);

/// Spectroscopic inverse temperature: a population-weighted average of the
/// negative log-population slopes between adjacent local levels taken in
/// ascending energy order,
///
///   -(1 - (pi_1 + pi_M)/2)^-1 sum_{i=2}^{M} (pi_i + pi_{i-1})/2
///        * (ln pi_i - ln pi_{i-1}) / (eps_i - eps_{i-1}).
///
/// Throws std::domain_error for a zero population or zero energy gaps (h = 0).
double spectroscopic_beta(const LocalState& ls);

}  // namespace qotto
