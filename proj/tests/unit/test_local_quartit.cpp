#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "qotto/gibbs_thermo.hpp"
#include "qotto/local_quartit.hpp"
#include "qotto/spectrum.hpp"

using namespace qotto;
using namespace qotto::testing;

namespace {

// Diagonal of the reduced state of sum_i p_i |e_i><e_i|, traced numerically.
std::array<double, 4> traced_populations(const std::vector<double>& p) {
    ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
    for (int i = 0; i < 16; ++i) rho += p[static_cast<std::size_t>(i)] * projector(i + 1);
    const ComplexMatrix red = partial_trace(rho, 4, 4, TracedFactor::Right);
    return {red(0, 0).real(), red(1, 1).real(), red(2, 2).real(), red(3, 3).real()};
}

}  // namespace

TEST_CASE("partial trace basics") {
    const ComplexMatrix i16 = ComplexMatrix::Identity(16, 16);
    CHECK(max_abs(partial_trace(i16, 4, 4, TracedFactor::Right) - 4.0 * ComplexMatrix::Identity(4, 4)) == 0.0);

    std::mt19937_64 rng(37);
    const ComplexMatrix a = random_density(rng, 4);
    const ComplexMatrix b = random_density(rng, 4);
    const ComplexMatrix ab = kron(a, b);
    CHECK(max_abs(partial_trace(ab, 4, 4, TracedFactor::Right) - a) <= 1e-15);
    CHECK(max_abs(partial_trace(ab, 4, 4, TracedFactor::Left) - b) <= 1e-15);
    CHECK(max_abs(partial_trace_oracle(ab) - a) <= 1e-15);

    const ComplexMatrix c = random_density(rng, 2);
    const ComplexMatrix d = random_density(rng, 3);
    CHECK(max_abs(partial_trace(kron(c, d), 2, 3, TracedFactor::Left) - d) <= 1e-15);

    CHECK_THROWS_AS(partial_trace(i16, 4, 3, TracedFactor::Right), std::invalid_argument);
}

TEST_CASE("closed-form populations: basis states") {
    // |e12> = |3/2, 3/2>: the left quartit sits in m = 3/2.
    std::vector<double> p(16, 0.0);
    p[11] = 1.0;
    auto ls = reduce_closed_form(p, 1.0);
    CHECK(ls.populations[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ls.populations[3] == doctest::Approx(0.0));

    std::fill(p.begin(), p.end(), 0.0);
    p[4] = 1.0;
    ls = reduce_closed_form(p, 1.0);
    CHECK(ls.populations[3] == doctest::Approx(1.0).epsilon(1e-15));

    // |e8> spreads equally over all four local levels.
    std::fill(p.begin(), p.end(), 0.0);
    p[7] = 1.0;
    ls = reduce_closed_form(p, 1.0);
    for (double x : ls.populations) CHECK(x == doctest::Approx(0.25).epsilon(1e-15));

    const std::vector<double> flat(16, 1.0 / 16.0);
    ls = reduce_closed_form(flat, 1.0);
    for (double x : ls.populations) CHECK(x == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("closed-form populations agree with the numerical partial trace") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 40; ++k) {
        const auto p = random_distribution(rng, 16);
        const auto ls = reduce_closed_form(p, 1.0);
        const auto tr = traced_populations(p);
        double sum = 0.0;
        for (int m = 0; m < 4; ++m) {
            CHECK(std::abs(ls.populations[m] - tr[m]) <= 1e-12);
            CHECK(ls.populations[m] >= 0.0);
            sum += ls.populations[m];
        }
        CHECK(std::abs(sum - 1.0) <= 1e-14);
    }
}

TEST_CASE("reduced state is diagonal and the same for both particles") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 10; ++k) {
        const double h = uniform(rng, -3, 3), j = uniform(rng, -1, 1), beta = uniform(rng, -3, 3);
        const auto rho = gibbs_density_matrix(h, j, beta);
        const ComplexMatrix left = partial_trace(rho, 4, 4, TracedFactor::Right);
        const ComplexMatrix right = partial_trace(rho, 4, 4, TracedFactor::Left);
        CHECK(max_abs(left - right) <= 1e-12);
        ComplexMatrix off = left;
        off.diagonal().setZero();
        CHECK(max_abs(off) <= 1e-14);

        const auto ls = local_state(h, j, beta);
        for (int m = 0; m < 4; ++m) CHECK(std::abs(ls.populations[m] - left(m, m).real()) <= 1e-12);
    }
}

TEST_CASE("closed-form input validation") {
    const std::vector<double> short_p(15, 1.0 / 15.0);
    CHECK_THROWS_AS(reduce_closed_form(short_p, 1.0), std::invalid_argument);
    std::vector<double> bogus(16, 0.0);
    bogus[11] = -1.0;
    bogus[4] = 2.0;
    CHECK_THROWS_AS(reduce_closed_form(bogus, 1.0), std::domain_error);
}

TEST_CASE("local energies, entropy and internal energy") {
    const auto e = local_energies(2.0);
    CHECK(e[0] == 3.0);
    CHECK(e[1] == 1.0);
    CHECK(e[2] == -1.0);
    CHECK(e[3] == -3.0);

    const auto ls = local_state(1.0, 0.0, 1.3);
    const auto ref = single_quartit_gibbs(1.0, 1.3);
    double s = 0.0, u = 0.0;
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(ls.populations[k] - ref[k]) <= 1e-14);
        s -= ref[k] * std::log(ref[k]);
        u += ls.energies[k] * ref[k];
    }
    CHECK(std::abs(local_entropy(ls) - s) <= 1e-14);
    CHECK(std::abs(local_internal_energy(ls) - u) <= 1e-14);
}

TEST_CASE("local temperatures equal beta at J = 0") {
    for (double h : {1.0, 2.0}) {
        for (double beta : {-4.0, -1.0, -0.3, 0.2, 1.0, 3.5}) {
            CHECK(std::abs(local_beta(h, 0.0, beta) - beta) <= 1e-6);
            CHECK(std::abs(spectroscopic_beta(local_state(h, 0.0, beta)) - beta) <= 1e-10);
        }
    }
}

TEST_CASE("local temperatures at finite coupling") {
    // Weak coupling keeps the two definitions close; stronger coupling
    // separates them at positive beta.
    double worst_weak = 0.0, worst_strong = 0.0;
    for (int k = 0; k <= 100; ++k) {
        const double beta = -5.0 + 0.1 * k;
        if (std::abs(beta) < 1e-9) continue;
        worst_weak = std::max(worst_weak, std::abs(local_beta(2.0, 0.1, beta) -
                                                   spectroscopic_beta(local_state(2.0, 0.1, beta))));
        if (beta > 0.0) {
            worst_strong = std::max(worst_strong, std::abs(local_beta(2.0, 0.2, beta) -
                                                           spectroscopic_beta(local_state(2.0, 0.2, beta))));
        }
    }
    CHECK(worst_weak <= 0.02);
    CHECK(worst_strong > 2.0 * worst_weak);

    CHECK(local_beta(2.0, 0.2, 1.0) == doctest::Approx(0.4633).epsilon(1e-3));
    CHECK(spectroscopic_beta(local_state(2.0, 0.2, 1.0)) == doctest::Approx(0.3804).epsilon(1e-3));
}

TEST_CASE("local temperature failure modes") {
    CHECK_THROWS_AS(spectroscopic_beta(local_state(0.0, 0.3, 1.0)), std::domain_error);
    LocalState dead;
    dead.populations = {1.0, 0.0, 0.0, 0.0};
    dead.energies = local_energies(1.0);
    CHECK_THROWS_AS(spectroscopic_beta(dead), std::domain_error);
    // No field: the local energy does not move with beta.
    CHECK_THROWS_AS(local_beta(0.0, 0.0, 1.0), std::domain_error);
}
