#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "qotto/gibbs_thermo.hpp"
#include "qotto/otto_cycle.hpp"
#include "qotto/spectrum.hpp"

using namespace qotto;
using namespace qotto::testing;

namespace {

CycleReport synthetic(double q1, double q3, double w) {
    CycleReport r;
    r.q1 = q1;
    r.q3 = q3;
    r.w2 = w;
    r.w4 = 0.0;
    return r;
}

CycleParams random_params(std::mt19937_64& rng, SpinKind kind) {
    CycleParams p;
    p.kind = kind;
    const auto temp = [&] {
        const double t = uniform(rng, 0.2, 5.0);
        return uniform(rng, 0, 1) < 0.2 ? -t : t;
    };
    p.t_hot = temp();
    p.t_cold = temp();
    p.h = uniform(rng, -5, 5);
    p.h_prime = uniform(rng, -5, 5);
    p.j = uniform(rng, -2, 2);
    return p;
}

}  // namespace

TEST_CASE("stage quantities from the populations") {
    const CycleParams params{SpinKind::ThreeHalves, 2.0, 1.0, 4.0, -1.0, 0.3};
    const auto r = run_cycle(params);
    const auto e = levels(SpinKind::ThreeHalves, 4.0, 0.3);
    const auto ep = levels(SpinKind::ThreeHalves, -1.0, 0.3);
    std::vector<double> p(16), pp(16);
    double z = 0.0, zp = 0.0;
    for (int i = 0; i < 16; ++i) {
        p[i] = std::exp(-e[i] / 2.0);
        pp[i] = std::exp(-ep[i] / 1.0);
        z += p[i];
        zp += pp[i];
    }
    double q1 = 0, w2 = 0, q3 = 0, w4 = 0;
    for (int i = 0; i < 16; ++i) {
        p[i] /= z;
        pp[i] /= zp;
    }
    for (int i = 0; i < 16; ++i) {
        q1 += e[i] * (p[i] - pp[i]);
        w2 += p[i] * (ep[i] - e[i]);
        q3 += ep[i] * (pp[i] - p[i]);
        w4 += pp[i] * (e[i] - ep[i]);
    }
    CHECK(std::abs(r.q1 - q1) <= 1e-12);
    CHECK(std::abs(r.w2 - w2) <= 1e-12);
    CHECK(std::abs(r.q3 - q3) <= 1e-12);
    CHECK(std::abs(r.w4 - w4) <= 1e-12);
    REQUIRE(r.p.size() == 16);
    for (int i = 0; i < 16; ++i) CHECK(std::abs(r.p[i] - p[i]) <= 1e-14);
}

TEST_CASE("uncoupled biquartit cycle equals twice a single quartit") {
    const double m[] = {1.5, 0.5, -0.5, -1.5};
    for (double h : {1.0, 3.0}) {
        for (double hp : {0.4, -2.0}) {
            const CycleParams params{SpinKind::ThreeHalves, 1.5, 0.6, h, hp, 0.0};
            const auto r = run_cycle(params);
            const auto a = single_quartit_gibbs(h, 1.0 / 1.5);
            const auto b = single_quartit_gibbs(hp, 1.0 / 0.6);
            double q1 = 0.0, q3 = 0.0;
            for (int k = 0; k < 4; ++k) {
                q1 += h * m[k] * (a[k] - b[k]);
                q3 += hp * m[k] * (b[k] - a[k]);
            }
            CHECK(std::abs(r.q1 - 2 * q1) <= 1e-12);
            CHECK(std::abs(r.q3 - 2 * q3) <= 1e-12);
        }
    }
}

TEST_CASE("energy balance and decomposition identities, random draws") {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 200; ++k) {
        for (SpinKind kind : {SpinKind::ThreeHalves, SpinKind::Half}) {
            const auto params = random_params(rng, kind);
            const auto r = run_cycle(params);
            CHECK(std::abs(r.q1 + r.w2 + r.q3 + r.w4) <= 1e-12 * r.scale());
            if (kind == SpinKind::Half) {
                CHECK_FALSE(r.m.has_value());
                CHECK_THROWS_AS(local_split(r, params), std::invalid_argument);
                continue;
            }
            REQUIRE(r.m.has_value());
            const double m = *r.m, n = *r.n;
            const double tol = 1e-12 * r.scale();
            CHECK(std::abs(r.q1 - (params.j * m + params.h * n)) <= tol);
            CHECK(std::abs(r.q3 - (-params.j * m - params.h_prime * n)) <= tol);
            CHECK(std::abs(-(r.w2 + r.w4) - (params.h - params.h_prime) * n) <= tol);

            const auto dec = heat_decomposition(r.p, r.p_prime);
            CHECK(dec.m == m);
            CHECK(dec.n == n);

            const auto split = local_split(r, params);
            CHECK(std::abs(r.q1 - (params.j * m + 2 * split.q1)) <= tol);
            CHECK(std::abs(r.q3 - (-params.j * m + 2 * split.q2)) <= tol);
            CHECK(std::abs(split.w - (split.q1 + split.q2)) <= tol);
            CHECK(std::abs(split.w_total + r.w2 + r.w4) <= tol);
        }
    }
}

TEST_CASE("heat decomposition input validation") {
    const std::vector<double> p(16, 1.0 / 16), q(4, 0.25);
    CHECK_THROWS_AS(heat_decomposition(p, q), std::invalid_argument);
    const auto dec = heat_decomposition(p, p);
    CHECK(dec.m == 0.0);
    CHECK(dec.n == 0.0);
}

TEST_CASE("regime classification") {
    CHECK(classify_regime(synthetic(2.0, -1.0, -1.0)) == Regime::HeatEngine);
    CHECK(classify_regime(synthetic(-2.0, 1.0, 1.0)) == Regime::Refrigerator);
    CHECK(classify_regime(synthetic(1.0, -3.0, 2.0)) == Regime::Heater);
    CHECK(classify_regime(synthetic(-1.0, -1.0, 2.0)) == Regime::WorkToHeat);
    CHECK(classify_regime(synthetic(1.0, -1.0, 0.0)) == Regime::PureHeatTransfer);
    CHECK(classify_regime(synthetic(1.0, 1.0, -2.0)) == Regime::DoubleHeatInput);
    CHECK(classify_regime(synthetic(0.0, 0.0, 0.0)) == Regime::Other);
    // Below the threshold counts as zero.
    CHECK(classify_regime(synthetic(1.0, -1.0 + 1e-14, -1e-14)) == Regime::PureHeatTransfer);
    CHECK(classify_regime(synthetic(1.0, -0.5, -0.5), 1.0) == Regime::Other);
    CHECK(regime_name(Regime::WorkToHeat) == "WorkToHeat");
}

TEST_CASE("efficiency by regime") {
    auto engine = synthetic(4.0, -3.0, -1.0);
    CHECK(*efficiency(engine) == doctest::Approx(0.25));
    auto dhi = synthetic(1.0, 1.0, -2.0);
    CHECK(*efficiency(dhi) == doctest::Approx(1.0));
    auto wth = synthetic(-1.0, -1.0, 2.0);
    CHECK(*efficiency(wth) == doctest::Approx(1.0));
    CHECK_FALSE(efficiency(synthetic(-2.0, 1.0, 1.0)).has_value());
}

TEST_CASE("uncoupled efficiency, Carnot point, and J = 0 engines") {
    CHECK(uncoupled_efficiency(4.0, 1.0) == 0.75);
    CHECK(std::isnan(uncoupled_efficiency(0.0, 1.0)));
    CHECK(carnot_point(2.0, 2.0, 1.0) == 1.0);
    CHECK_THROWS_AS(carnot_point(1.0, 0.0, 1.0), std::domain_error);

    const CycleParams params{SpinKind::ThreeHalves, 2.0, 1.0, 4.0, 3.0, 0.0};
    const auto r = run_cycle(params);
    REQUIRE(r.regime == Regime::HeatEngine);
    CHECK(std::abs(*r.eta - 0.25) <= 1e-12);
    CHECK(r.eta0 == 0.25);

    // Below the Carnot point h' = 2 the uncoupled device refrigerates.
    const CycleParams fridge{SpinKind::ThreeHalves, 2.0, 1.0, 4.0, 1.0, 0.0};
    CHECK(run_cycle(fridge).regime == Regime::Refrigerator);
}

TEST_CASE("closed-form efficiency matches the stage ratio") {
    std::mt19937_64 rng(67);
    int engines = 0;
    for (int k = 0; k < 300 && engines < 50; ++k) {
        const auto params = random_params(rng, SpinKind::ThreeHalves);
        const auto r = run_cycle(params);
        if (r.regime != Regime::HeatEngine) continue;
        ++engines;
        const auto cf = efficiency_closed_form(r, params);
        REQUIRE(cf.has_value());
        CHECK(std::abs(*cf - *r.eta) <= 1e-10);
    }
    CHECK(engines > 5);
}

TEST_CASE("regression point in the negative-coupling engine window") {
    const CycleParams params{SpinKind::ThreeHalves, -1.0, 2.0, 4.0, 0.155, -0.11};
    const auto r = run_cycle(params);
    CHECK(r.regime == Regime::HeatEngine);
    CHECK(r.q1 == doctest::Approx(12.1218).epsilon(1e-4));
    CHECK(r.q3 == doctest::Approx(-0.000759).epsilon(1e-2));
    CHECK(*r.eta == doctest::Approx(0.99994).epsilon(1e-5));
    CHECK(*r.m == doctest::Approx(4.4352).epsilon(1e-4));
    CHECK(*r.n == doctest::Approx(3.1524).epsilon(1e-4));
}

TEST_CASE("zero temperature is rejected") {
    CycleParams params;
    params.t_hot = 0.0;
    CHECK_THROWS_AS(run_cycle(params), std::domain_error);
    params.t_hot = 1.0;
    params.t_cold = 0.0;
    CHECK_THROWS_AS(run_cycle(params), std::domain_error);
}
