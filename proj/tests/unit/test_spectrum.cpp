#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qotto/spectrum.hpp"

using namespace qotto;
using qotto::testing::uniform;

TEST_CASE("biquartit levels: closed form values") {
    for (double e : biquartit_levels(0.0, 0.0)) CHECK(e == 0.0);

    const auto e = biquartit_levels(1.0, 0.1);
    CHECK(e[0] == doctest::Approx(-2.1).epsilon(1e-14));
    CHECK(e[7] == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(e[11] == doctest::Approx(3.9).epsilon(1e-14));

    const auto f = biquartit_levels(2.0, -0.5);
    CHECK(std::abs(std::accumulate(f.begin(), f.end(), 0.0)) <= 1e-13);
}

TEST_CASE("levels keep index order, not energy order") {
    const auto e = biquartit_levels(1.0, 0.1);
    CHECK_FALSE(std::is_sorted(e.begin(), e.end()));
    const auto v = levels(SpinKind::ThreeHalves, 1.0, 0.1);
    CHECK(std::equal(v.begin(), v.end(), e.begin()));
}

TEST_CASE("biqubit levels") {
    for (double e : biqubit_levels(0.0, 0.0)) CHECK(e == 0.0);
    const auto e = biqubit_levels(4.0, 0.155);
    CHECK(e[0] == doctest::Approx(-0.465).epsilon(1e-14));
    CHECK(e[1] == doctest::Approx(0.155).epsilon(1e-14));
    CHECK(e[2] == doctest::Approx(-3.845).epsilon(1e-14));
    CHECK(e[3] == doctest::Approx(4.155).epsilon(1e-14));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        const auto g = biqubit_levels(uniform(rng, -5, 5), uniform(rng, -5, 5));
        CHECK(std::abs(std::accumulate(g.begin(), g.end(), 0.0)) <= 1e-14);
    }
}

TEST_CASE("biquartit eigenvectors: tabulated entries, norms, orthogonality") {
    const auto& v = biquartit_eigenvectors();
    CHECK(v[11](0) == Complex(1.0));
    CHECK(v[11].norm() == 1.0);
    CHECK(v[4](15) == Complex(1.0));

    // |e8> = 1/2 (0_3, -1, 0_2, 1, 0_2, -1, 0_2, 1, 0_3)
    ComplexVector e8 = ComplexVector::Zero(16);
    e8(3) = -0.5;
    e8(6) = 0.5;
    e8(9) = -0.5;
    e8(12) = 0.5;
    CHECK((v[7] - e8).norm() <= 1e-15);

    CHECK(std::abs(v[8].dot(v[10])) <= 1e-15);

    for (std::size_t a = 0; a < 16; ++a) {
        CHECK(std::abs(v[a].norm() - 1.0) <= 1e-14);
        for (std::size_t b = 0; b < 16; ++b) {
            const double expected = a == b ? 1.0 : 0.0;
            CHECK(std::abs(v[a].dot(v[b]) - expected) <= 1e-12);
        }
    }
}

TEST_CASE("H |e8> = -15 J |e8> at (1.3, 0.7)") {
    const auto hm = build_hamiltonian(SpinKind::ThreeHalves, 1.3, 0.7);
    const auto& e8 = biquartit_eigenvectors()[7];
    CHECK((hm * e8 + 15.0 * 0.7 * e8).norm() <= 1e-12);
}

TEST_CASE("spectrum vs brute-force diagonalization, 100 random (h, J)") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 100; ++k) {
        const double h = uniform(rng, -5, 5), j = uniform(rng, -5, 5);
        for (SpinKind kind : {SpinKind::ThreeHalves, SpinKind::Half}) {
            auto analytic = levels(kind, h, j);
            std::sort(analytic.begin(), analytic.end());
            const auto oracle = diagonalize_hermitian(build_hamiltonian(kind, h, j));
            for (std::size_t i = 0; i < analytic.size(); ++i) {
                CHECK(std::abs(analytic[i] - oracle.values(static_cast<Eigen::Index>(i))) <= 1e-10);
            }
        }
    }
}

TEST_CASE("constant eigenvectors solve H at every (h, J)") {
    std::mt19937_64 rng(19);
    for (int k = 0; k < 20; ++k) {
        const double h = uniform(rng, -5, 5), j = uniform(rng, -5, 5);
        for (SpinKind kind : {SpinKind::ThreeHalves, SpinKind::Half}) {
            const auto hm = build_hamiltonian(kind, h, j);
            const auto spec = spectrum(kind, h, j);
            REQUIRE(static_cast<int>(spec.levels.size()) == level_count(kind));
            for (const auto& level : spec.levels) {
                const double r = (hm * level.eigenvector - level.energy * level.eigenvector).norm();
                CHECK(r <= 1e-12 * (1.0 + hm.norm()));
            }
        }
    }
}

TEST_CASE("projectors") {
    ComplexMatrix sum = ComplexMatrix::Zero(16, 16);
    for (int i = 1; i <= 16; ++i) {
        const auto p = projector(i);
        CHECK(std::abs(p.trace() - 1.0) <= 1e-14);
        CHECK(max_abs(p * p - p) <= 1e-14);
        for (int k = i + 1; k <= 16; ++k) CHECK(max_abs(p * projector(k)) <= 1e-14);
        sum += p;
    }
    CHECK(max_abs(sum - ComplexMatrix::Identity(16, 16)) <= 1e-12);

    const auto p5 = projector(5);
    CHECK(p5(15, 15) == Complex(1.0));
    CHECK(p5.cwiseAbs().sum() == 1.0);

    CHECK_THROWS_AS(projector(0), std::out_of_range);
    CHECK_THROWS_AS(projector(17), std::out_of_range);
    CHECK_NOTHROW(projector(SpinKind::Half, 4));
    CHECK_THROWS_AS(projector(SpinKind::Half, 5), std::out_of_range);
}
