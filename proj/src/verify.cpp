#include "qotto/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "qotto/entanglement.hpp"
#include "qotto/gibbs_thermo.hpp"
#include "qotto/local_quartit.hpp"
#include "qotto/otto_cycle.hpp"
#include "qotto/spectrum.hpp"

namespace qotto {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Magnitude in [lo, hi] with a random sign.
double signed_magnitude(Rng& rng, double lo, double hi) {
    const double mag = uniform(rng, lo, hi);
    return uniform(rng, 0.0, 1.0) < 0.5 ? -mag : mag;
}

class Suite {
public:
    Suite(std::string name, double tolerance) : result_{std::move(name), true, 0.0, tolerance, {}} {}

    void check(double residual, const std::string& where = {}) {
        record(residual, residual <= result_.tolerance, where);
    }

    /// Tracks the residual but judges it with a caller-supplied verdict.
    void record(double residual, bool ok, const std::string& where) {
        if (std::isnan(residual) || residual > result_.worst) result_.worst = residual;
        if (!ok || std::isnan(residual)) fail(where);
    }

    void fail(const std::string& why) {
        result_.passed = false;
        if (result_.detail.empty()) result_.detail = why;
    }

    SuiteResult done() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string at(double h, double j, double beta = std::nan("")) {
    std::ostringstream os;
    os << std::setprecision(6) << "h=" << h << " J=" << j;
    if (!std::isnan(beta)) os << " beta=" << beta;
    return os.str();
}

SuiteResult spin_algebra_suite() {
    Suite s("spin algebra: commutators and Casimir", 1e-14);
    const Complex i_unit{0.0, 1.0};
    for (SpinKind kind : {SpinKind::Half, SpinKind::ThreeHalves}) {
        const auto m = spin_matrices(kind);
        s.check(max_abs(commutator(m.s1, m.s2) - i_unit * m.s3));
        s.check(max_abs(commutator(m.s2, m.s3) - i_unit * m.s1));
        s.check(max_abs(commutator(m.s3, m.s1) - i_unit * m.s2));
        const int d = spin_dimension(kind);
        const double sv = spin_value(kind);
        s.check(max_abs(m.s1 * m.s1 + m.s2 * m.s2 + m.s3 * m.s3 -
                        sv * (sv + 1.0) * ComplexMatrix::Identity(d, d)));
    }
    return s.done();
}

SuiteResult hamiltonian_commutation_suite(Rng& rng) {
    Suite s("hamiltonian: [H_zeeman, H_exchange] = 0", 1e-12);
    for (int k = 0; k < 50; ++k) {
        const double h = uniform(rng, -5.0, 5.0);
        const double j = uniform(rng, -5.0, 5.0);
        for (SpinKind kind : {SpinKind::Half, SpinKind::ThreeHalves}) {
            s.check(max_abs(commutator(zeeman_hamiltonian(kind, h), exchange_hamiltonian(kind, j))), at(h, j));
        }
    }
    return s.done();
}

SuiteResult hamiltonian_linearity_suite(Rng& rng) {
    Suite s("hamiltonian: linear in h and in J", 1e-12);
    for (int k = 0; k < 20; ++k) {
        const double h1 = uniform(rng, -5.0, 5.0), h2 = uniform(rng, -5.0, 5.0);
        const double j1 = uniform(rng, -5.0, 5.0), j2 = uniform(rng, -5.0, 5.0);
        for (SpinKind kind : {SpinKind::Half, SpinKind::ThreeHalves}) {
            const auto lhs_h = build_hamiltonian(kind, h1 + h2, j1);
            const ComplexMatrix rhs_h = build_hamiltonian(kind, h1, j1) + build_hamiltonian(kind, h2, 0.0);
            s.check(max_abs(lhs_h - rhs_h));
            const auto lhs_j = build_hamiltonian(kind, h1, j1 + j2);
            const ComplexMatrix rhs_j = build_hamiltonian(kind, h1, j1) + build_hamiltonian(kind, 0.0, j2);
            s.check(max_abs(lhs_j - rhs_j));
        }
    }
    return s.done();
}

SuiteResult spectrum_oracle_suite(Rng& rng, const LevelsProvider& provider) {
    Suite s("spectrum: analytic levels vs Jacobi diagonalization", 1e-10);
    for (int k = 0; k < 100; ++k) {
        const double h = uniform(rng, -5.0, 5.0);
        const double j = uniform(rng, -5.0, 5.0);
        for (SpinKind kind : {SpinKind::ThreeHalves, SpinKind::Half}) {
            auto analytic = provider(kind, h, j);
            std::sort(analytic.begin(), analytic.end());
            const auto oracle = diagonalize_hermitian(build_hamiltonian(kind, h, j));
            if (static_cast<Eigen::Index>(analytic.size()) != oracle.values.size()) {
                s.fail("level count mismatch");
                continue;
            }
            double worst = 0.0;
            for (std::size_t i = 0; i < analytic.size(); ++i) {
                worst = std::max(worst, std::abs(analytic[i] - oracle.values(static_cast<Eigen::Index>(i))));
            }
            s.check(worst, at(h, j));
        }
    }
    return s.done();
}

SuiteResult eigen_residual_suite(Rng& rng) {
    // Residuals are reported relative to 1 + ||H||_F.
    Suite s("spectrum: constant eigenvectors, ||H e_i - e_i e_i|| / (1+||H||)", 1e-12);
    for (int k = 0; k < 20; ++k) {
        const double h = uniform(rng, -5.0, 5.0);
        const double j = uniform(rng, -5.0, 5.0);
        for (SpinKind kind : {SpinKind::ThreeHalves, SpinKind::Half}) {
            const auto hm = build_hamiltonian(kind, h, j);
            const auto spec = spectrum(kind, h, j);
            for (const auto& level : spec.levels) {
                const double r = (hm * level.eigenvector - level.energy * level.eigenvector).norm();
                s.check(r / (1.0 + hm.norm()), at(h, j) + " level " + std::to_string(level.index));
            }
        }
    }
    for (SpinKind kind : {SpinKind::ThreeHalves, SpinKind::Half}) {
        const auto vs = eigenvectors(kind);
        for (std::size_t a = 0; a < vs.size(); ++a) {
            for (std::size_t b = 0; b < vs.size(); ++b) {
                const double expected = a == b ? 1.0 : 0.0;
                s.check(std::abs(vs[a].dot(vs[b]) - expected), "orthonormality");
            }
        }
    }
    return s.done();
}

SuiteResult gibbs_population_suite(Rng& rng) {
    Suite s("gibbs: normalization, Boltzmann ratios, max-shift stability", 1e-12);
    for (int k = 0; k < 50; ++k) {
        const double h = uniform(rng, -5.0, 5.0);
        const double j = uniform(rng, -1.0, 1.0);
        const double beta = uniform(rng, -3.0, 3.0);
        const auto st = thermal_state(SpinKind::ThreeHalves, h, j, beta);
        double sum = 0.0;
        for (double p : st.populations) {
            sum += p;
            if (!(p > 0.0)) s.fail("non-positive population at " + at(h, j, beta));
        }
        const double norm_defect = std::abs(sum - 1.0);
        s.record(norm_defect, norm_defect <= 1e-14, "normalization at " + at(h, j, beta));
        for (std::size_t a = 0; a < st.populations.size(); ++a) {
            for (std::size_t b = 0; b < st.populations.size(); ++b) {
                const double expected = std::exp(-beta * (st.energies[a] - st.energies[b]));
                s.check(std::abs(st.populations[a] / st.populations[b] - expected) / expected, at(h, j, beta));
            }
        }
    }
    for (double beta : {500.0, -500.0}) {
        const auto st = thermal_state(SpinKind::ThreeHalves, 10.0, 0.3, beta);
        double sum = 0.0;
        for (double p : st.populations) sum += p;
        if (!std::isfinite(st.log_z)) s.fail("non-finite log Z at |beta| = 500");
        s.check(std::abs(sum - 1.0));
    }
    return s.done();
}

SuiteResult zero_coupling_symmetry_suite() {
    Suite s("thermo: S, C even and U odd in beta at J = 0", 1e-12);
    for (int k = 1; k <= 20; ++k) {
        const double beta = 0.25 * k;
        const auto plus = thermal_state(SpinKind::ThreeHalves, 1.0, 0.0, beta);
        const auto minus = thermal_state(SpinKind::ThreeHalves, 1.0, 0.0, -beta);
        s.check(std::abs(entropy(plus) - entropy(minus)));
        s.check(std::abs(heat_capacity(plus) - heat_capacity(minus)));
        s.check(std::abs(internal_energy(plus) + internal_energy(minus)));
    }
    return s.done();
}

double beta_times_free_energy(double h, double j, double beta) {
    return -thermal_state(SpinKind::ThreeHalves, h, j, beta).log_z;
}

SuiteResult moment_derivative_suite(Rng& rng) {
    Suite s("thermo: moments vs finite differences of F (relative)", 1e-5);
    for (int k = 0; k < 10; ++k) {
        const double h = uniform(rng, 0.5, 3.0);
        const double j = uniform(rng, -0.5, 0.5);
        const double beta = signed_magnitude(rng, 0.2, 2.0);
        const auto st = thermal_state(SpinKind::ThreeHalves, h, j, beta);
        const auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-12); };

        const double d1 = 1e-5;
        const double g_plus = beta_times_free_energy(h, j, beta + d1);
        const double g_minus = beta_times_free_energy(h, j, beta - d1);
        const double u_fd = (g_plus - g_minus) / (2.0 * d1);
        s.check(rel(internal_energy(st), u_fd), "U at " + at(h, j, beta));

        const double f_plus = g_plus / (beta + d1);
        const double f_minus = g_minus / (beta - d1);
        const double s_fd = beta * beta * (f_plus - f_minus) / (2.0 * d1);
        s.check(rel(entropy(st), s_fd), "S at " + at(h, j, beta));

        const double d2 = 1e-4;
        const double g0 = beta_times_free_energy(h, j, beta);
        const double gp = beta_times_free_energy(h, j, beta + d2);
        const double gm = beta_times_free_energy(h, j, beta - d2);
        const double c_fd = -beta * beta * (gp - 2.0 * g0 + gm) / (d2 * d2);
        s.check(rel(heat_capacity(st), c_fd), "C at " + at(h, j, beta));
    }
    return s.done();
}

SuiteResult reduced_state_suite(Rng& rng) {
    Suite s("local: closed-form populations vs partial trace", 1e-12);
    for (int k = 0; k < 50; ++k) {
        const double h = uniform(rng, -5.0, 5.0);
        const double j = uniform(rng, -1.0, 1.0);
        const double beta = uniform(rng, -3.0, 3.0);
        const auto rho = gibbs_density_matrix(h, j, beta);
        const auto left = partial_trace(rho, 4, 4, TracedFactor::Right);
        const auto right = partial_trace(rho, 4, 4, TracedFactor::Left);
        const auto ls = local_state(h, j, beta);
        for (int a = 0; a < 4; ++a) {
            s.check(std::abs(ls.populations[static_cast<std::size_t>(a)] - left(a, a).real()), at(h, j, beta));
            for (int b = 0; b < 4; ++b) {
                if (a != b) s.check(std::abs(left(a, b)), "off-diagonal at " + at(h, j, beta));
            }
        }
        s.check(max_abs(left - right), "left/right reduction at " + at(h, j, beta));
    }
    return s.done();
}

SuiteResult local_temperature_suite() {
    Suite s("local: beta_loc and beta_Mloc equal beta at J = 0", 1e-6);
    for (double beta : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
        s.check(std::abs(local_beta(2.0, 0.0, beta) - beta), "beta_loc at beta=" + std::to_string(beta));
        s.check(std::abs(spectroscopic_beta(local_state(2.0, 0.0, beta)) - beta),
                "beta_Mloc at beta=" + std::to_string(beta));
    }
    return s.done();
}

ComplexMatrix swap_factors(const ComplexMatrix& rho) {
    ComplexMatrix out(16, 16);
    const auto idx = [](int a, int b) { return 4 * a + b; };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) out(idx(b, a), idx(d, c)) = rho(idx(a, b), idx(c, d));
    return out;
}

SuiteResult entanglement_suite(Rng& rng) {
    Suite s("entanglement: m_SM null at J = 0, swap invariance", 1e-10);
    for (double h : {0.5, 1.0, 2.0, 4.0}) {
        for (double beta : {-5.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 5.0}) {
            s.check(thermal_m_sm(h, 0.0, beta), at(h, 0.0, beta));
        }
    }
    if (thermal_m_sm(1.0, 0.7, 0.0) != 0.0) s.fail("m_SM of the beta = 0 state is not exactly zero");
    const auto& basis = su4_basis();
    for (int k = 0; k < 5; ++k) {
        const double h = uniform(rng, -3.0, 3.0);
        const double j = uniform(rng, -1.0, 1.0);
        const double beta = uniform(rng, -2.0, 2.0);
        const auto rho = gibbs_density_matrix(h, j, beta);
        const double direct = m_sm(bloch_decompose(rho, basis));
        const double swapped = m_sm(bloch_decompose(swap_factors(rho), basis));
        s.check(std::abs(direct - swapped), "swap at " + at(h, j, beta));
    }
    return s.done();
}

CycleParams random_cycle(Rng& rng, SpinKind kind) {
    CycleParams p;
    p.kind = kind;
    p.t_hot = signed_magnitude(rng, 0.2, 5.0);
    p.t_cold = signed_magnitude(rng, 0.2, 5.0);
    p.h = uniform(rng, -5.0, 5.0);
    p.h_prime = uniform(rng, -5.0, 5.0);
    p.j = uniform(rng, -1.0, 1.0);
    return p;
}

std::string describe(const CycleParams& p) {
    std::ostringstream os;
    os << std::setprecision(6) << "T=" << p.t_hot << " T'=" << p.t_cold << " h=" << p.h
       << " h'=" << p.h_prime << " J=" << p.j;
    return os.str();
}

SuiteResult energy_balance_suite(Rng& rng) {
    Suite s("cycle: Q1 + W2 + Q3 + W4 = 0 (relative to scale)", 1e-12);
    for (int k = 0; k < 200; ++k) {
        const auto params = random_cycle(rng, k % 2 == 0 ? SpinKind::ThreeHalves : SpinKind::Half);
        const auto r = run_cycle(params);
        s.check(std::abs(r.q1 + r.w2 + r.q3 + r.w4) / r.scale(), describe(params));
    }
    return s.done();
}

SuiteResult decomposition_suite(Rng& rng) {
    Suite s("cycle: Q1 = Jm + hn, Q3 = -Jm - h'n, -(W2+W4) = (h-h')n, local split", 1e-12);
    for (int k = 0; k < 100; ++k) {
        const auto params = random_cycle(rng, SpinKind::ThreeHalves);
        const auto r = run_cycle(params);
        const double m = *r.m;
        const double n = *r.n;
        const double scale = std::max({r.scale(), std::abs(params.j * m), std::abs(params.h * n),
                                       std::abs(params.h_prime * n)});
        const auto ls = local_split(r, params);
        const auto where = describe(params);
        s.check(std::abs(r.q1 - (params.j * m + params.h * n)) / scale, where);
        s.check(std::abs(r.q3 - (-params.j * m - params.h_prime * n)) / scale, where);
        s.check(std::abs(-r.net_work() - (params.h - params.h_prime) * n) / scale, where);
        s.check(std::abs(ls.w_total - 2.0 * ls.w) / scale, where);
        s.check(std::abs(r.q1 - params.j * m - 2.0 * ls.q1) / scale, where);
        s.check(std::abs(r.q3 + params.j * m - 2.0 * ls.q2) / scale, where);
    }
    return s.done();
}

SuiteResult closed_form_efficiency_suite(Rng& rng) {
    Suite s("cycle: engine efficiency ratio vs eta0 / (1 + Jm/(hn))", 1e-10);
    int engines = 0;
    for (int k = 0; k < 400; ++k) {
        auto params = random_cycle(rng, SpinKind::ThreeHalves);
        params.t_hot = uniform(rng, 1.0, 5.0);
        params.t_cold = uniform(rng, 0.1, params.t_hot);
        const auto r = run_cycle(params);
        if (r.regime != Regime::HeatEngine) continue;
        const auto closed = efficiency_closed_form(r, params);
        if (!closed) continue;
        ++engines;
        s.check(std::abs(*r.eta - *closed) / std::abs(*r.eta), describe(params));
    }
    if (engines == 0) s.fail("no heat-engine draws");
    return s.done();
}

SuiteResult engine_criterion_suite(Rng& rng) {
    // With positive fields and J = 0 an engine needs h'/T' > h/T. Reported
    // residual is the violation max(0, h/T - h'/T').
    Suite s("cycle: J = 0 engines satisfy h'/T' > h/T", 0.0);
    int engines = 0;
    for (int k = 0; k < 400; ++k) {
        auto params = random_cycle(rng, SpinKind::ThreeHalves);
        params.j = 0.0;
        params.h = uniform(rng, 0.1, 5.0);
        params.h_prime = uniform(rng, 0.1, 5.0);
        const auto r = run_cycle(params);
        if (r.regime != Regime::HeatEngine) continue;
        ++engines;
        const double violation = params.h / params.t_hot - params.h_prime / params.t_cold;
        s.record(std::max(0.0, violation), violation < 0.0, describe(params));
    }
    if (engines == 0) s.fail("no heat-engine draws");
    return s.done();
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    const LevelsProvider provider =
        options.levels ? options.levels : LevelsProvider([](SpinKind k, double h, double j) { return levels(k, h, j); });

    std::vector<SuiteResult> results;
    const auto run = [&](auto&& suite) {
        try {
            results.push_back(suite());
        } catch (const std::exception& ex) {
            results.push_back({"(suite aborted)", false, 0.0, 0.0, ex.what()});
        }
    };

    // Each suite draws from its own stream so adding draws to one suite
    // does not shift the others.
    std::uint64_t stream = 0;
    const auto rng_for = [&]() { return Rng(options.seed * 1000003ULL + stream++); };

    run([] { return spin_algebra_suite(); });
    run([&, rng = rng_for()]() mutable { return hamiltonian_commutation_suite(rng); });
    run([&, rng = rng_for()]() mutable { return hamiltonian_linearity_suite(rng); });
    run([&, rng = rng_for()]() mutable { return spectrum_oracle_suite(rng, provider); });
    run([&, rng = rng_for()]() mutable { return eigen_residual_suite(rng); });
    run([&, rng = rng_for()]() mutable { return gibbs_population_suite(rng); });
    run([] { return zero_coupling_symmetry_suite(); });
    run([&, rng = rng_for()]() mutable { return moment_derivative_suite(rng); });
    run([&, rng = rng_for()]() mutable { return reduced_state_suite(rng); });
    run([] { return local_temperature_suite(); });
    run([&, rng = rng_for()]() mutable { return entanglement_suite(rng); });
    run([&, rng = rng_for()]() mutable { return energy_balance_suite(rng); });
    run([&, rng = rng_for()]() mutable { return decomposition_suite(rng); });
    run([&, rng = rng_for()]() mutable { return closed_form_efficiency_suite(rng); });
    run([&, rng = rng_for()]() mutable { return engine_criterion_suite(rng); });
    return results;
}

int verify_all(std::uint64_t seed, std::ostream& out) {
    const auto results = run_verification({seed, {}});
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed;
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "  worst=" << std::setprecision(3)
            << std::scientific << r.worst << " tol=" << r.tolerance << std::defaultfloat;
        if (!r.passed && !r.detail.empty()) out << "  (" << r.detail << ")";
        out << '\n';
    }
    out << (ok ? "all suites passed" : "verification FAILED") << " (seed " << seed << ")\n";
    return ok ? 0 : 1;
}

}  // namespace qotto
