#include "qotto/otto_cycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qotto/gibbs_thermo.hpp"
#include "qotto/spectrum.hpp"

namespace qotto {

std::string_view regime_name(Regime regime) noexcept {
    switch (regime) {
        case Regime::HeatEngine: return "HeatEngine";
        case Regime::Refrigerator: return "Refrigerator";
        case Regime::Heater: return "Heater";
        case Regime::WorkToHeat: return "WorkToHeat";
        case Regime::PureHeatTransfer: return "PureHeatTransfer";
        case Regime::DoubleHeatInput: return "DoubleHeatInput";
        case Regime::Other: return "Other";
    }
    return "Other";
}

double CycleReport::scale() const noexcept {
    return std::max({1.0, std::abs(q1), std::abs(w2), std::abs(q3), std::abs(w4)});
}

HeatDecomposition heat_decomposition(std::span<const double> p, std::span<const double> p_prime) {
    if (p.size() != kBiquartitLevels || p_prime.size() != kBiquartitLevels) {
        throw std::invalid_argument("heat_decomposition: expected 16 populations per stage");
    }
    const auto d = [&](int i) {
        const auto k = static_cast<std::size_t>(i - 1);
        return p[k] - p_prime[k];
    };

    HeatDecomposition out;
    out.m = -11.0 * (d(1) + d(2) + d(9)) +
            9.0 * (d(5) + d(11) + d(12) + d(13) + d(14) + d(15) + d(16)) -
            3.0 * (d(3) + d(4) + d(6) + d(7) + d(10)) - 15.0 * d(8);
    out.n = -d(1) + d(2) - d(4) + d(6) - d(14) + d(15) +
            2.0 * (-d(3) + d(7) - d(13) + d(16)) + 3.0 * (-d(5) + d(12));
    return out;
}

double default_regime_eps(const CycleReport& report) noexcept {
    return 1e-12 * std::max({std::abs(report.q1), std::abs(report.q3),
                             std::abs(report.net_work()), 1.0});
}

Regime classify_regime(const CycleReport& report, std::optional<double> eps) {
    const double tol = eps.value_or(default_regime_eps(report));
    const double w = report.net_work();
    const bool q1_in = report.q1 > tol;
    const bool q1_out = report.q1 < -tol;
    const bool q3_in = report.q3 > tol;
    const bool q3_out = report.q3 < -tol;
    const bool w_on = w > tol;
    const bool w_by = w < -tol;

    if (q1_in && q3_in && w_by) return Regime::DoubleHeatInput;
    if (q1_out && q3_out && w_on) return Regime::WorkToHeat;
    if (q1_in && q3_out && w_by) return Regime::HeatEngine;
    if (q1_in && q3_out && !w_on && !w_by) return Regime::PureHeatTransfer;
    if (w_on && q3_in) return Regime::Refrigerator;
    if (w_on && q1_in && q3_out) return Regime::Heater;
    return Regime::Other;
}

std::optional<double> efficiency(const CycleReport& report) {
    const double w = report.net_work();
    switch (classify_regime(report)) {
        case Regime::HeatEngine: return -w / report.q1;
        case Regime::DoubleHeatInput: return -w / (report.q1 + report.q3);
        case Regime::WorkToHeat: return -(report.q1 + report.q3) / w;
        default: return std::nullopt;
    }
}

double uncoupled_efficiency(double h, double h_prime) noexcept {
    if (h == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return 1.0 - h_prime / h;
}

std::optional<double> efficiency_closed_form(const CycleReport& report, const CycleParams& params) {
    if (!report.m || !report.n) return std::nullopt;
    const double hn = params.h * *report.n;
    if (hn == 0.0) return std::nullopt;
    return report.eta0 / (1.0 + params.j * *report.m / hn);
}

double carnot_point(double h, double t_hot, double t_cold) {
    if (t_hot == 0.0) throw std::domain_error("carnot_point: hot bath temperature is zero");
    return h * t_cold / t_hot;
}

CycleReport run_cycle(const CycleParams& params) {
    const double beta_hot = inverse_temperature(params.t_hot);
    const double beta_cold = inverse_temperature(params.t_cold);

    const auto e = levels(params.kind, params.h, params.j);
    const auto e_prime = levels(params.kind, params.h_prime, params.j);

    CycleReport r;
    r.p = thermal_state(e, beta_hot).populations;
    r.p_prime = thermal_state(e_prime, beta_cold).populations;

    for (std::size_t i = 0; i < e.size(); ++i) {
        const double dp = r.p[i] - r.p_prime[i];
        const double de = e_prime[i] - e[i];
        r.q1 += e[i] * dp;
        r.w2 += r.p[i] * de;
        r.q3 -= e_prime[i] * dp;
        r.w4 -= r.p_prime[i] * de;
    }

    if (params.kind == SpinKind::ThreeHalves) {
        const auto mn = heat_decomposition(r.p, r.p_prime);
        r.m = mn.m;
        r.n = mn.n;
    }
    r.eta0 = uncoupled_efficiency(params.h, params.h_prime);
    r.regime = classify_regime(r);
    r.eta = efficiency(r);
    return r;
}

LocalSplit local_split(const CycleReport& report, const CycleParams& params) {
    if (!report.n) {
        throw std::invalid_argument("local_split: report has no n decomposition (biquartit only)");
    }
    const double n = *report.n;
    LocalSplit out;
    out.q1 = 0.5 * params.h * n;
    out.q2 = -0.5 * params.h_prime * n;
    out.w = out.q1 + out.q2;
    out.w_total = 2.0 * out.w;
    return out;
}

}  // namespace qotto
