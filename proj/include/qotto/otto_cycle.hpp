#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qotto/spin_algebra.hpp"

namespace qotto {

/// Quasi-static Otto cycle controls. Stage 1 thermalizes at (h, t_hot),
/// stage 2 ramps h -> h_prime, stage 3 thermalizes at (h_prime, t_cold),
/// stage 4 ramps back. Either temperature may be negative, neither zero.
struct CycleParams {
    SpinKind kind = SpinKind::ThreeHalves;
    double t_hot = 1.0;
    double t_cold = 0.5;
    double h = 1.0;
    double h_prime = 0.5;
    double j = 0.0;
};

enum class Regime {
    HeatEngine,        // Q1 > 0, Q3 < 0, W2+W4 < 0
    Refrigerator,      // W2+W4 > 0, Q3 > 0
    Heater,            // W2+W4 > 0, Q1 > 0, Q3 < 0
    WorkToHeat,        // Q1 < 0, Q3 < 0, W2+W4 > 0
    PureHeatTransfer,  // W2+W4 = 0, Q1 > 0, Q3 < 0
    DoubleHeatInput,   // Q1 > 0, Q3 > 0, W2+W4 < 0
    Other,
};

std::string_view regime_name(Regime regime) noexcept;

/// Heat and work per stage. Q > 0: heat absorbed by the working substance;
/// W > 0: work done on it. m and n are set for the biquartit only.
struct CycleReport {
    double q1 = 0.0;
    double w2 = 0.0;
    double q3 = 0.0;
    double w4 = 0.0;
    std::optional<double> m;
    std::optional<double> n;
    std::vector<double> p;
    std::vector<double> p_prime;
    std::optional<double> eta;
    double eta0 = 0.0;
    Regime regime = Regime::Other;

    double net_work() const noexcept { return w2 + w4; }
    /// max(1, |Q1|, |W2|, |Q3|, |W4|); the reference for "within 1e-12 * scale".
    double scale() const noexcept;
};

/// Evaluates all four stages with levels paired by index across the field
/// ramps. Throws std::domain_error for a zero or non-finite temperature.
CycleReport run_cycle(const CycleParams& params);

struct HeatDecomposition {
    double m = 0.0;  // coefficient of J in Q1
    double n = 0.0;  // coefficient of h in Q1
};

/// Splits Q1 = J m + h n for biquartit population vectors p (stage 1) and
/// p' (stage 3), both in level-index order:
///   m = -11 (d1 + d2 + d9) + 9 (d5 + d11 + ... + d16) - 3 (d3 + d4 + d6 + d7 + d10) - 15 d8
///   n = -d1 + d2 - d4 + d6 - d14 + d15 + 2 (-d3 + d7 - d13 + d16) + 3 (-d5 + d12)
/// with d_i = p_i - p'_i. Throws std::invalid_argument unless both have 16 entries.
HeatDecomposition heat_decomposition(std::span<const double> p, std::span<const double> p_prime);

/// Default classification threshold: 1e-12 * max(|Q1|, |Q3|, |W2+W4|, 1).
double default_regime_eps(const CycleReport& report) noexcept;

Regime classify_regime(const CycleReport& report, std::optional<double> eps = std::nullopt);

/// Conversion efficiency for the regimes where one is defined:
///   HeatEngine       -(W2+W4) / Q1
///   DoubleHeatInput  -(W2+W4) / (Q1+Q3)   (= 1 by energy balance)
///   WorkToHeat       -(Q1+Q3) / (W2+W4)   (= 1 by energy balance)
/// Empty otherwise.
std::optional<double> efficiency(const CycleReport& report);

/// Uncoupled-spin efficiency 1 - h'/h (NaN at h = 0).
double uncoupled_efficiency(double h, double h_prime) noexcept;

/// Closed form eta0 / (1 + J m / (h n)) of the engine efficiency.
/// Empty when m, n are unavailable or h n = 0.
std::optional<double> efficiency_closed_form(const CycleReport& report, const CycleParams& params);

/// Field ratio at which the uncoupled device switches between refrigerator
/// and engine: h' = h T_cold / T_hot. Throws std::domain_error if T_hot = 0.
double carnot_point(double h, double t_hot, double t_cold);

/// Per-particle view of the biquartit cycle.
///   q1 = (h/2) n        heat exchanged by one quartit with the hot bath
///   q2 = -(h'/2) n      heat exchanged by one quartit with the cold bath
///   w  = q1 + q2 = ((h - h')/2) n
///   w_total = 2 w = (h - h') n = -(W2 + W4)
/// With these, Q1 = J m + 2 q1 and Q3 = -J m + 2 q2.
struct LocalSplit {
    double q1 = 0.0;
    double q2 = 0.0;
    double w = 0.0;
    double w_total = 0.0;
};

/// Throws std::invalid_argument when the report carries no n (biqubit).
LocalSplit local_split(const CycleReport& report, const CycleParams& params);

}  // namespace qotto
