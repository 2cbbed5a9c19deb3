#include "qotto/presets.hpp"

#include <stdexcept>

namespace qotto {

namespace {

using Fixed = std::map<std::string, double>;

// Default ranges where a scenario fixes none. Even counts
// keep beta = 0 off symmetric grids.
constexpr SweepRange kBetaRange{-5.0, 5.0, 200};

SweepSpec make_spec(SpinKind kind, Fixed fixed, SweepAxis axis, SweepRange range,
                    std::vector<std::string> outputs) {
    return SweepSpec{kind, std::move(fixed), axis, range, std::move(outputs)};
}

std::string j_label(double j) {
    return "J=" + format_number(j);
}

ScenarioPreset beta_series(std::string name, std::string description, double h,
                           std::vector<double> couplings, std::vector<std::string> outputs) {
    ScenarioPreset p{std::move(name), std::move(description), {}, std::nullopt};
    for (double j : couplings) {
        p.series.push_back({j_label(j), make_spec(SpinKind::ThreeHalves, {{"h", h}, {"J", j}},
                                                  SweepAxis::Beta, kBetaRange, outputs)});
    }
    return p;
}

ScenarioPreset both_substances(std::string name, std::string description, const Fixed& fixed,
                               SweepRange range, const std::vector<std::string>& outputs) {
    ScenarioPreset p{std::move(name), std::move(description), {}, std::nullopt};
    p.series.push_back({"biquartit", make_spec(SpinKind::ThreeHalves, fixed, SweepAxis::J, range, outputs)});
    p.series.push_back({"biqubit", make_spec(SpinKind::Half, fixed, SweepAxis::J, range, outputs)});
    return p;
}

const Fixed kFig5{{"T", -1.0}, {"T_prime", -3.0}, {"h", 1.0}, {"h_prime", -1.0}};
const Fixed kFig6{{"T", -1.0}, {"T_prime", 2.0}, {"h", 4.0}, {"h_prime", 0.155}};
const Fixed kFig8{{"T", 2.5}, {"T_prime", 0.25}, {"h", 16.0}, {"h_prime", 12.0}};
const Fixed kFig9{{"T", 2.0}, {"T_prime", 1.0}, {"h", 4.0}, {"h_prime", -1.0}};

const std::vector<std::string> kStageColumns{"Q1", "W2", "Q3", "W4", "eta", "regime"};

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig1", "fig2", "fig3", "fig4", "fig5", "fig6",
                                                "fig7", "fig8", "fig9", "fig10", "fig11"};
    return names;
}

ScenarioPreset figure_preset(std::string_view name) {
    if (name == "fig1") {
        return beta_series("fig1", "entropy against internal energy, h = 1", 1.0, {0.0, 0.1},
                           {"U", "S"});
    }
    if (name == "fig2") {
        return beta_series("fig2", "U, S, C against beta, h = 1, J = 0.1 (J = 0 for the symmetric case)",
                           1.0, {0.1, 0.0}, {"U", "S", "C"});
    }
    if (name == "fig3") {
        return beta_series("fig3", "entanglement m_SM and heat capacity against beta, h = 1", 1.0,
                           {0.1, 0.4}, {"C", "m_SM"});
    }
    if (name == "fig4") {
        return beta_series("fig4", "local inverse temperatures against beta, h = 2", 2.0,
                           {0.0, 0.1, 0.2}, {"beta_loc", "beta_Mloc"});
    }
    if (name == "fig5") {
        auto p = both_substances("fig5", "stage heats and works, T = -1, T' = -3, h = 1, h' = -1",
                                 kFig5, {-1.0, 1.0, 401}, kStageColumns);
        p.expected = "an interval of J with Q1 > 0, Q3 > 0, W2 < 0, W4 < 0 and eta = 1";
        return p;
    }
    if (name == "fig6") {
        return both_substances("fig6", "stage heats and works, T = -1, T' = 2, h = 4, h' = 0.155",
                               kFig6, {-0.5, 0.0, 501}, kStageColumns);
    }
    if (name == "fig7") {
        auto p = both_substances("fig7", "efficiency, parameters of fig6", kFig6, {-0.5, 0.0, 501},
                                 {"eta", "Q1", "Q3", "regime"});
        p.expected = "max eta 0.999: biquartit at J = -0.11 (Q3 = -0.0021), biqubit at J = -0.26 (Q3 = -0.0028)";
        return p;
    }
    if (name == "fig8") {
        auto p = both_substances("fig8", "efficiency, T = 2.5, T' = 0.25, h = 16, h' = 12", kFig8,
                                 {0.0, 4.0, 401}, {"eta", "eta0", "Q1", "Q3", "regime"});
        p.expected = "eta0 = 0.25; biquartit eta exceeds 0.75 for some J > 0; eta below the Carnot value 0.9";
        return p;
    }
    if (name == "fig9") {
        auto p = both_substances("fig9", "stage heats and works, T = 2, T' = 1, h = 4, h' = -1",
                                 kFig9, {-1.0, 1.0, 401}, kStageColumns);
        p.expected = "an interval of J with Q1 < 0, Q3 < 0, W2 > 0, W4 > 0 and eta = 1";
        return p;
    }
    if (name == "fig10") {
        const std::vector<std::string> cols{"W2", "W4", "m_SM_hot", "m_SM_cold", "regime"};
        ScenarioPreset p{"fig10", "work against entanglement, parameters of fig5 and fig9", {}, std::nullopt};
        p.series.push_back({"fig5", make_spec(SpinKind::ThreeHalves, kFig5, SweepAxis::J, {-1.0, 1.0, 401}, cols)});
        p.series.push_back({"fig9", make_spec(SpinKind::ThreeHalves, kFig9, SweepAxis::J, {-1.0, 1.0, 401}, cols)});
        return p;
    }
    if (name == "fig11") {
        ScenarioPreset p{"fig11", "work against h', h = 1, T = 1, T' = 0.5", {}, std::nullopt};
        for (double j : {0.0, 0.2, -0.2}) {
            p.series.push_back({j_label(j),
                                make_spec(SpinKind::ThreeHalves, {{"h", 1.0}, {"T", 1.0}, {"T_prime", 0.5}, {"J", j}},
                                          SweepAxis::HPrime, {0.1, 1.5, 1000},
                                          {"W_out", "W2", "W4", "Q1", "Q3", "regime"})});
        }
        p.expected = "J = 0: refrigerator below h' = 0.5, engine up to h' = 1, heater above";
        return p;
    }
    throw std::invalid_argument("unknown figure preset '" + std::string(name) + "'");
}

CsvTable run_preset(const ScenarioPreset& preset, unsigned threads) {
    CsvTable out;
    for (const auto& s : preset.series) {
        auto table = run_sweep(s.spec, threads);
        if (out.header.empty()) {
            out.header.push_back("series");
            out.header.insert(out.header.end(), table.header.begin(), table.header.end());
        }
        for (auto& row : table.rows) {
            row.insert(row.begin(), s.label);
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

}  // namespace qotto
