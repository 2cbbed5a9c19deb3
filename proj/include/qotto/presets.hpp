#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qotto/sweep.hpp"

namespace qotto {

struct SeriesSweep {
    std::string label;
    SweepSpec spec;
};

/// A figure scenario: one or more sweeps sharing an axis, emitted as a
/// single table with a leading `series` column.
struct ScenarioPreset {
    std::string name;
    std::string description;
    std::vector<SeriesSweep> series;
    std::optional<std::string> expected;
};

/// Presets fig1 .. fig11 with their bath and field parameters. fig6 and fig7 share
/// bath and field values. Throws std::invalid_argument for an unknown name.
ScenarioPreset figure_preset(std::string_view name);

const std::vector<std::string>& preset_names();

/// Concatenates the series tables, prefixing each row with its label.
CsvTable run_preset(const ScenarioPreset& preset, unsigned threads = 0);

}  // namespace qotto
