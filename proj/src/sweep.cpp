#include "qotto/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "qotto/entanglement.hpp"
#include "qotto/gibbs_thermo.hpp"
#include "qotto/local_quartit.hpp"
#include "qotto/otto_cycle.hpp"

namespace qotto {

namespace {

constexpr std::size_t kMaxGridPoints = 1'000'000;

enum class Group { Cycle, Thermo };

struct ColumnInfo {
    std::string name;
    Group group;
    bool biquartit_only;
};

const std::vector<ColumnInfo>& column_table() {
    static const std::vector<ColumnInfo> table{
        {"Q1", Group::Cycle, false},      {"W2", Group::Cycle, false},
        {"Q3", Group::Cycle, false},      {"W4", Group::Cycle, false},
        {"W_out", Group::Cycle, false},   {"eta", Group::Cycle, false},
        {"eta0", Group::Cycle, false},    {"regime", Group::Cycle, false},
        {"m", Group::Cycle, true},        {"n", Group::Cycle, true},
        {"q1", Group::Cycle, true},       {"q2", Group::Cycle, true},
        {"w", Group::Cycle, true},        {"m_SM_hot", Group::Cycle, true},
        {"m_SM_cold", Group::Cycle, true},
        {"S", Group::Thermo, false},      {"U", Group::Thermo, false},
        {"C", Group::Thermo, false},      {"F", Group::Thermo, false},
        {"m_SM", Group::Thermo, true},    {"beta_loc", Group::Thermo, true},
        {"beta_Mloc", Group::Thermo, true}, {"s_loc", Group::Thermo, true},
        {"u_loc", Group::Thermo, true},
    };
    return table;
}

const ColumnInfo* find_column(std::string_view name) {
    for (const auto& c : column_table()) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

const std::vector<std::string>& group_params(Group g) {
    static const std::vector<std::string> cycle{"T", "T_prime", "h", "h_prime", "J"};
    static const std::vector<std::string> thermo{"h", "J", "beta"};
    return g == Group::Cycle ? cycle : thermo;
}

const std::set<std::string, std::less<>>& fixed_keys() {
    static const std::set<std::string, std::less<>> keys{"h", "h_prime", "T", "T_prime", "J", "beta"};
    return keys;
}

bool has_param(const SweepSpec& spec, const std::string& key) {
    return spec.fixed.contains(key) || axis_key(spec.axis) == key;
}

std::vector<std::string> effective_columns(const SweepSpec& spec) {
    return spec.outputs.empty() ? default_columns(spec) : spec.outputs;
}

// Evaluates every requested column for one grid point, computing the cycle
// report and thermal state at most once.
class RowEvaluator {
public:
    RowEvaluator(const SweepSpec& spec, double axis_value) : spec_(spec), params_(spec.fixed) {
        params_[std::string(axis_key(spec.axis))] = axis_value;
    }

    std::vector<std::string> evaluate(const std::vector<std::string>& columns) {
        std::vector<std::string> cells;
        cells.reserve(columns.size() + 2);
        cells.push_back(format_number(params_.at(std::string(axis_key(spec_.axis)))));
        for (const auto& name : columns) {
            try {
                cells.push_back(cell(name));
            } catch (const std::exception& ex) {
                cells.emplace_back();
                note_error(ex.what());
            }
        }
        cells.push_back(error_);
        return cells;
    }

private:
    double param(const std::string& key) const { return params_.at(key); }

    const CycleParams& cycle_params() {
        if (!cycle_params_) {
            cycle_params_ = CycleParams{spec_.substance, param("T"), param("T_prime"),
                                        param("h"), param("h_prime"), param("J")};
        }
        return *cycle_params_;
    }

    const CycleReport& cycle() {
        if (!cycle_) cycle_ = run_cycle(cycle_params());
        return *cycle_;
    }

    const ThermalState& thermal() {
        if (!thermal_) thermal_ = thermal_state(spec_.substance, param("h"), param("J"), param("beta"));
        return *thermal_;
    }

    const LocalState& local() {
        if (!local_) local_ = local_state(param("h"), param("J"), param("beta"));
        return *local_;
    }

    std::string cell(const std::string& name) {
        if (name == "Q1") return format_number(cycle().q1);
        if (name == "W2") return format_number(cycle().w2);
        if (name == "Q3") return format_number(cycle().q3);
        if (name == "W4") return format_number(cycle().w4);
        if (name == "W_out") return format_number(-cycle().net_work());
        if (name == "eta") return cycle().eta ? format_number(*cycle().eta) : std::string{};
        if (name == "eta0") return format_number(cycle().eta0);
        if (name == "regime") return std::string(regime_name(cycle().regime));
        if (name == "m") return format_number(cycle().m.value());
        if (name == "n") return format_number(cycle().n.value());
        if (name == "q1") return format_number(local_split(cycle(), cycle_params()).q1);
        if (name == "q2") return format_number(local_split(cycle(), cycle_params()).q2);
        if (name == "w") return format_number(local_split(cycle(), cycle_params()).w);
        if (name == "m_SM_hot") {
            return format_number(thermal_m_sm(param("h"), param("J"), inverse_temperature(param("T"))));
        }
        if (name == "m_SM_cold") {
            return format_number(
                thermal_m_sm(param("h_prime"), param("J"), inverse_temperature(param("T_prime"))));
        }
        if (name == "S") return format_number(entropy(thermal()));
        if (name == "U") return format_number(internal_energy(thermal()));
        if (name == "C") return format_number(heat_capacity(thermal()));
        if (name == "F") return format_number(free_energy(thermal()));
        if (name == "m_SM") return format_number(thermal_m_sm(param("h"), param("J"), param("beta")));
        if (name == "beta_loc") return format_number(local_beta(param("h"), param("J"), param("beta")));
        if (name == "beta_Mloc") return format_number(spectroscopic_beta(local()));
        if (name == "s_loc") return format_number(local_entropy(local()));
        if (name == "u_loc") return format_number(local_internal_energy(local()));
        throw std::invalid_argument("unknown column " + name);
    }

    void note_error(const std::string& what) {
        if (error_.find(what) != std::string::npos) return;
        if (!error_.empty()) error_ += "; ";
        error_ += what;
    }

    const SweepSpec& spec_;
    std::map<std::string, double> params_;
    std::optional<CycleParams> cycle_params_;
    std::optional<CycleReport> cycle_;
    std::optional<ThermalState> thermal_;
    std::optional<LocalState> local_;
    std::string error_;
};

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string_view axis_key(SweepAxis axis) noexcept {
    switch (axis) {
        case SweepAxis::J: return "J";
        case SweepAxis::HPrime: return "h_prime";
        case SweepAxis::Beta: return "beta";
        case SweepAxis::H: return "h";
    }
    return "J";
}

std::optional<SweepAxis> parse_axis(std::string_view name) noexcept {
    if (name == "J") return SweepAxis::J;
    if (name == "h_prime" || name == "h-prime") return SweepAxis::HPrime;
    if (name == "beta") return SweepAxis::Beta;
    if (name == "h") return SweepAxis::H;
    return std::nullopt;
}

std::string_view substance_name(SpinKind kind) noexcept {
    return kind == SpinKind::ThreeHalves ? "biquartit" : "biqubit";
}

std::optional<SpinKind> parse_substance(std::string_view name) noexcept {
    if (name == "biquartit") return SpinKind::ThreeHalves;
    if (name == "biqubit") return SpinKind::Half;
    return std::nullopt;
}

std::vector<double> grid(const SweepRange& range) {
    std::vector<double> out(range.count);
    const double step = (range.stop - range.start) / static_cast<double>(range.count - 1);
    for (std::size_t k = 0; k < range.count; ++k) {
        out[k] = range.start + static_cast<double>(k) * step;
    }
    if (range.count > 1) out.back() = range.stop;
    return out;
}

const std::vector<std::string>& known_columns() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& c : column_table()) v.push_back(c.name);
        return v;
    }();
    return names;
}

std::vector<std::string> default_columns(const SweepSpec& spec) {
    if (has_param(spec, "T") && has_param(spec, "T_prime")) {
        return {"Q1", "W2", "Q3", "W4", "eta", "regime"};
    }
    return {"S", "U", "C", "F"};
}

void validate(const SweepSpec& spec) {
    const std::string axis(axis_key(spec.axis));
    if (spec.fixed.contains(axis)) {
        throw std::invalid_argument("axis parameter '" + axis + "' is also fixed");
    }
    for (const auto& [key, value] : spec.fixed) {
        if (!fixed_keys().contains(key)) throw std::invalid_argument("unknown parameter '" + key + "'");
        if (!std::isfinite(value)) throw std::invalid_argument("parameter '" + key + "' is not finite");
    }
    if (spec.range.count < 2 || spec.range.count > kMaxGridPoints) {
        throw std::invalid_argument("grid count must lie in [2, 1000000]");
    }
    if (!std::isfinite(spec.range.start) || !std::isfinite(spec.range.stop)) {
        throw std::invalid_argument("grid bounds must be finite");
    }
    if (spec.range.start == spec.range.stop) {
        throw std::invalid_argument("grid start equals stop");
    }
    for (const auto& name : effective_columns(spec)) {
        const ColumnInfo* info = find_column(name);
        if (info == nullptr) throw std::invalid_argument("unknown column '" + name + "'");
        if (info->biquartit_only && spec.substance != SpinKind::ThreeHalves) {
            throw std::invalid_argument("column '" + name + "' is available for the biquartit only");
        }
        for (const auto& key : group_params(info->group)) {
            if (!has_param(spec, key)) {
                throw std::invalid_argument("column '" + name + "' requires parameter '" + key + "'");
            }
        }
    }
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return {buf, res.ptr};
}

std::string CsvTable::to_string() const {
    std::string out;
    const auto append_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) out += ',';
            out += csv_escape(row[i]);
        }
        out += '\n';
    };
    append_row(header);
    for (const auto& row : rows) append_row(row);
    return out;
}

std::size_t CsvTable::column_index(std::string_view name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw std::out_of_range("no CSV column '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - header.begin());
}

std::vector<double> CsvTable::numeric_column(std::string_view name) const {
    const auto idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        const auto& cell = row[idx];
        double value = std::numeric_limits<double>::quiet_NaN();
        if (!cell.empty()) {
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (res.ec != std::errc{}) value = std::numeric_limits<double>::quiet_NaN();
        }
        out.push_back(value);
    }
    return out;
}

std::vector<std::string> CsvTable::text_column(std::string_view name) const {
    const auto idx = column_index(name);
    std::vector<std::string> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[idx]);
    return out;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("QOTTO_THREADS")) {
        unsigned value = 0;
        const std::string_view s(env);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
        if (res.ec == std::errc{} && value > 0) return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CsvTable run_sweep(const SweepSpec& spec, unsigned threads) {
    validate(spec);
    const auto columns = effective_columns(spec);
    const auto points = grid(spec.range);

    CsvTable table;
    table.header.emplace_back(axis_key(spec.axis));
    table.header.insert(table.header.end(), columns.begin(), columns.end());
    table.header.emplace_back("error");
    table.rows.resize(points.size());

    const unsigned workers = std::clamp<unsigned>(threads == 0 ? default_thread_count() : threads, 1u,
                                                  static_cast<unsigned>(points.size()));
    const auto work = [&](unsigned offset) {
        for (std::size_t k = offset; k < points.size(); k += workers) {
            table.rows[k] = RowEvaluator(spec, points[k]).evaluate(columns);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    return table;
}

}  // namespace qotto
