#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qotto/spin_algebra.hpp"

namespace qotto {

enum class SweepAxis { J, HPrime, Beta, H };

/// Parameter key of an axis: "J", "h_prime", "beta", "h".
std::string_view axis_key(SweepAxis axis) noexcept;
std::optional<SweepAxis> parse_axis(std::string_view name) noexcept;

std::string_view substance_name(SpinKind kind) noexcept;
std::optional<SpinKind> parse_substance(std::string_view name) noexcept;

/// Linear grid start + k (stop - start) / (count - 1), k = 0..count-1.
struct SweepRange {
    double start = 0.0;
    double stop = 1.0;
    std::size_t count = 201;
};

std::vector<double> grid(const SweepRange& range);

/// One swept axis over fixed parameters. Recognized fixed keys are
/// h, h_prime, T, T_prime, J, beta.
///
/// Output columns and the parameters they need:
///   cycle  (T, T_prime, h, h_prime, J): Q1 W2 Q3 W4 W_out eta eta0 regime
///   biquartit cycle only:               m n q1 q2 w m_SM_hot m_SM_cold
///   thermo (h, J, beta):                S U C F
///   biquartit thermo only:              m_SM beta_loc beta_Mloc s_loc u_loc
struct SweepSpec {
    SpinKind substance = SpinKind::ThreeHalves;
    std::map<std::string, double> fixed;
    SweepAxis axis = SweepAxis::J;
    SweepRange range;
    std::vector<std::string> outputs;
};

/// All known output column names, in canonical order.
const std::vector<std::string>& known_columns();

/// Column set used when a spec lists no outputs: the cycle columns when
/// both bath temperatures are available, otherwise S U C F.
std::vector<std::string> default_columns(const SweepSpec& spec);

/// Throws std::invalid_argument describing the first problem found:
/// the axis also fixed, count outside [2, 1e6], start == stop, non-finite
/// bounds, unknown fixed key or column, a column whose parameters are not
/// all supplied, or a biquartit-only column on the biqubit.
void validate(const SweepSpec& spec);

/// Comma-separated, LF-terminated, header row first. Numbers use the
/// shortest representation that round-trips to the same double.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;
    /// Index of a header column; throws std::out_of_range if absent.
    std::size_t column_index(std::string_view name) const;
    /// Column parsed as doubles; empty cells read as NaN.
    std::vector<double> numeric_column(std::string_view name) const;
    std::vector<std::string> text_column(std::string_view name) const;
};

std::string format_number(double value);

/// One row per grid point in grid order, columns: axis, outputs..., error.
/// A point whose evaluation fails (T = 0, F at beta = 0, ...) leaves the
/// affected cells empty and records the reason in the `error` column.
/// Rows are evaluated on `threads` workers (0: QOTTO_THREADS or hardware
/// concurrency); output is independent of the thread count.
CsvTable run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Worker count from the QOTTO_THREADS environment variable, falling back
/// to the hardware concurrency.
unsigned default_thread_count();

}  // namespace qotto
