// qotto: thermodynamics, local temperatures, entanglement and quasi-static
// Otto cycles of two exchange-coupled spins in a static field.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qotto/entanglement.hpp"
#include "qotto/gibbs_thermo.hpp"
#include "qotto/local_quartit.hpp"
#include "qotto/otto_cycle.hpp"
#include "qotto/presets.hpp"
#include "qotto/sweep.hpp"
#include "qotto/verify.hpp"

namespace {

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string substance = "biquartit";
    std::optional<double> h, h_prime, t_hot, t_cold, j, beta;
    std::string axis;
    double from = 0.0;
    double to = 1.0;
    std::size_t count = 201;
    std::vector<std::string> columns;
    std::string out;
    std::uint64_t seed = 42;
    std::string figure;
};

qotto::SpinKind substance(const Options& o) {
    const auto kind = qotto::parse_substance(o.substance);
    if (!kind) throw UsageError("unknown substance '" + o.substance + "'");
    return *kind;
}

double require(const std::optional<double>& value, const char* flag) {
    if (!value) throw UsageError(std::string("missing required option ") + flag);
    return *value;
}

double inverse_temperature_from(const Options& o) {
    if (o.beta && o.t_hot) throw UsageError("give either --beta or --T, not both");
    if (o.beta) return *o.beta;
    if (o.t_hot) {
        if (*o.t_hot == 0.0) throw UsageError("temperature T = 0 is not allowed");
        return 1.0 / *o.t_hot;
    }
    throw UsageError("missing --beta (or --T)");
}

void emit(const qotto::CsvTable& table, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << table.to_string();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + path + "'");
    file << table.to_string();
}

void add_params(CLI::App* cmd, Options& o, bool cycle, bool thermo) {
    cmd->add_option("--substance", o.substance, "biquartit (two spin-3/2) or biqubit (two spin-1/2)")
        ->check(CLI::IsMember({"biquartit", "biqubit"}));
    cmd->add_option("--h", o.h, "magnetic field h");
    cmd->add_option("--J", o.j, "exchange coupling J (> 0 antiferromagnetic)");
    if (cycle) {
        cmd->add_option("--h-prime", o.h_prime, "field h' during the cold isochore");
        cmd->add_option("--T-prime", o.t_cold, "cold bath temperature T' (nonzero, may be negative)");
    }
    cmd->add_option("--T", o.t_hot, cycle ? "hot bath temperature T (nonzero, may be negative)"
                                          : "temperature T (nonzero); alternative to --beta");
    if (thermo) cmd->add_option("--beta", o.beta, "inverse temperature (may be negative or zero)");
    cmd->add_option("--out", o.out, "output CSV path (default: standard output)");
}

qotto::CsvTable thermo_table(const Options& o) {
    const auto kind = substance(o);
    const double h = require(o.h, "--h");
    const double j = require(o.j, "--J");
    const double beta = inverse_temperature_from(o);
    const auto st = qotto::thermal_state(kind, h, j, beta);

    qotto::CsvTable t;
    t.header = {"beta", "logZ", "F", "U", "S", "C"};
    std::vector<std::string> row{qotto::format_number(beta), qotto::format_number(st.log_z),
                                 beta == 0.0 ? std::string{} : qotto::format_number(qotto::free_energy(st)),
                                 qotto::format_number(qotto::internal_energy(st)),
                                 qotto::format_number(qotto::entropy(st)),
                                 qotto::format_number(qotto::heat_capacity(st))};
    if (kind == qotto::SpinKind::ThreeHalves) {
        t.header.push_back("m_SM");
        row.push_back(qotto::format_number(qotto::thermal_m_sm(h, j, beta)));
    }
    t.rows.push_back(std::move(row));
    return t;
}

qotto::CsvTable local_table(const Options& o) {
    if (substance(o) != qotto::SpinKind::ThreeHalves) {
        throw UsageError("local temperatures are defined for the biquartit only");
    }
    const double h = require(o.h, "--h");
    const double j = require(o.j, "--J");
    const double beta = inverse_temperature_from(o);
    const auto ls = qotto::local_state(h, j, beta);

    const auto guarded = [](auto&& f) -> std::string {
        try {
            return qotto::format_number(f());
        } catch (const std::domain_error&) {
            return {};
        }
    };
    qotto::CsvTable t;
    t.header = {"beta", "pi1", "pi2", "pi3", "pi4", "s_loc", "u_loc", "beta_loc", "beta_Mloc"};
    t.rows.push_back({qotto::format_number(beta), qotto::format_number(ls.populations[0]),
                      qotto::format_number(ls.populations[1]), qotto::format_number(ls.populations[2]),
                      qotto::format_number(ls.populations[3]), qotto::format_number(qotto::local_entropy(ls)),
                      qotto::format_number(qotto::local_internal_energy(ls)),
                      guarded([&] { return qotto::local_beta(h, j, beta); }),
                      guarded([&] { return qotto::spectroscopic_beta(ls); })});
    return t;
}

qotto::CsvTable cycle_table(const Options& o) {
    qotto::CycleParams p;
    p.kind = substance(o);
    p.t_hot = require(o.t_hot, "--T");
    p.t_cold = require(o.t_cold, "--T-prime");
    p.h = require(o.h, "--h");
    p.h_prime = require(o.h_prime, "--h-prime");
    p.j = require(o.j, "--J");
    if (p.t_hot == 0.0 || p.t_cold == 0.0) throw UsageError("bath temperatures must be nonzero");

    const auto r = qotto::run_cycle(p);
    const auto opt = [](const std::optional<double>& v) {
        return v ? qotto::format_number(*v) : std::string{};
    };
    qotto::CsvTable t;
    t.header = {"Q1", "W2", "Q3", "W4", "W_out", "eta", "eta0", "regime", "carnot_h_prime"};
    std::vector<std::string> row{qotto::format_number(r.q1),  qotto::format_number(r.w2),
                                 qotto::format_number(r.q3),  qotto::format_number(r.w4),
                                 qotto::format_number(-r.net_work()), opt(r.eta),
                                 qotto::format_number(r.eta0), std::string(qotto::regime_name(r.regime)),
                                 qotto::format_number(qotto::carnot_point(p.h, p.t_hot, p.t_cold))};
    if (r.n) {
        const auto ls = qotto::local_split(r, p);
        t.header.insert(t.header.end(), {"m", "n", "q1", "q2", "w"});
        row.insert(row.end(), {opt(r.m), opt(r.n), qotto::format_number(ls.q1),
                               qotto::format_number(ls.q2), qotto::format_number(ls.w)});
    }
    t.rows.push_back(std::move(row));
    return t;
}

qotto::CsvTable sweep_table(const Options& o) {
    const auto axis = qotto::parse_axis(o.axis);
    if (!axis) throw UsageError("unknown axis '" + o.axis + "' (J, h_prime, beta, h)");

    qotto::SweepSpec spec;
    spec.substance = substance(o);
    spec.axis = *axis;
    spec.range = {o.from, o.to, o.count};
    spec.outputs = o.columns;
    const auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) spec.fixed[key] = *v;
    };
    put("h", o.h);
    put("h_prime", o.h_prime);
    put("T", o.t_hot);
    put("T_prime", o.t_cold);
    put("J", o.j);
    put("beta", o.beta);
    try {
        qotto::validate(spec);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    return qotto::run_sweep(spec);
}

qotto::CsvTable figure_table(const Options& o) {
    try {
        return qotto::run_preset(qotto::figure_preset(o.figure));
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qotto: equilibrium thermodynamics, local temperatures, entanglement and quasi-static\n"
        "Otto cycles of two exchange-coupled spins (spin 3/2 or 1/2) in a static field.\n"
        "Output is CSV: comma-delimited, LF line endings, header row, '.' decimal point;\n"
        "numbers use the shortest decimal form that round-trips to the same double."};
    // `-h` stays free for the field option `--h`.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    Options o;

    auto* thermo = app.add_subcommand("thermo", "log Z, F, U, S, C (and m_SM) of the Gibbs state");
    add_params(thermo, o, false, true);

    auto* local = app.add_subcommand("local", "reduced quartit populations and local temperatures");
    add_params(local, o, false, true);

    auto* cycle = app.add_subcommand("cycle", "heats, works, efficiency and regime of one Otto cycle");
    add_params(cycle, o, true, false);

    auto* sweep = app.add_subcommand("sweep", "sweep one parameter on a linear grid");
    add_params(sweep, o, true, true);
    sweep->add_option("--axis", o.axis, "swept parameter: J, h_prime, beta or h")->required();
    sweep->add_option("--from", o.from, "grid start")->required();
    sweep->add_option("--to", o.to, "grid stop")->required();
    sweep->add_option("--count", o.count, "grid points (>= 2)")->capture_default_str();
    sweep->add_option("--columns", o.columns, "output columns, comma separated")->delimiter(',');

    auto* figure = app.add_subcommand("figure", "reproduce a figure scenario (fig1 .. fig11)");
    figure->add_option("name", o.figure, "preset name")->required();
    figure->add_option("--out", o.out, "output CSV path (default: standard output)");

    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--seed", o.seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return qotto::verify_all(o.seed, std::cout);
        if (*thermo) emit(thermo_table(o), o.out);
        if (*local) emit(local_table(o), o.out);
        if (*cycle) emit(cycle_table(o), o.out);
        if (*sweep) emit(sweep_table(o), o.out);
        if (*figure) emit(figure_table(o), o.out);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
