#include "triality/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triality/bell.hpp"
#include "triality/interferometer.hpp"
#include "triality/io.hpp"
#include "triality/localops.hpp"
#include "triality/measures.hpp"
#include "triality/sampling.hpp"

namespace triality {

namespace {

std::string sig12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Writes to config.output_path when set, otherwise to the stream.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (config.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output_path);
    if (!file) {
        throw Error(ErrorCode::ParseError,
                    "cannot write " + config.output_path);
    }
    file << text;
}

std::string report_csv(const ComplementarityReport& r) {
    std::ostringstream os;
    os << "concurrence,V1,V2,P1,P2,S1,S2,eof,D1,D2,c1,c2,bell,"
          "triality_residual_1,triality_residual_2\n";
    os << sig12(r.concurrence) << ',' << sig12(r.v1) << ',' << sig12(r.v2)
       << ',' << sig12(r.p1) << ',' << sig12(r.p2) << ',' << sig12(r.s1) << ','
       << sig12(r.s2) << ',' << sig12(r.eof) << ',' << sig12(r.d1) << ','
       << sig12(r.d2) << ',' << sig12(r.c1) << ',' << sig12(r.c2) << ','
       << (r.bell ? sig12(*r.bell) : std::string()) << ','
       << sig12(r.triality_residual_1) << ',' << sig12(r.triality_residual_2)
       << '\n';
    return os.str();
}

struct SuiteResult {
    std::string name;
    std::string statistic;
    double worst = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

SuiteResult triality_suite(SeededSource src, int samples, double tol) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const DensityMatrix rho = to_density(haar_pure(src));
        worst = std::max({worst, std::abs(triality_residual(rho, 1)),
                          std::abs(triality_residual(rho, 2))});
    }
    return {"triality", "max |1 - (C^2 + V_k^2 + P_k^2)|", worst, tol,
            worst <= tol};
}

SuiteResult mixed_suite(SeededSource src, int samples, double tol) {
    double most_negative = 0.0;
    for (int i = 0; i < samples; ++i) {
        const DensityMatrix rho = random_density(src, 4);
        most_negative = std::min({most_negative, triality_residual(rho, 1),
                                  triality_residual(rho, 2)});
    }
    return {"mixed", "most negative residual", most_negative, tol,
            most_negative >= -tol};
}

SuiteResult invariance_suite(SeededSource src, int samples, double tol) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const DensityMatrix rho = to_density(haar_pure(src));
        const DensityMatrix rotated = apply_local(random_local_unitary(src), rho);
        worst = std::max(
            {worst,
             std::abs(concurrence_mixed(rho) - concurrence_mixed(rotated)),
             std::abs(local_quantities(rho, 1).s - local_quantities(rotated, 1).s),
             std::abs(local_quantities(rho, 2).s - local_quantities(rotated, 2).s)});
    }
    return {"invariance", "max |dC|, |dS_k| over random local unitaries", worst,
            tol, worst <= tol};
}

SuiteResult bell_suite(SeededSource src, int samples, double tol) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const PureState state = haar_pure(src);
        const double formula = bell_bound_pure(state);
        const double optimized = chsh_maximize(to_density(state));
        worst = std::max(worst, std::abs(optimized - formula));
    }
    return {"bell", "max |chsh_maximize - 2 sqrt(1 + C^2)|", worst, tol,
            worst <= tol};
}

std::string resolved_format(const RunConfig& config, const char* fallback) {
    if (config.format.empty()) {
        return fallback;
    }
    if (config.format != "json" && config.format != "csv") {
        throw Error(ErrorCode::ParseError,
                    "format must be json or csv, got " + config.format);
    }
    return config.format;
}

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out) {
    const StateFile state = load_state_file(config.input_path);
    const ComplementarityReport report = full_report(state.density);
    if (resolved_format(config, "json") == "csv") {
        emit(config, out, report_csv(report));
    } else {
        emit(config, out, report_to_json(report).dump(2) + "\n");
    }
    return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    if (config.samples < 1) {
        throw Error(ErrorCode::DomainError, "samples must be >= 1");
    }
    const SeededSource root(config.seed);
    const std::vector<SuiteResult> results = {
        triality_suite(root.child(0), config.samples, config.tol_triality),
        mixed_suite(root.child(1), config.samples, config.tol_mixed),
        invariance_suite(root.child(2), config.samples, config.tol_invariance),
        bell_suite(root.child(3), config.samples, config.tol_bell),
    };
    bool all_pass = true;
    nlohmann::ordered_json j;
    j["seed"] = config.seed;
    j["samples"] = config.samples;
    j["suites"] = nlohmann::ordered_json::array();
    for (const SuiteResult& r : results) {
        nlohmann::ordered_json s;
        s["name"] = r.name;
        s["statistic"] = r.statistic;
        s["worst"] = round_sig12(r.worst);
        s["tolerance"] = r.tolerance;
        s["pass"] = r.pass;
        j["suites"].push_back(s);
        all_pass = all_pass && r.pass;
    }
    j["pass"] = all_pass;
    emit(config, out, j.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
    if (config.points < 2) {
        throw Error(ErrorCode::DomainError, "points must be >= 2");
    }
    const bool is_schmidt = config.family == "schmidt";
    if (!is_schmidt && config.family != "werner") {
        throw Error(ErrorCode::UnknownFamily,
                    "unknown sweep family \"" + config.family +
                        "\" (want schmidt or werner)");
    }
    struct Row {
        double parameter;
        ComplementarityReport report;
    };
    std::vector<Row> rows;
    rows.reserve(size_t(config.points));
    for (int i = 0; i < config.points; ++i) {
        const double frac = double(i) / (config.points - 1);
        if (is_schmidt) {
            const double theta = 0.5 * std::numbers::pi * frac;
            Eigen::Vector4cd amps;
            amps << std::cos(theta), 0.0, 0.0, std::sin(theta);
            rows.push_back({theta, full_report(to_density(make_pure(amps)))});
        } else {
            rows.push_back({frac, full_report(werner(frac))});
        }
    }

    if (resolved_format(config, "csv") == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const Row& row : rows) {
            nlohmann::ordered_json o;
            o["parameter"] = round_sig12(row.parameter);
            o["C"] = round_sig12(row.report.concurrence);
            o["V1"] = round_sig12(row.report.v1);
            o["P1"] = round_sig12(row.report.p1);
            o["S1"] = round_sig12(row.report.s1);
            o["E"] = round_sig12(row.report.eof);
            o["D1"] = round_sig12(row.report.d1);
            o["c1"] = round_sig12(row.report.c1);
            if (is_schmidt) {
                o["B"] = round_sig12(row.report.bell.value());
            }
            j.push_back(o);
        }
        emit(config, out, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "parameter,C,V1,P1,S1,E,D1,c1" << (is_schmidt ? ",B" : "") << "\n";
    for (const Row& row : rows) {
        const ComplementarityReport& r = row.report;
        os << sig12(row.parameter) << ',' << sig12(r.concurrence) << ','
           << sig12(r.v1) << ',' << sig12(r.p1) << ',' << sig12(r.s1) << ','
           << sig12(r.eof) << ',' << sig12(r.d1) << ',' << sig12(r.c1);
        if (is_schmidt) {
            os << ',' << sig12(r.bell.value());
        }
        os << '\n';
    }
    emit(config, out, os.str());
    return 0;
}

int cmd_simulate(const RunConfig& config, std::ostream& out) {
    if (config.grid_n < 8) {
        throw Error(ErrorCode::DomainError, "grid must be >= 8");
    }
    const StateFile state = load_state_file(config.input_path);
    const double concurrence = concurrence_mixed(state.density);

    nlohmann::ordered_json summary;
    summary["kind"] = state.pure ? "pure" : "mixed";
    summary["grid_n"] = config.grid_n;

    FringeData fringes;
    if (state.pure) {
        // Schmidt-aligned transducers make the two-particle visibility
        // reproduce the concurrence for every pure state.
        const auto [t1, t2] = schmidt_aligned_family(*state.pure);
        fringes = simulate_fringes(state.density, t1, t2, config.grid_n);
        summary["transducers"] = "schmidt_aligned";
    } else {
        const TransducerFamily t = symmetric_family();
        fringes = simulate_fringes(state.density, t, t, config.grid_n);
        summary["transducers"] = "symmetric";
    }
    summary["v1"] = round_sig12(fringes.v1);
    summary["v2"] = round_sig12(fringes.v2);
    summary["v12"] = round_sig12(fringes.v12);
    summary["concurrence"] = round_sig12(concurrence);
    summary["v12_minus_concurrence"] = round_sig12(fringes.v12 - concurrence);
    if (state.pure) {
        const auto [u1, u2] = schmidt_rotations(*state.pure);
        const DensityMatrix rotated =
            apply_local(LocalUnitary{u1, u2}, state.density);
        const double v12sq = fringes.v12 * fringes.v12;
        const double p1 = local_quantities(rotated, 1).p;
        const double p2 = local_quantities(rotated, 2).p;
        summary["triality_residual_1"] =
            round_sig12(1.0 - (v12sq + fringes.v1 * fringes.v1 + p1 * p1));
        summary["triality_residual_2"] =
            round_sig12(1.0 - (v12sq + fringes.v2 * fringes.v2 + p2 * p2));
    } else {
        summary["v12_exceeds_concurrence"] = fringes.v12 > concurrence + 1e-6;
    }

    if (!config.output_path.empty()) {
        std::ofstream csv(config.output_path);
        if (!csv) {
            throw Error(ErrorCode::ParseError,
                        "cannot write " + config.output_path);
        }
        write_fringe_csv(fringes, csv);
        summary["csv"] = config.output_path;
    }
    out << summary.dump(2) << "\n";
    return 0;
}

int cmd_bell(const RunConfig& config, std::ostream& out) {
    const StateFile state = load_state_file(config.input_path);
    nlohmann::ordered_json j;
    if (!state.pure) {
        j["mixed"] = true;
        j["optimized"] = round_sig12(chsh_maximize(state.density));
        j["note"] = "input is mixed; the concurrence formula applies to pure "
                    "states only";
        emit(config, out, j.dump(2) + "\n");
        return 0;
    }
    const double formula = bell_bound_pure(*state.pure);
    const double optimized = chsh_maximize(state.density);
    const double gap = std::abs(optimized - formula);
    j["formula"] = round_sig12(formula);
    j["optimized"] = round_sig12(optimized);
    j["gap"] = round_sig12(gap);
    j["pass"] = gap <= config.tol_bell;
    emit(config, out, j.dump(2) + "\n");
    return gap <= config.tol_bell ? 0 : 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    RunConfig config;

    // CLI11 option names cannot carry the dotted --tol.<suite> spelling, so
    // those flags are peeled off before regular parsing.
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    std::vector<std::string> filtered;
    try {
        for (size_t i = 0; i < args.size(); ++i) {
            const std::string& arg = args[i];
            if (arg.rfind("--tol.", 0) != 0) {
                filtered.push_back(arg);
                continue;
            }
            std::string name = arg.substr(6);
            std::string value;
            const size_t eq = name.find('=');
            if (eq != std::string::npos) {
                value = name.substr(eq + 1);
                name = name.substr(0, eq);
            } else if (i + 1 < args.size()) {
                value = args[++i];
            } else {
                throw Error(ErrorCode::ParseError, "missing value for " + arg);
            }
            double parsed = 0.0;
            try {
                parsed = std::stod(value);
            } catch (const std::exception&) {
                throw Error(ErrorCode::ParseError,
                            "bad tolerance value \"" + value + "\" for " + arg);
            }
            if (name == "triality") {
                config.tol_triality = parsed;
            } else if (name == "mixed") {
                config.tol_mixed = parsed;
            } else if (name == "invariance") {
                config.tol_invariance = parsed;
            } else if (name == "bell") {
                config.tol_bell = parsed;
            } else {
                throw Error(ErrorCode::ParseError,
                            "unknown tolerance suite \"" + name +
                                "\" (want triality, mixed, invariance, bell)");
            }
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }

    CLI::App app{"two-qubit complementarity toolkit", "triality"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input) {
            sub->add_option("--input", config.input_path, "state JSON file")
                ->required();
        }
        sub->add_option("--out", config.output_path, "output file path");
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "full complementarity report for one state");
    add_common(analyze, true);
    analyze->add_option("--format", config.format, "json (default) or csv");

    CLI::App* verify = app.add_subcommand(
        "verify", "run the property suites (triality, mixed, invariance, bell)");
    add_common(verify, false);
    verify->add_option("--samples", config.samples, "draws per suite");
    verify->add_option("--seed", config.seed, "generator seed");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "tabulate quantities along a parametric family");
    add_common(sweep, false);
    sweep->add_option("--family", config.family, "schmidt or werner");
    sweep->add_option("--points", config.points, "number of parameter values");
    sweep->add_option("--format", config.format, "csv (default) or json");

    CLI::App* simulate = app.add_subcommand(
        "simulate", "interferometric fringe simulation and visibilities");
    add_common(simulate, true);
    simulate->add_option("--grid", config.grid_n, "phase grid points per axis");

    CLI::App* bell = app.add_subcommand(
        "bell", "CHSH optimizer vs the concurrence formula");
    add_common(bell, true);

    // CLI11's vector overload consumes the arguments back to front.
    std::reverse(filtered.begin(), filtered.end());
    try {
        app.parse(filtered);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ParseError: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(config, out);
        }
        if (verify->parsed()) {
            return cmd_verify(config, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(config, out);
        }
        if (simulate->parsed()) {
            return cmd_simulate(config, out);
        }
        if (bell->parsed()) {
            return cmd_bell(config, out);
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "ParseError: no command given\n";
    return 2;
}

}  // namespace triality
