#include "projdist/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "projdist/distance.hpp"
#include "projdist/errors.hpp"
#include "projdist/matrix_io.hpp"

namespace projdist::cli {

namespace {

std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string sci6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

std::string sig9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string matrix_to_json_sig9(const ComplexMatrix& m) {
    std::ostringstream out;
    out << "{\"dim\": " << m.rows() << ", \"matrix\": [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i == 0 ? "" : ", ") << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Complex v = m(i, j);
            out << (j == 0 ? "" : ", ") << "[" << sig9(v.real()) << ", " << sig9(v.imag()) << "]";
        }
        out << "]";
    }
    out << "]}";
    return out.str();
}

void print_human_report(const DistanceReport& report, std::ostream& out) {
    out << "case=" << (report.case_one ? 1 : 2) << " b=" << fixed6(report.b)
        << " d=" << fixed6(report.d) << "\n";
    out << "dims m00=" << report.intersection_dims[0] << " m01=" << report.intersection_dims[1]
        << " m10=" << report.intersection_dims[2] << " m11=" << report.intersection_dims[3]
        << " m=" << report.generic_dim << "\n";
    if (report.spectrum.empty()) {
        out << "spectrum (empty)\n";
    } else {
        for (const auto& [value, mult] : report.spectrum)
            out << "spectrum t=" << fixed6(value) << " mult=" << mult << "\n";
    }
    out << "residuals projection=" << sci6(report.residual_projection)
        << " orthogonality=" << sci6(report.residual_orthogonality)
        << " distance=" << sci6(report.residual_distance) << "\n";
    if (report.norm_identity_gap)
        out << "norm_identity_gap=" << sci6(*report.norm_identity_gap) << "\n";
    if (report.minimizer_route_gap)
        out << "route_gap=" << sci6(*report.minimizer_route_gap) << "\n";
    if (report.case_one)
        out << "minimizer none (q = 0 attains the distance; not unique)\n";
    else
        out << "minimizer constructed\n";
    if (report.oracle_minimum) {
        out << "oracle min=" << fixed6(*report.oracle_minimum) << " argmin_chi=";
        const auto& argmin = *report.oracle_argmin;
        for (std::size_t j = 0; j < argmin.chi.size(); ++j)
            out << (j ? "," : "") << (argmin.chi[j] ? 1 : 0);
        out << " argmin_omega=";
        for (std::size_t j = 0; j < argmin.omega.size(); ++j)
            out << (j ? "," : "") << fixed6(argmin.omega[j]);
        out << "\n";
    }
}

void print_json_report(const DistanceReport& report, std::ostream& out) {
    std::ostringstream body;
    body << "{\"case\": " << (report.case_one ? 1 : 2) << ", \"b\": " << sig9(report.b)
         << ", \"d\": " << sig9(report.d);
    body << ", \"dims\": {\"m00\": " << report.intersection_dims[0]
         << ", \"m01\": " << report.intersection_dims[1]
         << ", \"m10\": " << report.intersection_dims[2]
         << ", \"m11\": " << report.intersection_dims[3] << ", \"m\": " << report.generic_dim
         << "}";
    body << ", \"spectrum\": [";
    for (std::size_t i = 0; i < report.spectrum.size(); ++i)
        body << (i ? ", " : "") << "{\"value\": " << sig9(report.spectrum[i].first)
             << ", \"multiplicity\": " << report.spectrum[i].second << "}";
    body << "]";
    body << ", \"residuals\": {\"projection\": " << sig9(report.residual_projection)
         << ", \"orthogonality\": " << sig9(report.residual_orthogonality)
         << ", \"distance\": " << sig9(report.residual_distance) << "}";
    if (report.norm_identity_gap)
        body << ", \"norm_identity_gap\": " << sig9(*report.norm_identity_gap);
    if (report.minimizer_route_gap)
        body << ", \"route_gap\": " << sig9(*report.minimizer_route_gap);
    body << ", \"minimizer\": " << (report.case_one ? "\"none\"" : "\"constructed\"");
    body << ", \"q0\": " << (report.q0 ? matrix_to_json_sig9(*report.q0) : "null");
    if (report.oracle_minimum) {
        body << ", \"oracle\": {\"min\": " << sig9(*report.oracle_minimum) << ", \"argmin_chi\": [";
        const auto& argmin = *report.oracle_argmin;
        for (std::size_t j = 0; j < argmin.chi.size(); ++j)
            body << (j ? ", " : "") << (argmin.chi[j] ? 1 : 0);
        body << "], \"argmin_omega\": [";
        for (std::size_t j = 0; j < argmin.omega.size(); ++j)
            body << (j ? ", " : "") << sig9(argmin.omega[j]);
        body << "]}";
    }
    body << "}";
    out << body.str() << "\n";
}

std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            const long value = std::stol(token);
            if (value < 0) throw BadSpec("dimensions must be non-negative");
            dims.push_back(static_cast<std::size_t>(value));
        } catch (const std::logic_error&) {
            throw BadSpec("cannot parse dimension '" + token + "'");
        }
    }
    if (dims.size() != 4) throw BadSpec("--dims expects four comma-separated values");
    return dims;
}

std::vector<std::pair<double, std::size_t>> parse_spectrum(const std::string& text) {
    std::vector<std::pair<double, std::size_t>> spectrum;
    if (text.empty()) return spectrum;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto colon = token.find(':');
        try {
            const double value = std::stod(token.substr(0, colon));
            std::size_t mult = 1;
            if (colon != std::string::npos) {
                const long parsed = std::stol(token.substr(colon + 1));
                if (parsed <= 0) throw BadSpec("multiplicity must be positive");
                mult = static_cast<std::size_t>(parsed);
            }
            spectrum.emplace_back(value, mult);
        } catch (const std::logic_error&) {
            throw BadSpec("cannot parse spectrum entry '" + token + "'");
        }
    }
    return spectrum;
}

} // namespace

int cmd_report(const ReportOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const ComplexMatrix e = read_matrix_file(options.path_e);
        const ComplexMatrix u = read_matrix_file(options.path_u);
        DistanceReport report = full_report(e, u, options.settings);
        if (options.with_oracle && !report.case_one) {
            const CanonicalForm cf = canonical_decomposition(e, u, options.settings);
            const OracleResult oracle =
                oracle_distance(cf, options.oracle_grid, options.settings);
            report.oracle_minimum = oracle.min_value;
            report.oracle_argmin = oracle.argmin;
        }
        if (options.json)
            print_json_report(report, out);
        else
            print_human_report(report, out);
        return 0;
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return 3;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

int cmd_curve(const CurveOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (!(options.b_min >= 0.0 && options.b_min < options.b_max && options.b_max <= 1.0))
            throw BadRange("expected 0 <= min < max <= 1");
        if (options.steps < 2) throw BadRange("need at least two steps");

        std::ofstream file(options.out_path);
        if (!file) throw Error("cannot open " + options.out_path + " for writing");
        file << "b,formula,walters\n";
        const double step =
            (options.b_max - options.b_min) / static_cast<double>(options.steps - 1);
        for (std::size_t i = 0; i < options.steps; ++i) {
            const double b = options.b_min + static_cast<double>(i) * step;
            file << sig9(b) << "," << sig9(distance_formula(b, false)) << ",";
            if (const auto bound = walters_bound(b)) file << sig9(*bound);
            file << "\n";
        }
        out << "wrote " << options.out_path << "\n";
        return 0;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const GeneratedInstance instance = random_instance(options.spec, options.settings);
        const std::string path_e = options.out_prefix + "_e.json";
        const std::string path_u = options.out_prefix + "_u.json";
        write_matrix_file(path_e, instance.e);
        write_matrix_file(path_u, instance.u);
        out << "wrote " << path_e << "\n";
        out << "wrote " << path_u << "\n";
        return 0;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"distance from a projection to the projections orthogonal to their symmetry"};
    app.require_subcommand(1);

    double tol = default_settings().validation_tol;
    app.add_option("--tol", tol, "validation tolerance for input matrices");

    ReportOptions report;
    auto* report_cmd = app.add_subcommand("report", "analyze a (projection, involution) pair");
    report_cmd->add_option("e", report.path_e, "matrix file with the projection")->required();
    report_cmd->add_option("u", report.path_u, "matrix file with the involution")->required();
    report_cmd->add_flag("--oracle", report.with_oracle, "append the exhaustive-search minimum");
    report_cmd->add_option("--oracle-grid", report.oracle_grid, "angle grid size for --oracle");
    report_cmd->add_flag("--json", report.json, "emit the report as JSON");

    CurveOptions curve;
    auto* curve_cmd = app.add_subcommand("curve", "export formula and bound curves as CSV");
    curve_cmd->add_option("--min", curve.b_min, "lower end of the norm range")->required();
    curve_cmd->add_option("--max", curve.b_max, "upper end of the norm range")->required();
    curve_cmd->add_option("--steps", curve.steps, "number of evenly spaced rows")->required();
    curve_cmd->add_option("--out", curve.out_path, "CSV output path")->required();

    GenOptions gen;
    std::string dims_text;
    std::string spectrum_text;
    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded instance as two matrix files");
    gen_cmd->add_option("--dims", dims_text, "m00,m01,m10,m11 intersection dimensions")->required();
    gen_cmd->add_option("--spectrum", spectrum_text,
                        "comma-separated eigenvalues, each optionally value:multiplicity");
    gen_cmd->add_option("--seed", gen.spec.seed, "seed of the conjugating unitary");
    gen_cmd->add_option("--out", gen.out_prefix, "output file prefix")->required();

    std::vector<const char*> argv;
    argv.push_back("projdist");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& ex) {
        return app.exit(ex, out, err);
    }

    Settings settings;
    settings.validation_tol = tol;

    if (report_cmd->parsed()) {
        report.settings = settings;
        return cmd_report(report, out, err);
    }
    if (curve_cmd->parsed()) return cmd_curve(curve, out, err);
    if (gen_cmd->parsed()) {
        try {
            const auto dims = parse_dims(dims_text);
            gen.spec.dim_m00 = dims[0];
            gen.spec.dim_m01 = dims[1];
            gen.spec.dim_m10 = dims[2];
            gen.spec.dim_m11 = dims[3];
            gen.spec.spectrum = parse_spectrum(spectrum_text);
        } catch (const Error& ex) {
            err << "error: " << ex.what() << "\n";
            return 2;
        }
        gen.settings = settings;
        return cmd_gen(gen, out, err);
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace projdist::cli
