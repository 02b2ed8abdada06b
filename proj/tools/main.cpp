// nodoid: first eigenvalue of the periodic Jacobi operator on Delaunay nodoids.
//
// Exit codes: 0 success, 2 usage, 3 numerical failure, 4 I/O failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "commands.hpp"
#include "nodoid/errors.hpp"
#include "nodoid/parallel.hpp"

namespace {

using namespace nodoid;
using namespace nodoid::cli;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

void emit(const CommandOutput& out, Format format, const std::string& path) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!path.empty()) {
        file.open(path, std::ios::binary);
        if (!file) throw IoError("cannot open '" + path + "' for writing");
        os = &file;
    }
    switch (format) {
        case Format::json: write_record(*os, out.record); break;
        case Format::csv: write_csv(*os, out.table); break;
        case Format::text: write_text(*os, out.table); break;
    }
    os->flush();
    if (!*os) throw IoError("failed writing output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi-operator eigenvalues and the first bifurcation point of Delaunay nodoids"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name = "json";
    app.add_option("--format", format_name, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string method_name = "both";
    auto add_method = [&method_name](CLI::App* sub) {
        sub->add_option("--method", method_name, "shoot, ritz or both")
            ->check(CLI::IsMember({"shoot", "ritz", "both"}));
    };
    bool timings = false;

    EigenArgs eigen;
    std::string eigen_out;
    auto* eigen_cmd = app.add_subcommand("eigen", "First eigenvalue and Ritz spectrum for one mass");
    eigen_cmd->add_option("--mass", eigen.mass, "Mass m < 0")->required();
    add_method(eigen_cmd);
    eigen_cmd->add_option("--ritz-n", eigen.ritz_n, "Fourier basis size");
    eigen_cmd->add_option("--tol", eigen.tol, "Shooting bisection tolerance");
    eigen_cmd->add_option("--out", eigen_out, "Write output here instead of stdout");
    eigen_cmd->add_flag("--timings", timings, "Include wall-clock timings in diagnostics");

    Table1Args table1;
    std::string table1_out;
    auto* table1_cmd = app.add_subcommand("table1", "Recompute the seven-mass eigenvalue table");
    table1_cmd->add_option("--ritz-n", table1.ritz_n, "Fourier basis size");
    table1_cmd->add_option("--out", table1_out, "Write output here instead of stdout");
    table1_cmd->add_flag("--timings", timings, "Include wall-clock timings in diagnostics");

    BifurcateArgs bif;
    std::string bif_out;
    auto* bif_cmd = app.add_subcommand("bifurcate", "Locate the first bifurcation point");
    add_method(bif_cmd);
    bif_cmd->add_option("--tol", bif.tol, "Bisection tolerance on m");
    bif_cmd->add_option("--ritz-n", bif.ritz_n, "Fourier basis size for the Ritz route");
    bif_cmd->add_option("--out", bif_out, "Write output here instead of stdout");
    bif_cmd->add_flag("--timings", timings, "Include wall-clock timings in diagnostics");

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Scan lambda0 over a mass interval, write CSV");
    scan_cmd->add_option("--mass-min", scan.mass_min, "Smallest mass");
    scan_cmd->add_option("--mass-max", scan.mass_max, "Largest mass (< 0)");
    scan_cmd->add_option("--steps", scan.steps, "Number of masses (>= 2)");
    add_method(scan_cmd);
    scan_cmd->add_option("--ritz-n", scan.ritz_n, "Fourier basis size");
    scan_cmd->add_option("--out", scan.out_path, "CSV output path");
    scan_cmd->add_flag("--timings", timings, "Include wall-clock timings in diagnostics");

    ProfileArgs profile;
    auto* profile_cmd = app.add_subcommand("profile", "Export the profile curve (CSV) or surface (OBJ)");
    profile_cmd->add_option("--mass", profile.mass, "Mass m < 0")->required();
    profile_cmd->add_option("--samples", profile.samples, "Samples along one period (>= 16)");
    profile_cmd->add_option("--theta-samples", profile.theta_samples, "Samples around the axis");
    profile_cmd->add_option("--kind", profile.kind, "csv or obj");
    profile_cmd->add_option("--out", profile.out_path, "Output path")->required();

    PlotArgs plot;
    std::optional<double> plot_lambda;
    auto* plot_cmd = app.add_subcommand("plot", "Write an SVG plot");
    plot_cmd->add_option("--what", plot.what, "eigenfunction, potential or bounds")
        ->check(CLI::IsMember({"eigenfunction", "potential", "bounds"}));
    plot_cmd->add_option("--mass", plot.mass, "Mass m < 0");
    plot_cmd->add_option("--lambda", plot_lambda, "Spectral parameter (default: converged lambda0)");
    plot_cmd->add_option("--samples", plot.samples, "Number of plotted samples");
    plot_cmd->add_option("--out", plot.out_path, "Output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const Format format = parse_format(format_name);
        const auto method = bifurcation::parse_method(method_name);
        eigen.method = bif.method = scan.method = method;
        eigen.timings = table1.timings = bif.timings = scan.timings = timings;
        plot.lambda = plot_lambda;

        if (*eigen_cmd) {
            emit(cmd_eigen(eigen), format, eigen_out);
        } else if (*table1_cmd) {
            emit(cmd_table1(table1), format, table1_out);
        } else if (*bif_cmd) {
            emit(cmd_bifurcate(bif), format, bif_out);
        } else if (*scan_cmd) {
            emit(cmd_scan(scan), format, "");
        } else if (*profile_cmd) {
            emit(cmd_profile(profile), format, "");
        } else if (*plot_cmd) {
            emit(cmd_plot(plot), format, "");
        }
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
