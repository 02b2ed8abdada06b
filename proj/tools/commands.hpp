#pragma once

#include <optional>
#include <string>

#include "nodoid/bifurcation.hpp"
#include "output.hpp"

namespace nodoid::cli {

struct CommandOutput {
    OutputRecord record;
    Table table;
};

struct EigenArgs {
    double mass = -1.0;
    bifurcation::Method method = bifurcation::Method::both;
    int ritz_n = 13;
    double tol = 1e-10;
    bool timings = false;
};

struct Table1Args {
    int ritz_n = 13;
    bool timings = false;
};

struct BifurcateArgs {
    bifurcation::Method method = bifurcation::Method::both;
    double tol = 1e-6;
    int ritz_n = 13;
    bool timings = false;
};

struct ScanArgs {
    double mass_min = -20.0;
    double mass_max = -0.25;
    int steps = 40;
    bifurcation::Method method = bifurcation::Method::both;
    int ritz_n = 13;
    std::string out_path = "scan.csv";
    bool timings = false;
};

struct ProfileArgs {
    double mass = -3.0;
    int samples = 257;
    int theta_samples = 64;
    std::string kind = "csv";
    std::string out_path;
};

struct PlotArgs {
    std::string what = "eigenfunction";
    double mass = -2.0;
    std::optional<double> lambda;
    int samples = 400;
    std::string out_path;
};

CommandOutput cmd_eigen(const EigenArgs& args);
CommandOutput cmd_table1(const Table1Args& args);
CommandOutput cmd_bifurcate(const BifurcateArgs& args);
/// Writes the scan CSV to args.out_path.
CommandOutput cmd_scan(const ScanArgs& args);
/// Writes the profile CSV or OBJ mesh to args.out_path.
CommandOutput cmd_profile(const ProfileArgs& args);
/// Writes the SVG to args.out_path.
CommandOutput cmd_plot(const PlotArgs& args);

}  // namespace nodoid::cli
