#include "commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>

#include "nodoid/errors.hpp"
#include "nodoid/export.hpp"
#include "nodoid/geometry.hpp"
#include "nodoid/ritz.hpp"
#include "nodoid/shooting.hpp"
#include "nodoid/table1.hpp"
#include "svg.hpp"

namespace nodoid::cli {

namespace {

using bifurcation::Method;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_nodoid_mass(double m) {
    if (!std::isfinite(m) || m >= 0.0) {
        throw DomainError("nodoids require --mass < 0, got " + format15(m));
    }
}

void require_ritz_n(int n) {
    if (n < 1) throw DomainError("--ritz-n must be at least 1");
}

std::ofstream open_output(const std::string& path) {
    if (path.empty()) throw DomainError("--out PATH is required");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    return os;
}

void finish_output(std::ofstream& os, const std::string& path) {
    os.flush();
    if (!os) throw IoError("failed writing '" + path + "'");
}

Json geometry_json(const NodoidParams& p) {
    Json g;
    g["A"] = number(p.A());
    g["B"] = number(p.B());
    g["c_tilde"] = number(p.c_tilde());
    g["ksq"] = number(p.ksq());
    g["kpsq"] = number(p.kpsq());
    g["period"] = number(p.period());
    g["a"] = number(p.a());
    g["b"] = number(p.b());
    g["neck"] = number(p.neck());
    g["bulge"] = number(p.bulge());
    return g;
}

}  // namespace

CommandOutput cmd_eigen(const EigenArgs& args) {
    require_nodoid_mass(args.mass);
    require_ritz_n(args.ritz_n);
    if (!(args.tol > 0.0)) throw DomainError("--tol must be positive");
    const auto start = Clock::now();
    const NodoidParams p = from_mass(args.mass);

    CommandOutput out;
    auto& rec = out.record;
    rec.command = "eigen";
    rec.inputs["mass"] = number(args.mass);
    rec.inputs["method"] = bifurcation::to_string(args.method);
    rec.inputs["ritz_n"] = args.ritz_n;
    rec.inputs["tol"] = number(args.tol);

    const double bound = bifurcation::mean_potential_bound(p);
    const auto pairs = shooting::known_eigenpair_residuals(p);
    rec.results["mass"] = number(args.mass);
    rec.results["geometry"] = geometry_json(p);
    rec.results["bounds"] = {{"lower", number(args.mass - 2.0)},
                             {"upper", number(args.mass)},
                             {"mean_potential", number(bound)}};

    auto& table = out.table;
    table.header = {"quantity", "value"};
    table.rows.push_back({std::string("period"), p.period()});
    table.rows.push_back({std::string("neck"), p.neck()});
    table.rows.push_back({std::string("bulge"), p.bulge()});
    table.rows.push_back({std::string("lower_bound"), args.mass - 2.0});
    table.rows.push_back({std::string("mean_potential_bound"), bound});

    Json lambda0;
    std::optional<double> shoot, ritz_l0;
    if (args.method != Method::ritz) {
        shooting::ShootingOptions sopts;
        sopts.tol = args.tol;
        sopts.keep_samples = false;
        const auto s = shooting::first_eigenvalue(p, sopts);
        shoot = s.lambda;
        lambda0["shoot"] = number(s.lambda);
        rec.diagnostics["shooting"] = {{"residual", number(s.residual)},
                                       {"iterations", s.iterations},
                                       {"steps", s.steps},
                                       {"multiple_roots", s.multiple_roots}};
        table.rows.push_back({std::string("lambda0_shoot"), s.lambda});
    }
    if (args.method != Method::shoot) {
        const auto spectrum = ritz::spectrum_estimate(p, args.ritz_n);
        ritz_l0 = spectrum.eigenvalues.front();
        lambda0["ritz"] = number(*ritz_l0);
        Json ev = Json::array();
        for (double v : spectrum.eigenvalues) ev.push_back(number(v));
        rec.results["ritz_spectrum"] = ev;
        rec.diagnostics["ritz"] = {{"n", spectrum.n}, {"quad_tol", number(spectrum.quad_tol)}};
        table.rows.push_back({std::string("lambda0_ritz"), *ritz_l0});
        for (std::size_t i = 1; i < spectrum.eigenvalues.size() && i < 7; ++i) {
            table.rows.push_back({"lambda" + std::to_string(i) + "_ritz", spectrum.eigenvalues[i]});
        }
    }
    if (shoot && ritz_l0) {
        lambda0["discrepancy"] = number(std::abs(*ritz_l0 - *shoot));
        table.rows.push_back({std::string("discrepancy"), std::abs(*ritz_l0 - *shoot)});
    }
    const double best = shoot ? *shoot : *ritz_l0;
    lambda0["m_minus_1"] = number(args.mass - 1.0);
    lambda0["residual_primary"] = number(std::abs(best - (args.mass - 1.0)));
    rec.results["lambda0"] = lambda0;
    rec.results["first_eigenvalue_L2"] = number(best + 4.0);
    rec.results["known_pair_residuals"] = {{"zero", number(pairs.zero)},
                                           {"minus_one", number(pairs.minus_one)}};
    table.rows.push_back({std::string("known_pair_zero"), pairs.zero});
    table.rows.push_back({std::string("known_pair_minus_one"), pairs.minus_one});
    if (args.timings) rec.diagnostics["seconds"] = seconds_since(start);
    return out;
}

CommandOutput cmd_table1(const Table1Args& args) {
    if (args.ritz_n < 7) throw DomainError("--ritz-n must be at least 7 for the table");
    const auto start = Clock::now();
    CommandOutput out;
    auto& rec = out.record;
    rec.command = "table1";
    rec.inputs["ritz_n"] = args.ritz_n;
    out.table.header = {"m", "column", "computed", "published", "deviation", "note"};

    Json rows = Json::array();
    double worst_lambda0 = 0.0;
    for (const auto& pub : table1::kPublished) {
        Json row;
        row["m"] = number(pub.m);
        try {
            const auto c = table1::compute_row(pub.m, args.ritz_n);
            struct Cell {
                const char* column;
                double computed;
                double published;
                bool relative;
            };
            const Cell cells[] = {
                {"b_over_3", c.b_over_3, pub.b_over_3, false},
                {"lower_bound", c.lower, pub.lower, false},
                {"upper_bound", c.upper, pub.upper, false},
                {"first_method_lambda0", c.first_method, pub.first_method, false},
                {"second_method_lambda0", c.ritz[0], pub.lambda0, false},
                {"second_method_lambda1", c.ritz[1], pub.lambda1, false},
                {"second_method_lambda2", c.ritz[2], pub.lambda2, false},
                {"second_method_lambda34", c.lambda34_mean(), pub.lambda34, true},
                {"second_method_lambda56", c.lambda56_mean(), pub.lambda56, true},
            };
            Json cols = Json::object();
            for (const auto& cell : cells) {
                double dev = cell.computed - cell.published;
                if (cell.relative) dev /= std::abs(cell.published);
                std::string note = cell.relative ? "relative, pair mean" : "absolute";
                const bool misprint = std::string(cell.column) == "first_method_lambda0" &&
                                      table1::suspected_misprint(pub);
                if (misprint) note = "suspected misprint; lambda0 = m - 1 gives " + format15(pub.m - 1.0);
                cols[cell.column] = {{"computed", number(cell.computed)},
                                     {"published", number(cell.published)},
                                     {"deviation", number(dev)},
                                     {"relative", cell.relative},
                                     {"suspected_misprint", misprint}};
                out.table.rows.push_back({pub.m, std::string(cell.column), cell.computed,
                                          cell.published, dev, note});
            }
            cols["second_method_pairs"] = {{"lambda3", number(c.ritz[3])}, {"lambda4", number(c.ritz[4])},
                                           {"lambda5", number(c.ritz[5])}, {"lambda6", number(c.ritz[6])}};
            cols["period"] = number(c.period);
            row["columns"] = cols;
            worst_lambda0 = std::max(worst_lambda0, std::abs(c.ritz[0] - pub.lambda0));
        } catch (const std::exception& e) {
            row["error"] = e.what();
            out.table.rows.push_back({pub.m, std::string("error"), std::nan(""), std::nan(""),
                                      std::nan(""), std::string(e.what())});
        }
        rows.push_back(row);
    }
    rec.results["rows"] = rows;
    rec.results["max_abs_deviation_second_method_lambda0"] = number(worst_lambda0);
    if (args.timings) rec.diagnostics["seconds"] = seconds_since(start);
    return out;
}

CommandOutput cmd_bifurcate(const BifurcateArgs& args) {
    if (!(args.tol > 0.0)) throw DomainError("--tol must be positive");
    require_ritz_n(args.ritz_n);
    const auto start = Clock::now();
    bifurcation::Lambda0Options opts;
    opts.ritz_n = args.ritz_n;
    const auto res = bifurcation::bifurcation_point(args.method, args.tol, opts);
    const double prelim = bifurcation::preliminary_crossing(std::min(args.tol, 1e-8));

    CommandOutput out;
    auto& rec = out.record;
    rec.command = "bifurcate";
    rec.inputs["method"] = bifurcation::to_string(args.method);
    rec.inputs["tol"] = number(args.tol);
    rec.inputs["ritz_n"] = args.ritz_n;
    rec.results["m_star"] = number(res.m_star);
    rec.results["neck_radius"] = number(res.neck_r);
    rec.results["mass_from_neck_half"] = number(mass_from_neck(0.5));
    rec.results["preliminary_crossing"] = number(prelim);
    if (res.m_star_ritz) {
        rec.results["m_star_ritz"] = number(*res.m_star_ritz);
        rec.results["method_agreement"] = number(std::abs(*res.m_star_ritz - res.m_star));
    }
    rec.diagnostics["lambda0_plus_4_at_root"] = number(res.residual);
    rec.diagnostics["iterations"] = res.iterations;
    rec.diagnostics["bracket"] = {number(res.bracket_lo), number(res.bracket_hi)};
    rec.diagnostics["bracket_widened"] = res.widened;
    if (args.timings) rec.diagnostics["seconds"] = seconds_since(start);

    out.table.header = {"quantity", "value"};
    out.table.rows.push_back({std::string("m_star"), res.m_star});
    out.table.rows.push_back({std::string("neck_radius"), res.neck_r});
    if (res.m_star_ritz) out.table.rows.push_back({std::string("m_star_ritz"), *res.m_star_ritz});
    out.table.rows.push_back({std::string("preliminary_crossing"), prelim});
    out.table.rows.push_back({std::string("mass_from_neck_half"), mass_from_neck(0.5)});
    return out;
}

CommandOutput cmd_scan(const ScanArgs& args) {
    if (!(args.mass_max < 0.0)) throw DomainError("--mass-max must be negative");
    if (!(args.mass_min < args.mass_max)) throw DomainError("--mass-min must be below --mass-max");
    if (args.steps < 2) throw DomainError("--steps must be at least 2");
    require_ritz_n(args.ritz_n);
    const auto start = Clock::now();

    bifurcation::ScanOptions opts;
    opts.method = args.method;
    opts.lambda.ritz_n = args.ritz_n;
    const auto masses = bifurcation::mass_grid(args.mass_min, args.mass_max, args.steps);
    // Open before computing so an unwritable path fails fast.
    std::ofstream csv = open_output(args.out_path);
    const auto rows = bifurcation::scan(masses, opts);

    CommandOutput out;
    auto& table = out.table;
    table.header = {"m", "lower", "upper", "mean_potential_bound", "lambda0_shoot",
                    "lambda0_ritz", "residual_primary", "known_pair_zero",
                    "known_pair_minus_one", "sandwich_ok", "error"};
    constexpr double kSlack = 1e-8;
    double max_residual = 0.0;
    bool all_sandwich = true;
    int failed = 0;
    for (const auto& r : rows) {
        const double l0 = std::isnan(r.lambda0_shoot) ? r.lambda0_ritz : r.lambda0_shoot;
        const bool sandwich = r.ok() && r.lower <= l0 + kSlack &&
                              l0 <= r.mean_potential_bound + kSlack &&
                              r.mean_potential_bound <= r.upper + kSlack;
        if (r.ok()) {
            max_residual = std::max(max_residual, r.residual_primary);
        } else {
            ++failed;
        }
        all_sandwich = all_sandwich && sandwich;
        table.rows.push_back({r.m, r.lower, r.upper, r.mean_potential_bound, r.lambda0_shoot,
                              r.lambda0_ritz, r.residual_primary, r.known_pair_residuals.zero,
                              r.known_pair_residuals.minus_one, sandwich, r.error});
    }
    write_csv(csv, table);
    finish_output(csv, args.out_path);

    auto& rec = out.record;
    rec.command = "scan";
    rec.inputs["mass_min"] = number(args.mass_min);
    rec.inputs["mass_max"] = number(args.mass_max);
    rec.inputs["steps"] = args.steps;
    rec.inputs["method"] = bifurcation::to_string(args.method);
    rec.inputs["ritz_n"] = args.ritz_n;
    rec.inputs["out"] = args.out_path;
    rec.results["rows"] = static_cast<long long>(rows.size());
    rec.results["failed_rows"] = failed;
    rec.results["max_residual_primary"] = number(max_residual);
    rec.results["sandwich_holds"] = all_sandwich;
    rec.results["csv"] = args.out_path;
    if (args.timings) rec.diagnostics["seconds"] = seconds_since(start);
    return out;
}

CommandOutput cmd_profile(const ProfileArgs& args) {
    require_nodoid_mass(args.mass);
    if (args.samples < 16) throw DomainError("--samples must be at least 16");
    if (args.kind != "csv" && args.kind != "obj") throw DomainError("--kind must be csv or obj");
    if (args.kind == "obj" && args.theta_samples < 3) {
        throw DomainError("--theta-samples must be at least 3");
    }
    const NodoidParams p = from_mass(args.mass);
    std::ofstream os = open_output(args.out_path);
    const auto rows = sample_profile(p, args.samples);
    if (args.kind == "csv") {
        write_profile_csv(os, rows);
    } else {
        write_mesh_obj(os, p, args.samples, args.theta_samples);
    }
    finish_output(os, args.out_path);

    double zmin = rows.front().z, zmax = rows.front().z;
    for (const auto& r : rows) {
        zmin = std::min(zmin, r.z);
        zmax = std::max(zmax, r.z);
    }
    CommandOutput out;
    auto& rec = out.record;
    rec.command = "profile";
    rec.inputs["mass"] = number(args.mass);
    rec.inputs["samples"] = args.samples;
    rec.inputs["theta_samples"] = args.theta_samples;
    rec.inputs["kind"] = args.kind;
    rec.inputs["out"] = args.out_path;
    rec.results["path"] = args.out_path;
    rec.results["z_min"] = number(zmin);
    rec.results["z_max"] = number(zmax);
    rec.results["x_period_shift"] = number(rows.back().x);
    if (args.kind == "obj") {
        rec.results["vertices"] = static_cast<long long>(args.samples) * args.theta_samples;
        rec.results["faces"] = 2LL * (args.samples - 1) * args.theta_samples;
    } else {
        rec.results["rows"] = static_cast<long long>(rows.size());
    }
    out.table.header = {"quantity", "value"};
    out.table.rows.push_back({std::string("z_min"), zmin});
    out.table.rows.push_back({std::string("z_max"), zmax});
    return out;
}

CommandOutput cmd_plot(const PlotArgs& args) {
    if (args.samples < 16) throw DomainError("--samples must be at least 16");
    if (args.what != "eigenfunction" && args.what != "potential" && args.what != "bounds") {
        throw DomainError("--what must be eigenfunction, potential or bounds");
    }
    CommandOutput out;
    auto& rec = out.record;
    rec.command = "plot";
    rec.inputs["what"] = args.what;
    rec.inputs["samples"] = args.samples;
    rec.inputs["out"] = args.out_path;
    out.table.header = {"quantity", "value"};

    std::optional<SvgPlot> plot;
    if (args.what == "eigenfunction") {
        require_nodoid_mass(args.mass);
        const NodoidParams p = from_mass(args.mass);
        double lambda = 0.0;
        if (args.lambda) {
            lambda = *args.lambda;
        } else {
            shooting::ShootingOptions sopts;
            sopts.keep_samples = false;
            lambda = shooting::first_eigenvalue(p, sopts).lambda;
        }
        const double mid = 0.5 * (p.a() + p.b());
        // Drawn over [a, (a+b)/2]: integrate on [0, (a+b)/2], mirror to [a, 0].
        const auto quarter = shooting::integrate_eigen_ode(p, lambda, mid, 1.0, 0.0, 4096);
        Series u{"u(t)", "#1f4e9c", {}, false};
        const int stride = std::max(1, static_cast<int>(quarter.size()) / (args.samples / 2));
        for (int i = static_cast<int>(quarter.size()) - 1; i > 0; i -= stride) {
            u.points.emplace_back(-quarter[static_cast<std::size_t>(i)].t,
                                  quarter[static_cast<std::size_t>(i)].u);
        }
        for (std::size_t i = 0; i < quarter.size(); i += static_cast<std::size_t>(stride)) {
            u.points.emplace_back(quarter[i].t, quarter[i].u);
        }
        u.points.emplace_back(quarter.back().t, quarter.back().u);
        u.points.front().first = p.a();
        plot.emplace(fmt::format("u for m = {:g}, lambda = m {:+.4g}", args.mass, lambda - args.mass),
                     "t", "u");
        plot->add(std::move(u));
        rec.inputs["mass"] = number(args.mass);
        rec.inputs["lambda"] = args.lambda ? number(*args.lambda) : Json(nullptr);
        rec.results["lambda"] = number(lambda);
        // Evenness about 0 gives u'(a) = -u'((a+b)/2).
        rec.results["du_at_a"] = number(-quarter.back().du);
        rec.results["du_at_mid"] = number(quarter.back().du);
        out.table.rows.push_back({std::string("lambda"), lambda});
        out.table.rows.push_back({std::string("du_at_mid"), quarter.back().du});
    } else if (args.what == "potential") {
        require_nodoid_mass(args.mass);
        const NodoidParams p = from_mass(args.mass);
        Series v{"V(t)", "#1f4e9c", {}, false};
        Series lo{"-m", "#888888", {}, true};
        Series hi{"2 - m", "#888888", {}, true};
        double vmin = 1e300, vmax = -1e300;
        for (int i = 0; i < args.samples; ++i) {
            const double t = p.a() + p.period() * i / (args.samples - 1);
            const double val = potential(p, t);
            vmin = std::min(vmin, val);
            vmax = std::max(vmax, val);
            v.points.emplace_back(t, val);
        }
        lo.points = {{p.a(), -args.mass}, {p.b(), -args.mass}};
        hi.points = {{p.a(), 2.0 - args.mass}, {p.b(), 2.0 - args.mass}};
        plot.emplace(fmt::format("V over one period, m = {:g}", args.mass), "t", "V");
        plot->add(std::move(v));
        plot->add(std::move(lo));
        plot->add(std::move(hi));
        rec.inputs["mass"] = number(args.mass);
        rec.results["v_min"] = number(vmin);
        rec.results["v_max"] = number(vmax);
        out.table.rows.push_back({std::string("v_min"), vmin});
        out.table.rows.push_back({std::string("v_max"), vmax});
    } else {
        const auto masses = bifurcation::mass_grid(-4.0, -0.1, std::max(16, args.samples / 10));
        Series f1{"f1 = m", "#888888", {}, true};
        Series f3{"f3 = m - 2", "#888888", {}, true};
        Series f2{"f2 = mean bound", "#c0392b", {}, false};
        Series l0{"lambda0 (shooting)", "#1f4e9c", {}, false};
        bool inside = true;
        shooting::ShootingOptions sopts;
        sopts.keep_samples = false;
        for (double m : masses) {
            const NodoidParams p = from_mass(m);
            const double bound = bifurcation::mean_potential_bound(p);
            const double lam = shooting::first_eigenvalue(p, sopts).lambda;
            inside = inside && (m - 2.0 <= lam + 1e-8) && (lam <= bound + 1e-8);
            f1.points.emplace_back(m, m);
            f3.points.emplace_back(m, m - 2.0);
            f2.points.emplace_back(m, bound);
            l0.points.emplace_back(m, lam);
        }
        plot.emplace("Bounds on the first eigenvalue", "m", "lambda");
        plot->add(std::move(f1));
        plot->add(std::move(f2));
        plot->add(std::move(f3));
        plot->add(std::move(l0));
        rec.results["masses"] = static_cast<long long>(masses.size());
        rec.results["lambda0_between_f2_f3"] = inside;
        out.table.rows.push_back({std::string("lambda0_between_f2_f3"), inside});
    }
    std::ofstream os = open_output(args.out_path);
    plot->write(os);
    finish_output(os, args.out_path);
    rec.results["path"] = args.out_path;
    return out;
}

}  // namespace nodoid::cli
