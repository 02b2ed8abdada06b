#include "nodoid/bifurcation.hpp"

#include <cmath>
#include <exception>
#include <functional>

#include "nodoid/errors.hpp"
#include "nodoid/parallel.hpp"
#include "nodoid/quadrature.hpp"
#include "nodoid/ritz.hpp"

namespace nodoid::bifurcation {

namespace {

struct Root {
    double x;
    int iterations;
};

// Plain bisection; f(lo) and f(hi) must differ in sign.
Root bisect(const std::function<double(double)>& f, double lo, double hi, double f_lo,
            double tol) {
    int iterations = 0;
    while (hi - lo >= tol && iterations < 200) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return {mid, iterations + 1};
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        ++iterations;
    }
    return {0.5 * (lo + hi), iterations};
}

bool opposite(double x, double y) { return (x < 0.0) != (y < 0.0) || x == 0.0 || y == 0.0; }

}  // namespace

const char* to_string(Method method) {
    switch (method) {
        case Method::shoot: return "shoot";
        case Method::ritz: return "ritz";
        case Method::both: return "both";
    }
    return "unknown";
}

Method parse_method(const std::string& name) {
    if (name == "shoot") return Method::shoot;
    if (name == "ritz") return Method::ritz;
    if (name == "both") return Method::both;
    throw DomainError("unknown method '" + name + "' (expected shoot, ritz or both)");
}

double mean_potential_bound(const NodoidParams& p, double quad_tol) {
    quadrature::SimpsonOptions opts;
    opts.abs_tol = quad_tol;
    const double integral =
        quadrature::adaptive_simpson([&p](double t) { return potential(p, t); }, p.a(), p.b(), opts);
    return -integral / p.period();
}

double preliminary_crossing(double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    auto f = [](double m) { return mean_potential_bound(from_mass(m)) + 4.0; };
    const double lo = -4.0, hi = -2.0;
    const double f_lo = f(lo), f_hi = f(hi);
    if (!opposite(f_lo, f_hi)) {
        throw BracketError("mean potential bound does not cross -4 on [-4, -2]", f_lo, f_hi);
    }
    return bisect(f, lo, hi, f_lo, tol).x;
}

std::optional<double> Lambda0Estimate::discrepancy() const {
    if (shoot && ritz) return std::abs(*ritz - *shoot);
    return std::nullopt;
}

Lambda0Estimate lambda0(double m, Method method, const Lambda0Options& opts) {
    const NodoidParams p = from_mass(m);
    Lambda0Estimate est;
    if (method == Method::shoot || method == Method::both) {
        auto sopts = opts.shooting;
        sopts.keep_samples = false;
        est.shoot = shooting::first_eigenvalue(p, sopts).lambda;
    }
    if (method == Method::ritz || method == Method::both) {
        est.ritz = ritz::spectrum_estimate(p, opts.ritz_n, opts.quad_tol).eigenvalues.front();
    }
    return est;
}

double shifted_first_eigenvalue(double m, int j, Method method, const Lambda0Options& opts) {
    if (j < 0) throw DomainError("mode index j must be non-negative");
    return lambda0(m, method, opts).value() + static_cast<double>(j) * j;
}

BifurcationResult bifurcation_point(Method method, double tol, const Lambda0Options& opts) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (method == Method::both) {
        BifurcationResult shoot = bifurcation_point(Method::shoot, tol, opts);
        const BifurcationResult by_ritz = bifurcation_point(Method::ritz, tol, opts);
        shoot.method = Method::both;
        shoot.m_star_ritz = by_ritz.m_star;
        return shoot;
    }
    auto f = [&](double m) { return lambda0(m, method, opts).value() + 4.0; };

    BifurcationResult out;
    out.method = method;
    double lo = -3.1, hi = -2.9;
    double f_lo = f(lo), f_hi = f(hi);
    if (!opposite(f_lo, f_hi)) {
        lo = -3.05;
        hi = -2.0;
        f_lo = f(lo);
        f_hi = f(hi);
        out.widened = true;
        if (!opposite(f_lo, f_hi)) {
            throw BracketError("lambda_0(m) + 4 has no sign change on [-3.05, -2]", f_lo, f_hi);
        }
    }
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    const Root root = bisect(f, lo, hi, f_lo, tol);
    out.m_star = root.x;
    out.iterations = root.iterations;
    out.neck_r = from_mass(root.x).neck();
    out.residual = f(root.x);
    return out;
}

ScanRow scan_row(double m, const ScanOptions& opts) {
    ScanRow row;
    row.m = m;
    row.lower = m - 2.0;
    row.upper = m;
    try {
        const NodoidParams p = from_mass(m);
        row.mean_potential_bound = mean_potential_bound(p, opts.lambda.quad_tol);
        const bool run_shoot = opts.method != Method::ritz;
        const bool run_ritz = opts.method != Method::shoot;
        row.lambda0_shoot = std::nan("");
        row.lambda0_ritz = std::nan("");
        if (run_shoot) {
            auto sopts = opts.lambda.shooting;
            sopts.keep_samples = false;
            row.lambda0_shoot = shooting::first_eigenvalue(p, sopts).lambda;
        }
        if (run_ritz) {
            row.lambda0_ritz =
                ritz::spectrum_estimate(p, opts.lambda.ritz_n, opts.lambda.quad_tol).eigenvalues.front();
        }
        row.residual_primary = std::abs((run_shoot ? row.lambda0_shoot : row.lambda0_ritz) - (m - 1.0));
        if (opts.with_known_pairs) {
            row.known_pair_residuals = shooting::known_eigenpair_residuals(p, opts.known_pair_grid);
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

std::vector<ScanRow> scan_serial(const std::vector<double>& masses, const ScanOptions& opts) {
    std::vector<ScanRow> rows;
    rows.reserve(masses.size());
    for (double m : masses) rows.push_back(scan_row(m, opts));
    return rows;
}

std::vector<ScanRow> scan(const std::vector<double>& masses, const ScanOptions& opts) {
    std::vector<ScanRow> rows(masses.size());
    const int count = static_cast<int>(masses.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
    for (int i = 0; i < count; ++i) {
        rows[static_cast<std::size_t>(i)] = scan_row(masses[static_cast<std::size_t>(i)], opts);
    }
    return rows;
}

std::vector<double> mass_grid(double lo, double hi, int steps) {
    if (steps < 2) throw DomainError("mass grid needs at least 2 steps");
    if (!(lo < hi)) throw DomainError("mass grid needs lo < hi");
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        out[static_cast<std::size_t>(i)] = (i + 1 == steps) ? hi : lo + (hi - lo) * i / (steps - 1);
    }
    return out;
}

}  // namespace nodoid::bifurcation
