#include "nodoid/shooting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "nodoid/errors.hpp"

namespace nodoid::shooting {

namespace {

void check_steps(int steps) {
    if (steps < kMinSteps) {
        throw DomainError("RK4 needs at least " + std::to_string(kMinSteps) + " steps, got " +
                          std::to_string(steps));
    }
}

struct State {
    double u;
    double du;
};

// One RK4 step for (u, u')' = (u', -(V + lambda) u) with V at t, t + h/2, t + h.
inline State rk4_step(State s, double h, double lambda, double v0, double vh, double v1) {
    const double w0 = v0 + lambda, wh = vh + lambda, w1 = v1 + lambda;
    const double k1u = s.du;
    const double k1v = -w0 * s.u;
    const double k2u = s.du + 0.5 * h * k1v;
    const double k2v = -wh * (s.u + 0.5 * h * k1u);
    const double k3u = s.du + 0.5 * h * k2v;
    const double k3v = -wh * (s.u + 0.5 * h * k2u);
    const double k4u = s.du + h * k3v;
    const double k4v = -w1 * (s.u + h * k3u);
    return {s.u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
            s.du + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

double quarter_residual(const PotentialGrid& grid, double lambda) {
    return integrate_final(grid, lambda, 1.0, 0.0).du;
}

struct BisectionOutcome {
    double lambda;
    int iterations;
    bool multiple_roots;
};

BisectionOutcome bisect_lambda(const NodoidParams& p, const PotentialGrid& grid,
                               const ShootingOptions& opts) {
    const double lo = p.m() - 2.0;
    const double hi = p.m();
    const int probes = std::max(2, opts.bracket_probes);

    // Scan downward from m so that the first sign change found is the one closest to m.
    double right = hi;
    double f_right = quarter_residual(grid, right);
    const double f_hi = f_right;
    double bracket_lo = 0.0, bracket_hi = 0.0, f_bracket_hi = 0.0;
    int sign_changes = 0;
    for (int i = probes - 1; i >= 0; --i) {
        const double left = lo + (hi - lo) * i / probes;
        const double f_left = quarter_residual(grid, left);
        if ((f_left <= 0.0) != (f_right <= 0.0) || f_left == 0.0) {
            if (sign_changes == 0) {
                bracket_lo = left;
                bracket_hi = right;
                f_bracket_hi = f_right;
            }
            ++sign_changes;
        }
        right = left;
        f_right = f_left;
    }
    if (sign_changes == 0) {
        throw BracketError("shooting: closing residual has no sign change on [m-2, m] for m = " +
                               std::to_string(p.m()),
                           f_right, f_hi);
    }

    int iterations = 0;
    while (bracket_hi - bracket_lo >= opts.tol && iterations < 200) {
        const double mid = 0.5 * (bracket_lo + bracket_hi);
        const double f_mid = quarter_residual(grid, mid);
        if (f_mid == 0.0) {
            bracket_lo = bracket_hi = mid;
            break;
        }
        if ((f_mid <= 0.0) == (f_bracket_hi <= 0.0)) {
            bracket_hi = mid;
            f_bracket_hi = f_mid;
        } else {
            bracket_lo = mid;
        }
        ++iterations;
    }
    return {0.5 * (bracket_lo + bracket_hi), iterations, sign_changes > 1};
}

}  // namespace

PotentialGrid::PotentialGrid(const std::function<double(double)>& potential, double t_end,
                             int steps)
    : steps_(steps), t_end_(t_end) {
    check_steps(steps);
    if (!(t_end > 0.0)) throw DomainError("integration end point must be positive");
    const int nodes = 2 * steps + 1;
    values_.resize(static_cast<std::size_t>(nodes));
    const double half = 0.5 * t_end / steps;
    for (int k = 0; k < nodes; ++k) values_[static_cast<std::size_t>(k)] = potential(k * half);
}

PotentialGrid::PotentialGrid(const NodoidParams& p, double t_end, int steps)
    : PotentialGrid([&p](double t) { return potential(p, t); }, t_end, steps) {}

std::vector<OdeSample> integrate(const PotentialGrid& grid, double lambda, double u0, double du0) {
    const int n = grid.steps();
    const double h = grid.step();
    std::vector<OdeSample> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    State s{u0, du0};
    out.push_back({0.0, s.u, s.du});
    for (int i = 0; i < n; ++i) {
        s = rk4_step(s, h, lambda, grid.at(2 * i), grid.at(2 * i + 1), grid.at(2 * i + 2));
        const double t = (i + 1 == n) ? grid.t_end() : (i + 1) * h;
        out.push_back({t, s.u, s.du});
    }
    return out;
}

OdeSample integrate_final(const PotentialGrid& grid, double lambda, double u0, double du0) {
    const int n = grid.steps();
    const double h = grid.step();
    State s{u0, du0};
    for (int i = 0; i < n; ++i) {
        s = rk4_step(s, h, lambda, grid.at(2 * i), grid.at(2 * i + 1), grid.at(2 * i + 2));
    }
    return {grid.t_end(), s.u, s.du};
}

std::vector<OdeSample> integrate_eigen_ode(const NodoidParams& p, double lambda, double t_end,
                                           double u0, double du0, int steps) {
    return integrate(PotentialGrid(p, t_end, steps), lambda, u0, du0);
}

double closing_residual(const NodoidParams& p, double lambda, int steps) {
    const double mid = 0.5 * (p.a() + p.b());
    return quarter_residual(PotentialGrid(p, mid, steps), lambda);
}

std::vector<OdeSample> reflect_to_period(const NodoidParams& p,
                                         const std::vector<OdeSample>& quarter) {
    const double mid = 0.5 * (p.a() + p.b());
    // [0, mid] -> [-mid, mid] by evenness about 0 (note -mid = a).
    std::vector<OdeSample> half;
    half.reserve(2 * quarter.size());
    for (auto it = quarter.rbegin(); it != quarter.rend(); ++it) {
        if (it->t == 0.0) continue;
        half.push_back({-it->t, it->u, -it->du});
    }
    half.insert(half.end(), quarter.begin(), quarter.end());
    // [a, mid] -> [mid, b] by evenness about mid.
    std::vector<OdeSample> full = half;
    full.reserve(2 * half.size());
    for (auto it = half.rbegin() + 1; it != half.rend(); ++it) {
        full.push_back({2.0 * mid - it->t, it->u, -it->du});
    }
    full.front().t = p.a();
    full.back().t = p.b();
    return full;
}

ShootingResult first_eigenvalue(const NodoidParams& p, const ShootingOptions& opts) {
    if (!(opts.tol > 0.0)) throw DomainError("shooting tolerance must be positive");
    check_steps(opts.steps);
    const double mid = 0.5 * (p.a() + p.b());

    int steps = opts.steps;
    PotentialGrid grid(p, mid, steps);
    BisectionOutcome current = bisect_lambda(p, grid, opts);
    for (int d = 0; d < opts.max_doublings; ++d) {
        PotentialGrid finer(p, mid, 2 * steps);
        const BisectionOutcome next = bisect_lambda(p, finer, opts);
        const bool agreed = std::abs(next.lambda - current.lambda) < 0.1 * opts.tol;
        steps *= 2;
        grid = std::move(finer);
        current = next;
        if (agreed) break;
    }

    ShootingResult result;
    result.lambda = current.lambda;
    result.iterations = current.iterations;
    result.steps = steps;
    result.multiple_roots = current.multiple_roots;
    result.residual = std::abs(quarter_residual(grid, current.lambda));
    if (!(result.residual < opts.residual_tol)) {
        throw NumericalError("shooting: closing residual " + std::to_string(result.residual) +
                             " above tolerance at m = " + std::to_string(p.m()));
    }
    if (opts.keep_samples) {
        result.samples = reflect_to_period(p, integrate(grid, current.lambda, 1.0, 0.0));
    }
    return result;
}

KnownPairResiduals known_eigenpair_residuals(const NodoidParams& p, int grid_points) {
    if (grid_points < 2) throw DomainError("need at least 2 grid points");
    const double m = p.m();
    const double h = 2e-3;
    static constexpr std::array<double, 7> kStencil = {2.0, -27.0, 270.0, -490.0,
                                                       270.0, -27.0, 2.0};
    KnownPairResiduals res{0.0, 0.0};
    for (int i = 0; i < grid_points; ++i) {
        const double t = p.a() + p.period() * i / (grid_points - 1);
        double d2_zero = 0.0, d2_minus = 0.0;
        double u_zero = 0.0, u_minus = 0.0;
        for (int s = -3; s <= 3; ++s) {
            const auto hs = height_sample(p, t + s * h);
            const double uz = -hs.dz / hs.z;
            const double um = hs.z + m / (4.0 * hs.z);
            const double w = kStencil[static_cast<std::size_t>(s + 3)];
            d2_zero += w * uz;
            d2_minus += w * um;
            if (s == 0) {
                u_zero = uz;
                u_minus = um;
            }
        }
        d2_zero /= 180.0 * h * h;
        d2_minus /= 180.0 * h * h;
        const double v = potential(p, t);
        res.zero = std::max(res.zero, std::abs(-d2_zero - v * u_zero));
        res.minus_one = std::max(res.minus_one, std::abs(-d2_minus - v * u_minus + u_minus));
    }
    return res;
}

}  // namespace nodoid::shooting
