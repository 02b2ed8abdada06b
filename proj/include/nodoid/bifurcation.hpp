#pragma once

// Bounds on the first eigenvalue lambda_0 of L0, the lambda_0(m) = m - 1 scan,
// and root-finding for the first bifurcation point, where the first eigenvalue
// of L2 = L0 + 4 vanishes (lambda_0 = -4). All roots are found by bisection
// on explicit brackets.

#include <optional>
#include <string>
#include <vector>

#include "nodoid/geometry.hpp"
#include "nodoid/shooting.hpp"

namespace nodoid::bifurcation {

enum class Method { shoot, ritz, both };

[[nodiscard]] const char* to_string(Method method);
/// Accepts "shoot", "ritz", "both"; throws DomainError otherwise.
[[nodiscard]] Method parse_method(const std::string& name);

/// Rayleigh quotient of u = 1: -(1/(b-a)) * integral of V over [a, b].
[[nodiscard]] double mean_potential_bound(const NodoidParams& p, double quad_tol = 1e-10);

/// Root of mean_potential_bound(m) = -4 on [-4, -2].
[[nodiscard]] double preliminary_crossing(double tol = 1e-8);

struct Lambda0Options {
    shooting::ShootingOptions shooting{};
    int ritz_n = 13;
    double quad_tol = 1e-10;
};

struct Lambda0Estimate {
    std::optional<double> shoot;
    std::optional<double> ritz;

    /// Shooting value when present (no truncation bias), else the Ritz value.
    double value() const { return shoot ? *shoot : *ritz; }
    /// |ritz - shoot| when both were computed.
    std::optional<double> discrepancy() const;
};

[[nodiscard]] Lambda0Estimate lambda0(double m, Method method, const Lambda0Options& opts = {});

/// First eigenvalue of L_j = L0 + j^2.
[[nodiscard]] double shifted_first_eigenvalue(double m, int j, Method method = Method::shoot,
                                              const Lambda0Options& opts = {});

struct BifurcationResult {
    Method method = Method::shoot;
    double m_star = 0.0;
    double neck_r = 0.0;
    /// lambda_0(m_star) + 4.
    double residual = 0.0;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    /// The default bracket failed and the fallback [-3.05, -2] was used.
    bool widened = false;
    /// With Method::both: the Ritz root alongside the shooting root in m_star.
    std::optional<double> m_star_ritz;
};

[[nodiscard]] BifurcationResult bifurcation_point(Method method, double tol = 1e-6,
                                                  const Lambda0Options& opts = {});

struct ScanRow {
    double m = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double mean_potential_bound = 0.0;
    /// NaN when the method was not run.
    double lambda0_shoot = 0.0;
    double lambda0_ritz = 0.0;
    double residual_primary = 0.0;
    shooting::KnownPairResiduals known_pair_residuals{0.0, 0.0};
    /// Non-empty when the row failed; numeric fields are then unreliable.
    std::string error;

    bool ok() const noexcept { return error.empty(); }
};

struct ScanOptions {
    Lambda0Options lambda{};
    /// shoot: no Ritz column; ritz: no shooting column (residual taken from Ritz).
    Method method = Method::both;
    bool with_known_pairs = true;
    int known_pair_grid = 10000;
};

/// One row for a single mass; errors are recorded in the row, not thrown.
[[nodiscard]] ScanRow scan_row(double m, const ScanOptions& opts = {});

/// Serial reference scan, rows in input order.
[[nodiscard]] std::vector<ScanRow> scan_serial(const std::vector<double>& masses,
                                               const ScanOptions& opts = {});

/// OpenMP scan over masses; identical output to scan_serial.
[[nodiscard]] std::vector<ScanRow> scan(const std::vector<double>& masses,
                                        const ScanOptions& opts = {});

/// `steps` equally spaced masses from lo to hi inclusive.
[[nodiscard]] std::vector<double> mass_grid(double lo, double hi, int steps);

}  // namespace nodoid::bifurcation
