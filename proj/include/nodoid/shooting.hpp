#pragma once

// First eigenvalue of L0 = -d^2/dt^2 - V by shooting: integrate
// u'' + (V + lambda) u = 0 from the symmetry point t = 0 with u = 1, u' = 0
// and bisect on lambda until u'((a+b)/2) = 0. The reflection symmetries of V
// turn that single condition into the full periodic closing condition.

#include <functional>
#include <utility>
#include <vector>

#include "nodoid/geometry.hpp"

namespace nodoid::shooting {

struct OdeSample {
    double t;
    double u;
    double du;
};

/// Potential tabulated at the RK4 half-step nodes t_k = k h / 2 of [0, t_end].
/// The nodes do not depend on lambda, so one table serves a whole bisection.
class PotentialGrid {
public:
    PotentialGrid(const std::function<double(double)>& potential, double t_end, int steps);
    PotentialGrid(const NodoidParams& p, double t_end, int steps);

    int steps() const noexcept { return steps_; }
    double t_end() const noexcept { return t_end_; }
    double step() const noexcept { return t_end_ / steps_; }
    /// V at node k, 0 <= k <= 2 * steps.
    double at(int k) const noexcept { return values_[static_cast<std::size_t>(k)]; }

private:
    int steps_;
    double t_end_;
    std::vector<double> values_;
};

inline constexpr int kMinSteps = 64;

/// Classical RK4 trajectory of u'' = -(V + lambda) u from t = 0; returns steps + 1 samples.
[[nodiscard]] std::vector<OdeSample> integrate(const PotentialGrid& grid, double lambda,
                                               double u0, double du0);

/// Final state only, without storing the trajectory.
[[nodiscard]] OdeSample integrate_final(const PotentialGrid& grid, double lambda, double u0,
                                        double du0);

[[nodiscard]] std::vector<OdeSample> integrate_eigen_ode(const NodoidParams& p, double lambda,
                                                         double t_end, double u0, double du0,
                                                         int steps);

/// u'((a+b)/2) for the solution with u(0) = 1, u'(0) = 0.
[[nodiscard]] double closing_residual(const NodoidParams& p, double lambda, int steps = 4096);

struct ShootingOptions {
    /// Bisection stops when the lambda bracket is narrower than this.
    double tol = 1e-10;
    /// RK4 steps over the quarter period for the first run; doubled until
    /// consecutive runs agree within tol / 10.
    int steps = 4096;
    int max_doublings = 6;
    /// Equally spaced probes of [m-2, m] used to detect every sign change.
    int bracket_probes = 64;
    /// Largest |u'((a+b)/2)| accepted at convergence.
    double residual_tol = 1e-6;
    bool keep_samples = true;
};

struct ShootingResult {
    double lambda = 0.0;
    double residual = 0.0;
    int iterations = 0;
    int steps = 0;
    /// More than one sign change on [m-2, m]; the root closest to m was taken.
    bool multiple_roots = false;
    /// Eigenfunction over [a, b] normalized by u(0) = 1, reconstructed by reflection.
    std::vector<OdeSample> samples;
};

/// Throws BracketError when the residual has no sign change on [m-2, m].
[[nodiscard]] ShootingResult first_eigenvalue(const NodoidParams& p,
                                              const ShootingOptions& opts = {});

/// Extend a trajectory on [0, (a+b)/2] to [a, b] using u(-t) = u(t) and the
/// reflection about (a+b)/2.
[[nodiscard]] std::vector<OdeSample> reflect_to_period(const NodoidParams& p,
                                                       const std::vector<OdeSample>& quarter);

struct KnownPairResiduals {
    /// max |L0(-z'/z)|, eigenvalue 0 (axial translation).
    double zero;
    /// max |L0(z + m/(4z)) + (z + m/(4z))|, eigenvalue -1 (transverse translation).
    double minus_one;
};

/// Residuals on a uniform grid of [a, b]; u'' by a sixth-order central difference
/// of the closed-form eigenfunctions.
[[nodiscard]] KnownPairResiduals known_eigenpair_residuals(const NodoidParams& p,
                                                           int grid_points = 10000);

}  // namespace nodoid::shooting
