#pragma once

// Profile geometry of a Delaunay nodoid with mean curvature 1, parameterized
// by its mass m < 0. The profile (x(t), z(t)) is conformal, so the surface
// (x, z cos(theta), z sin(theta)) has metric z^2 (dt^2 + dtheta^2).
//
// Domain convention: necks at t = a = -T/4 and t = b = 3T/4, so the point
// (3a + b)/4 where x' = 0 sits exactly at t = 0.

#include <array>

namespace nodoid {

/// Derived constants for one nodoid. Immutable; obtain through from_mass().
class NodoidParams {
public:
    double m() const noexcept { return m_; }
    double A() const noexcept { return A_; }
    double B() const noexcept { return B_; }
    double c_tilde() const noexcept { return c_tilde_; }
    /// (B/A)^2, modulus-squared of the sn form.
    double ksq() const noexcept { return ksq_; }
    /// 1 - ksq, modulus-squared of the real dn form used for evaluation.
    double kpsq() const noexcept { return kpsq_; }
    double period() const noexcept { return period_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double neck() const noexcept { return neck_; }
    double bulge() const noexcept { return bulge_; }

    /// a, (3a+b)/4, (a+b)/2, (a+3b)/4, b: reflection points of z' / z and V.
    std::array<double, 5> symmetry_points() const noexcept;

    friend NodoidParams from_mass(double m);

private:
    NodoidParams() = default;

    double m_ = 0.0;
    double A_ = 0.0;
    double B_ = 0.0;
    double c_tilde_ = 0.0;
    double ksq_ = 0.0;
    double kpsq_ = 0.0;
    double period_ = 0.0;
    double a_ = 0.0;
    double b_ = 0.0;
    double neck_ = 0.0;
    double bulge_ = 0.0;
};

/// Masses in (-kNearSphereLimit, 0) are rejected: the period diverges as m -> 0-.
inline constexpr double kNearSphereLimit = 1e-6;

/// Throws DomainError for m >= 0, for m in the near-sphere band, or for non-finite m.
[[nodiscard]] NodoidParams from_mass(double m);

/// Inverse of the neck radius formula: m = 1 - (2r + 1)^2. Throws DomainError for r <= 0.
[[nodiscard]] double mass_from_neck(double r);

struct HeightSample {
    double z;
    double dz;
};

/// z(t) = c_tilde / dn(2A (t - b) | kpsq).
[[nodiscard]] double height(const NodoidParams& p, double t);

/// z'(t) from the quotient rule on the dn form.
[[nodiscard]] double height_deriv(const NodoidParams& p, double t);

/// z and z' from a single elliptic evaluation.
[[nodiscard]] HeightSample height_sample(const NodoidParams& p, double t);

/// V = (2 z^4 + m^2 / 8) / z^2.
[[nodiscard]] double potential(const NodoidParams& p, double t);

/// The same V written as 2 - m - 2 (z'/z)^2; used as a cross-check.
[[nodiscard]] double potential_from_slope(const NodoidParams& p, double t);

/// x(t) = integral from a to t of (m/4 + z^2), by adaptive Simpson.
[[nodiscard]] double axial_position(const NodoidParams& p, double t, double abs_tol = 1e-10);

/// x'(t) = m/4 + z^2.
[[nodiscard]] double axial_velocity(const NodoidParams& p, double t);

/// Point of the surface of revolution at (t, theta).
[[nodiscard]] std::array<double, 3> surface_point(const NodoidParams& p, double t, double theta);

}  // namespace nodoid
