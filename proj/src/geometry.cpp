#include "nodoid/geometry.hpp"

#include <cmath>
#include <string>

#include "nodoid/elliptic.hpp"
#include "nodoid/errors.hpp"
#include "nodoid/quadrature.hpp"

namespace nodoid {

std::array<double, 5> NodoidParams::symmetry_points() const noexcept {
    return {a_, (3.0 * a_ + b_) / 4.0, (a_ + b_) / 2.0, (a_ + 3.0 * b_) / 4.0, b_};
}

NodoidParams from_mass(double m) {
    if (!std::isfinite(m) || m >= 0.0) {
        throw DomainError("nodoids require mass m < 0, got " + std::to_string(m));
    }
    if (m > -kNearSphereLimit) {
        throw DomainError("mass " + std::to_string(m) +
                          " is too close to the sphere limit m -> 0 (period diverges)");
    }
    NodoidParams p;
    const double s = std::sqrt(1.0 - m);
    p.m_ = m;
    p.B_ = -0.25 * (s - 1.0);
    p.A_ = 0.5 - p.B_;
    p.c_tilde_ = -2.0 * p.B_;
    const double k = p.B_ / p.A_;
    p.ksq_ = k * k;
    p.kpsq_ = 1.0 - p.ksq_;
    p.period_ = elliptic::complete_K(p.kpsq_) / p.A_;
    p.a_ = -0.25 * p.period_;
    p.b_ = 0.75 * p.period_;
    p.neck_ = 0.5 * (s - 1.0);
    p.bulge_ = 0.5 * (1.0 + s);
    return p;
}

double mass_from_neck(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError("neck radius must be positive, got " + std::to_string(r));
    }
    const double w = 2.0 * r + 1.0;
    return 1.0 - w * w;
}

HeightSample height_sample(const NodoidParams& p, double t) {
    const auto e = elliptic::jacobi_triple(2.0 * p.A() * (t - p.b()), p.kpsq());
    const double z = p.c_tilde() / e.dn;
    // d/dx dn = -kpsq sn cn, chain factor 2A.
    const double dz = p.c_tilde() * 2.0 * p.A() * p.kpsq() * e.sn * e.cn / (e.dn * e.dn);
    return {z, dz};
}

double height(const NodoidParams& p, double t) {
    const auto e = elliptic::jacobi_triple(2.0 * p.A() * (t - p.b()), p.kpsq());
    return p.c_tilde() / e.dn;
}

double height_deriv(const NodoidParams& p, double t) { return height_sample(p, t).dz; }

double potential(const NodoidParams& p, double t) {
    const double z = height(p, t);
    const double zsq = z * z;
    return 2.0 * zsq + p.m() * p.m() / (8.0 * zsq);
}

double potential_from_slope(const NodoidParams& p, double t) {
    const auto s = height_sample(p, t);
    const double q = s.dz / s.z;
    return 2.0 - p.m() - 2.0 * q * q;
}

double axial_velocity(const NodoidParams& p, double t) {
    const double z = height(p, t);
    return 0.25 * p.m() + z * z;
}

double axial_position(const NodoidParams& p, double t, double abs_tol) {
    quadrature::SimpsonOptions opts;
    opts.abs_tol = abs_tol;
    return quadrature::adaptive_simpson([&p](double s) { return axial_velocity(p, s); }, p.a(),
                                        t, opts);
}

std::array<double, 3> surface_point(const NodoidParams& p, double t, double theta) {
    const double z = height(p, t);
    return {axial_position(p, t), z * std::cos(theta), z * std::sin(theta)};
}

}  // namespace nodoid
