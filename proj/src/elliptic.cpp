#include "nodoid/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "nodoid/errors.hpp"

namespace nodoid::elliptic {

namespace {

constexpr int kMaxAgmSteps = 64;
constexpr double kAgmTol = 1e-15;

void check_msq(double msq, const char* fn) {
    if (!(msq >= 0.0 && msq < 1.0)) {
        throw DomainError(std::string(fn) + ": modulus-squared must lie in [0, 1), got " +
                          std::to_string(msq));
    }
}

}  // namespace

double complete_K(double msq) {
    check_msq(msq, "complete_K");
    double a = 1.0;
    double b = std::sqrt(1.0 - msq);
    for (int i = 0; i < kMaxAgmSteps && std::abs(a - b) >= kAgmTol * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return std::numbers::pi / (2.0 * a);
}

double carlson_RF(double x, double y, double z) {
    if (x < 0.0 || y < 0.0 || z < 0.0 ||
        (x == 0.0 && y == 0.0) || (y == 0.0 && z == 0.0) || (x == 0.0 && z == 0.0)) {
        throw DomainError("carlson_RF: arguments must be non-negative with at most one zero");
    }
    constexpr double kErrTol = 1e-3;
    double mu = 0.0;
    double dx = 0.0, dy = 0.0, dz = 0.0;
    for (int i = 0; i < 200; ++i) {
        mu = (x + y + z) / 3.0;
        dx = 1.0 - x / mu;
        dy = 1.0 - y / mu;
        dz = 1.0 - z / mu;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kErrTol) break;
        const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const double lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(mu);
}

double incomplete_F(double phi, double msq) {
    check_msq(msq, "incomplete_F");
    if (phi == 0.0) return 0.0;
    const double half_turns = std::round(phi / std::numbers::pi);
    const double r = phi - half_turns * std::numbers::pi;
    const double s = std::sin(r);
    const double c = std::cos(r);
    double result = 0.0;
    if (s != 0.0) result = s * carlson_RF(c * c, 1.0 - msq * s * s, 1.0);
    if (half_turns != 0.0) result += 2.0 * half_turns * complete_K(msq);
    return result;
}

EllipticTriple jacobi_triple(double xi, double msq) {
    check_msq(msq, "jacobi_triple");
    EllipticTriple out;
    out.xi = xi;
    out.msq = msq;
    if (msq == 0.0) {
        out.sn = std::sin(xi);
        out.cn = std::cos(xi);
        out.dn = 1.0;
        return out;
    }

    const double period = 4.0 * complete_K(msq);
    const double u = xi - period * std::round(xi / period);

    // Descending AGM; a[n], c[n] retained for the backward Landen sweep.
    std::array<double, kMaxAgmSteps + 1> a{};
    std::array<double, kMaxAgmSteps + 1> c{};
    a[0] = 1.0;
    double b = std::sqrt(1.0 - msq);
    c[0] = std::sqrt(msq);
    int n = 0;
    while (std::abs(c[n]) >= kAgmTol && n < kMaxAgmSteps) {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }

    double phi = std::ldexp(a[n] * u, n);
    for (int i = n; i > 0; --i) {
        phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));
    }
    out.sn = std::sin(phi);
    out.cn = std::cos(phi);
    out.dn = std::sqrt(1.0 - msq * out.sn * out.sn);
    return out;
}

}  // namespace nodoid::elliptic
