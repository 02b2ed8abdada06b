#pragma once

// Jacobi elliptic functions and elliptic integrals of the first kind, for real
// arguments and modulus-squared msq = k^2 in [0, 1). Everything is
// parameterized by msq, never by k.

namespace nodoid::elliptic {

/// Values of sn, cn, dn at one argument.
struct EllipticTriple {
    double xi = 0.0;
    double msq = 0.0;
    double sn = 0.0;
    double cn = 1.0;
    double dn = 1.0;
};

/// Complete integral K = F(pi/2 | msq), by the arithmetic-geometric mean.
/// Throws DomainError unless 0 <= msq < 1.
[[nodiscard]] double complete_K(double msq);

/// Incomplete integral of the first kind F(phi | msq) for any real phi.
/// Uses Carlson's R_F on the principal range and F(phi + j*pi) = F(phi) + 2jK.
[[nodiscard]] double incomplete_F(double phi, double msq);

/// Carlson's symmetric integral R_F(x, y, z); at most one argument may be zero.
[[nodiscard]] double carlson_RF(double x, double y, double z);

/// sn, cn, dn by the descending Landen transformation seeded from the AGM.
/// The argument is first reduced modulo the real period 4K.
[[nodiscard]] EllipticTriple jacobi_triple(double xi, double msq);

}  // namespace nodoid::elliptic
