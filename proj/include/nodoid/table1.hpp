#pragma once

// Published reference values for the seven-mass eigenvalue table (n = 13
// Fourier basis functions, H = 1), together with the routine recomputing
// every column.

#include <array>

namespace nodoid::table1 {

struct PublishedRow {
    double m;
    double b_over_3;      // = -a, a quarter period
    double lower;         // m - 2
    double upper;         // mean-potential bound
    double first_method;  // shooting estimate of lambda_0
    double lambda0;       // Ritz estimates, n = 13
    double lambda1;
    double lambda2;
    double lambda34;  // one printed value per near-degenerate pair
    double lambda56;
};

// Printed as-is. The m = -20 first-method entry (-12) disagrees with every
// other column of its row and with lambda_0 = m - 1; it is kept verbatim and
// flagged by suspected_misprint().
inline constexpr std::array<PublishedRow, 7> kPublished = {{
    {-0.25, 2.0137, -2.25, -1.0522, -1.25, -1.245, -0.992, 0.00543, 1.44, 4.45},
    {-0.5, 1.656, -2.5, -1.3643, -1.5, -1.4994, -0.9987, 0.00102, 2.279, 6.75},
    {-1.0, 1.3108, -3.0, -1.9137, -2.0, -1.999, -0.9993, 0.00062, 3.86, 11.021},
    {-2.0, 1.0, -4.0, -2.9483, -3.0, -2.999, -0.9932, 0.00615, 6.94, 19.26},
    {-3.0, 0.8428, -5.0, -3.964, -4.0, -3.999, -0.999, 0.00069, 9.943, 27.3},
    {-10.0, 0.4849, -12.0, -10.988, -11.0, -10.999, -0.9974, 0.00256, 30.99, 83.46},
    {-20.0, 0.34683, -22.0, -20.994, -12.0, -20.999, -0.983, 0.0168, 61.056, 163.61},
}};

inline constexpr bool suspected_misprint(const PublishedRow& row) noexcept {
    return row.m == -20.0;
}

struct ComputedRow {
    double m = 0.0;
    double b_over_3 = 0.0;
    double period = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double first_method = 0.0;
    std::array<double, 7> ritz{};  // lambda_0 .. lambda_6
    double lambda34_mean() const noexcept { return 0.5 * (ritz[3] + ritz[4]); }
    double lambda56_mean() const noexcept { return 0.5 * (ritz[5] + ritz[6]); }
};

/// Recompute one row; ritz_n must be at least 7.
[[nodiscard]] ComputedRow compute_row(double m, int ritz_n = 13);

}  // namespace nodoid::table1
