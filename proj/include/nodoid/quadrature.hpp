#pragma once

#include <cmath>
#include <string>

#include "nodoid/errors.hpp"

namespace nodoid::quadrature {

struct SimpsonOptions {
    double abs_tol = 1e-10;
    // The interval is pre-split into this many panels so that integrands
    // periodic on [lo, hi] cannot fool the first Simpson estimate.
    int initial_panels = 16;
    int max_depth = 40;
};

namespace detail {

template <class F>
double simpson_step(const F& f, double lo, double hi, double f_lo, double f_mid, double f_hi,
                    double whole, double tol, int depth, int max_depth) {
    const double mid = 0.5 * (lo + hi);
    const double left_mid = 0.5 * (lo + mid);
    const double right_mid = 0.5 * (mid + hi);
    const double f_lm = f(left_mid);
    const double f_rm = f(right_mid);
    const double h = hi - lo;
    const double left = h / 12.0 * (f_lo + 4.0 * f_lm + f_mid);
    const double right = h / 12.0 * (f_mid + 4.0 * f_rm + f_hi);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= max_depth) {
        throw NumericalError("adaptive Simpson did not converge on [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
    }
    return simpson_step(f, lo, mid, f_lo, f_lm, f_mid, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_step(f, mid, hi, f_mid, f_rm, f_hi, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

/// Integral of f over [lo, hi] by adaptive Simpson with Richardson correction.
/// Throws NumericalError when the recursion depth limit is reached.
template <class F>
double adaptive_simpson(const F& f, double lo, double hi, const SimpsonOptions& opts = {}) {
    if (lo == hi) return 0.0;
    const int panels = opts.initial_panels < 1 ? 1 : opts.initial_panels;
    const double width = (hi - lo) / panels;
    const double tol = opts.abs_tol / panels;
    double total = 0.0;
    double x0 = lo;
    double f0 = f(x0);
    for (int i = 0; i < panels; ++i) {
        const double x1 = (i + 1 == panels) ? hi : lo + (i + 1) * width;
        const double xm = 0.5 * (x0 + x1);
        const double fm = f(xm);
        const double f1 = f(x1);
        const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
        total += detail::simpson_step(f, x0, x1, f0, fm, f1, whole, tol, 0, opts.max_depth);
        x0 = x1;
        f0 = f1;
    }
    return total;
}

}  // namespace nodoid::quadrature
