#include "nodoid/table1.hpp"

#include <algorithm>

#include "nodoid/bifurcation.hpp"
#include "nodoid/errors.hpp"
#include "nodoid/geometry.hpp"
#include "nodoid/ritz.hpp"
#include "nodoid/shooting.hpp"

namespace nodoid::table1 {

ComputedRow compute_row(double m, int ritz_n) {
    if (ritz_n < 7) throw DomainError("table rows need a basis of at least 7 functions");
    const NodoidParams p = from_mass(m);
    ComputedRow row;
    row.m = m;
    row.period = p.period();
    row.b_over_3 = p.b() / 3.0;
    row.lower = m - 2.0;
    row.upper = bifurcation::mean_potential_bound(p);
    shooting::ShootingOptions sopts;
    sopts.keep_samples = false;
    row.first_method = shooting::first_eigenvalue(p, sopts).lambda;
    const auto spectrum = ritz::spectrum_estimate(p, ritz_n);
    std::copy_n(spectrum.eigenvalues.begin(), row.ritz.size(), row.ritz.begin());
    return row;
}

}  // namespace nodoid::table1
