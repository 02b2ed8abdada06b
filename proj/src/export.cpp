#include "nodoid/export.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <ostream>

#include "nodoid/errors.hpp"
#include "nodoid/quadrature.hpp"

namespace nodoid {

std::vector<ProfileRow> sample_profile(const NodoidParams& p, int samples) {
    if (samples < 2) throw DomainError("profile needs at least 2 samples");
    std::vector<ProfileRow> rows;
    rows.reserve(static_cast<std::size_t>(samples));
    const double step = p.period() / (samples - 1);
    quadrature::SimpsonOptions opts;
    opts.initial_panels = 2;
    double x = 0.0;
    double t_prev = p.a();
    for (int i = 0; i < samples; ++i) {
        const double t = (i + 1 == samples) ? p.b() : p.a() + i * step;
        if (i > 0) {
            x += quadrature::adaptive_simpson([&p](double s) { return axial_velocity(p, s); },
                                              t_prev, t, opts);
        }
        rows.push_back({t, x, height(p, t)});
        t_prev = t;
    }
    return rows;
}

void write_profile_csv(std::ostream& os, const std::vector<ProfileRow>& rows) {
    os << "t,x,z\n";
    for (const auto& r : rows) os << fmt::format("{:.15g},{:.15g},{:.15g}\n", r.t, r.x, r.z);
}

void write_mesh_obj(std::ostream& os, const NodoidParams& p, int samples, int theta_samples) {
    if (samples < 2 || theta_samples < 3) {
        throw DomainError("mesh needs at least 2 t samples and 3 theta samples");
    }
    const auto rows = sample_profile(p, samples);
    for (const auto& r : rows) {
        for (int j = 0; j < theta_samples; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / theta_samples;
            os << fmt::format("v {:.15g} {:.15g} {:.15g}\n", r.x, r.z * std::cos(theta),
                              r.z * std::sin(theta));
        }
    }
    // 1-based indices; (i, j) -> i * theta_samples + j + 1.
    auto idx = [theta_samples](int i, int j) { return i * theta_samples + (j % theta_samples) + 1; };
    for (int i = 0; i + 1 < samples; ++i) {
        for (int j = 0; j < theta_samples; ++j) {
            const int v00 = idx(i, j), v01 = idx(i, j + 1);
            const int v10 = idx(i + 1, j), v11 = idx(i + 1, j + 1);
            os << "f " << v00 << ' ' << v01 << ' ' << v10 << '\n';
            os << "f " << v10 << ' ' << v01 << ' ' << v11 << '\n';
        }
    }
}

}  // namespace nodoid
