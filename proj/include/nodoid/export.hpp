#pragma once

#include <iosfwd>
#include <vector>

#include "nodoid/geometry.hpp"

namespace nodoid {

struct ProfileRow {
    double t;
    double x;
    double z;
};

/// `samples` equally spaced points of one period, t in [a, b] inclusive.
/// x is accumulated segment by segment from x(a) = 0.
[[nodiscard]] std::vector<ProfileRow> sample_profile(const NodoidParams& p, int samples);

/// CSV with header `t,x,z`, LF line endings, 15 significant digits.
void write_profile_csv(std::ostream& os, const std::vector<ProfileRow>& rows);

/// Wavefront OBJ of one fundamental piece: a (samples x theta_samples) vertex
/// grid in row-major (t, theta) order, theta in [0, 2pi) wrapping around, each
/// quad split into two triangles wound counterclockwise seen from the side the
/// bulge faces (outward at the bulge).
void write_mesh_obj(std::ostream& os, const NodoidParams& p, int samples, int theta_samples);

}  // namespace nodoid
