#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "nodoid/errors.hpp"
#include "nodoid/export.hpp"
#include "nodoid/geometry.hpp"

using namespace nodoid;

namespace {

struct Obj {
    std::vector<std::array<double, 3>> v;
    std::vector<std::array<int, 3>> f;
    bool only_v_and_f = true;
};

Obj parse_obj(const std::string& text) {
    Obj obj;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            std::array<double, 3> p{};
            ls >> p[0] >> p[1] >> p[2];
            obj.v.push_back(p);
        } else if (tag == "f") {
            std::array<int, 3> q{};
            ls >> q[0] >> q[1] >> q[2];
            obj.f.push_back(q);
        } else {
            obj.only_v_and_f = false;
        }
    }
    return obj;
}

}  // namespace

TEST(SampleProfile, NeckAndBulgeAtMassMinusThree) {
    const auto p = from_mass(-3.0);
    const auto rows = sample_profile(p, 257);
    ASSERT_EQ(rows.size(), 257u);
    EXPECT_EQ(rows.front().t, p.a());
    EXPECT_EQ(rows.back().t, p.b());
    EXPECT_EQ(rows.front().x, 0.0);
    const auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(),
                                              [](const auto& l, const auto& r) { return l.z < r.z; });
    EXPECT_NEAR(lo->z, 0.5, 1e-6);
    EXPECT_NEAR(hi->z, 1.5, 1e-6);
}

TEST(SampleProfile, SymmetricAboutTheMidpointRow) {
    const auto rows = sample_profile(from_mass(-1.0), 129);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_NEAR(rows[i].z, rows[rows.size() - 1 - i].z, 1e-12);
    }
}

TEST(SampleProfile, AccumulatedXMatchesDirectQuadrature) {
    const auto p = from_mass(-2.0);
    const auto rows = sample_profile(p, 65);
    for (std::size_t i = 0; i < rows.size(); i += 8) {
        EXPECT_NEAR(rows[i].x, axial_position(p, rows[i].t), 1e-8);
    }
    EXPECT_THROW((void)sample_profile(p, 1), DomainError);
}

TEST(ProfileCsv, HeaderAndLineEndings) {
    std::ostringstream os;
    write_profile_csv(os, sample_profile(from_mass(-1.0), 17));
    const std::string text = os.str();
    EXPECT_EQ(text.rfind("t,x,z\n", 0), 0u);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 18);
    EXPECT_EQ(text.find('\r'), std::string::npos);
    EXPECT_EQ(text.back(), '\n');
}

TEST(MeshObj, CountsIndicesAndRecords) {
    const auto p = from_mass(-3.0);
    const int ns = 33, nt = 24;
    std::ostringstream os;
    write_mesh_obj(os, p, ns, nt);
    const auto obj = parse_obj(os.str());
    EXPECT_TRUE(obj.only_v_and_f);
    ASSERT_EQ(obj.v.size(), static_cast<std::size_t>(ns * nt));
    ASSERT_EQ(obj.f.size(), static_cast<std::size_t>(2 * (ns - 1) * nt));
    for (const auto& f : obj.f) {
        for (int idx : f) {
            ASSERT_GE(idx, 1);
            ASSERT_LE(idx, ns * nt);
        }
    }
    // Row-major (t, theta): vertex k sits on ring k / nt at angle k % nt.
    const auto rows = sample_profile(p, ns);
    for (int k = 0; k < ns * nt; k += 37) {
        const auto& v = obj.v[static_cast<std::size_t>(k)];
        EXPECT_NEAR(std::hypot(v[1], v[2]), rows[static_cast<std::size_t>(k / nt)].z, 1e-12);
    }
}

TEST(MeshObj, OutwardWindingAtTheBulge) {
    const auto p = from_mass(-3.0);
    const int ns = 33, nt = 16;
    std::ostringstream os;
    write_mesh_obj(os, p, ns, nt);
    const auto obj = parse_obj(os.str());
    const int ring = (ns - 1) / 2;  // the bulge ring
    for (int j = 0; j < nt; ++j) {
        const auto& f = obj.f[static_cast<std::size_t>(2 * (ring * nt + j))];
        const auto& a = obj.v[static_cast<std::size_t>(f[0] - 1)];
        const auto& b = obj.v[static_cast<std::size_t>(f[1] - 1)];
        const auto& c = obj.v[static_cast<std::size_t>(f[2] - 1)];
        const std::array<double, 3> u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
        const std::array<double, 3> w{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
        const std::array<double, 3> n{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
                                      u[0] * w[1] - u[1] * w[0]};
        const double radial = n[1] * (a[1] + b[1] + c[1]) + n[2] * (a[2] + b[2] + c[2]);
        EXPECT_GT(radial, 0.0) << "face " << j;
    }
}

TEST(MeshObj, RejectsDegenerateGrids) {
    std::ostringstream os;
    EXPECT_THROW(write_mesh_obj(os, from_mass(-1.0), 1, 8), DomainError);
    EXPECT_THROW(write_mesh_obj(os, from_mass(-1.0), 8, 2), DomainError);
}
