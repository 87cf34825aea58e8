#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oddaxis/degree.hpp"
#include "oddaxis/linalg.hpp"
#include "oddaxis/sphere.hpp"

using namespace oddaxis;

namespace {

const SphereMesh& mesh4() {
    static const SphereMesh m = icosphere(4);
    return m;
}

const Vec3 kGenericTarget = normalized(Vec3{0.31, -0.52, 0.64});

CircleMap power_map(int k) {
    return angle_circle_map([k](double t) { return k * t; });
}

// Antipode-preserving circle family: odd winding plus a pi-periodic wobble.
CircleMap odd_circle_map(int odd_k, double a, double b) {
    return angle_circle_map(
        [=](double t) { return odd_k * t + a * std::sin(2.0 * t) + b * std::cos(4.0 * t); });
}

// Antipode-preserving sphere map: invertible linear part plus odd cubic wobble.
SphereMap odd_sphere_map(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    RealMatrix a(3, 3);
    double smin = 0.0;
    do {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a(i, j) = u(rng) + (i == j ? 1.5 : 0.0);
        smin = smallest_singular_value(a);
    } while (smin < 0.5);
    const double eps = 0.1 * smin;
    std::array<double, 9> c{};
    for (double& x : c) x = u(rng);
    return SphereMap([a, c, eps](const Vec3& s) {
        const std::vector<double> lin = a * std::vector<double>{s.x, s.y, s.z};
        return Vec3{lin[0] + eps * c[0] * s.x * s.x * s.x + eps * c[1] * s.x * s.y * s.z,
                    lin[1] + eps * c[2] * s.y * s.y * s.y + eps * c[3] * s.x * s.x * s.z,
                    lin[2] + eps * c[4] * s.z * s.z * s.z + eps * c[5] * s.y * s.y * s.x};
    });
}

}  // namespace

TEST_CASE("winding_number: covering maps") {
    CHECK(winding_number(power_map(1), 64).rounded == 1);
    CHECK(winding_number(power_map(3), 64).rounded == 3);
    CHECK(winding_number(power_map(-2), 64).rounded == -2);
    const DegreeReport r = winding_number(power_map(5), 64);
    CHECK(r.certified);
    CHECK(r.residual < 1e-10);
    CHECK(r.method == "lift");
}

TEST_CASE("winding_number: equivariant perturbations stay odd") {
    for (double eps : {0.1, 0.4, 0.9, 1.3}) {
        const CircleMap f = odd_circle_map(1, eps, 0.0);
        CHECK(antipode_defect(f, 256) < 1e-12);
        CHECK(winding_number(f, 64).rounded % 2 != 0);
    }
}

TEST_CASE("winding_number: an antipodal jump is rejected") {
    // Piecewise constant with values (1,0) and (-1,0): consecutive samples sit
    // exactly pi apart at the crossings, so no refinement resolves the lift.
    const CircleMap f(
        [](const Vec2& p) { return p.y >= 0.0 ? Vec2{1.0, 0.0} : Vec2{-1.0, 0.0}; });
    CHECK_THROWS_AS(winding_number(f, 64), UndersampledMapError);
}

TEST_CASE("winding_integral: identity, reflection, and the lift cross-check") {
    CHECK(winding_integral(power_map(1), 2048) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(winding_integral(power_map(-1), 2048) == doctest::Approx(-1.0).epsilon(1e-6));
    const double w5 = winding_integral(power_map(5), 4096);
    CHECK(w5 == doctest::Approx(5.0).epsilon(1e-4));
    CHECK(std::lround(w5) == winding_number(power_map(5), 64).rounded);
}

TEST_CASE("brouwer_degree: identity and antipodal at several levels") {
    for (int level : {3, 4, 5}) {
        const SphereMesh m = icosphere(level);
        const DegreeReport rid = brouwer_degree(builtin_sphere_map("identity"), m);
        CHECK(rid.rounded == 1);
        CHECK(rid.certified);
        const DegreeReport ranti = brouwer_degree(builtin_sphere_map("antipodal"), m);
        CHECK(ranti.rounded == -1);
        CHECK(ranti.certified);
    }
}

TEST_CASE("brouwer_degree: longitude suspensions") {
    for (int k : {2, 3}) {
        const DegreeReport r = brouwer_degree(suspension_map(k), mesh4());
        CHECK(r.rounded == k);
        const DegreeReport p = degree_by_preimage(suspension_map(k), kGenericTarget, mesh4());
        CHECK(p.rounded == k);
    }
}

TEST_CASE("brouwer_degree: discontinuous map refuses to certify") {
    // Shifts the two sides of an off-symmetry latitude toward opposite poles;
    // the covered area is a fixed non-integer multiple of 4pi, so the raw
    // integral settles near 0.572 and never certifies.
    const double zstar = 0.1234321;
    const SphereMap broken([zstar](const Vec3& s) {
        return s.z >= zstar ? Vec3{s.x, s.y, s.z + 0.8} : Vec3{s.x, s.y, s.z - 0.3};
    });
    CHECK_THROWS_AS(brouwer_degree(broken, icosphere(6)), NonConvergentDegreeError);
}

TEST_CASE("degree_by_preimage: identity and antipodal") {
    const DegreeReport rid =
        degree_by_preimage(builtin_sphere_map("identity"), Vec3{0, 0, 1}, mesh4());
    CHECK(rid.rounded == 1);
    const DegreeReport ranti =
        degree_by_preimage(builtin_sphere_map("antipodal"), Vec3{0, 0, 1}, mesh4());
    CHECK(ranti.rounded == -1);
}

TEST_CASE("degree_by_preimage: irregular target is reported") {
    // The poles are branch points of the suspension; the Jacobian degenerates.
    CHECK_THROWS_AS(degree_by_preimage(suspension_map(2), Vec3{0, 0, 1}, mesh4()),
                    IrregularValueError);
}

TEST_CASE("integral and preimage methods agree on the builtin family") {
    for (const std::string& name : builtin_sphere_map_names()) {
        const SphereMap g = builtin_sphere_map(name);
        const int by_integral = brouwer_degree(g, mesh4()).rounded;
        const int by_preimage = degree_by_preimage(g, kGenericTarget, mesh4()).rounded;
        CHECK(by_integral == by_preimage);
    }
}

TEST_CASE("negation law holds across the builtin family") {
    for (const std::string& name : builtin_sphere_map_names()) {
        const SphereMap g = builtin_sphere_map(name);
        CHECK(brouwer_degree(negate(g), mesh4()).rounded == -brouwer_degree(g, mesh4()).rounded);
    }
}

TEST_CASE("antipode_defect: identity, constant, linear") {
    CHECK(antipode_defect(builtin_sphere_map("identity"), mesh4()) == 0.0);
    const SphereMap constant([](const Vec3&) { return Vec3{0, 0, 1}; });
    CHECK(antipode_defect(constant, mesh4()) == doctest::Approx(2.0));
    CHECK(antipode_defect(builtin_sphere_map("linear:det+"), mesh4()) < 1e-12);
}

TEST_CASE("antipode-preserving sphere maps have odd degree") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3; ++trial) {
        const SphereMap g = odd_sphere_map(rng);
        CHECK(antipode_defect(g, mesh4()) < 1e-12);
        CHECK(brouwer_degree(g, mesh4()).rounded % 2 != 0);
    }
}

TEST_CASE("sampled homotopy with no antipodal collision preserves degree") {
    const SphereMap g0 = builtin_sphere_map("identity");
    const SphereMap g1 = builtin_sphere_map("twist");
    // Admissibility: g0(s) never hits -g1(s) on the mesh.
    double closest = 2.0;
    for (const Vec3& v : mesh4().vertices) closest = std::min(closest, norm(g0(v) + g1(v)));
    REQUIRE(closest > 0.1);
    const int d0 = brouwer_degree(g0, mesh4()).rounded;
    for (double t : {0.25, 0.5, 0.75, 1.0}) {
        const SphereMap ht([&, t](const Vec3& s) { return g0(s) * (1.0 - t) + g1(s) * t; });
        CHECK(brouwer_degree(ht, mesh4()).rounded == d0);
    }
    // The forbidden endpoint pair: identity against antipodal collides everywhere.
    const SphereMap anti = builtin_sphere_map("antipodal");
    double collide = 2.0;
    for (const Vec3& v : mesh4().vertices) collide = std::min(collide, norm(g0(v) + anti(v)));
    CHECK(collide == 0.0);
}

TEST_CASE("degenerate map values raise the rank-drop signal") {
    const SphereMap bad([](const Vec3& s) { return Vec3{s.x - s.x, 0.0, 0.0}; });
    CHECK_THROWS_AS(bad(Vec3{1, 0, 0}), DegenerateMapValue);
}

TEST_CASE("sampled_sphere_map reproduces smooth maps") {
    const SphereMesh& m = mesh4();
    const SphereMap truth = builtin_sphere_map("twist");
    std::vector<Vec3> samples;
    samples.reserve(m.vertices.size());
    for (const Vec3& v : m.vertices) samples.push_back(truth(v));
    const SphereMap tabled = sampled_sphere_map(m, samples);

    double worst = 0.0;
    for (std::size_t f = 0; f < m.faces.size(); f += 17)
        worst = std::max(worst, norm(tabled(m.face_centroid[f]) - truth(m.face_centroid[f])));
    CHECK(worst < 5e-3);

    CHECK(brouwer_degree(tabled, m).rounded == 1);
}

TEST_CASE("sampled_sphere_map validates its table") {
    const SphereMesh& m = mesh4();
    std::vector<Vec3> short_table(3, Vec3{1, 0, 0});
    CHECK_THROWS_AS(sampled_sphere_map(m, short_table), DimensionError);
    std::vector<Vec3> not_unit(m.vertices.size(), Vec3{0.5, 0, 0});
    CHECK_THROWS_AS(sampled_sphere_map(m, not_unit), ParameterError);
}

TEST_CASE("builtin registry rejects unknown names") {
    CHECK_THROWS_AS(builtin_sphere_map("moebius"), ParameterError);
}
