#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oddaxis/bundles.hpp"
#include "oddaxis/degree.hpp"
#include "oddaxis/linalg.hpp"
#include "oddaxis/sphere.hpp"

using namespace oddaxis;

namespace {

const SphereMesh& mesh4() {
    static const SphereMesh m = icosphere(4);
    return m;
}

std::vector<SphereSection> to_vector(const std::array<SphereSection, 4>& a) {
    return {a[0], a[1], a[2], a[3]};
}

}  // namespace

TEST_CASE("2gamma sections: values, determinant, equivariance") {
    const auto secs = canonical_sections_2gamma();
    std::vector<CircleSection> v{secs[0], secs[1]};

    const RealMatrix at_x = section_matrix(v, Vec2{1.0, 0.0});
    CHECK(at_x(0, 0) == 1.0);
    CHECK(at_x(0, 1) == 0.0);
    CHECK(at_x(1, 0) == 0.0);
    CHECK(at_x(1, 1) == 1.0);
    CHECK(determinant(at_x) == doctest::Approx(1.0));

    const RealMatrix at_y = section_matrix(v, Vec2{0.0, 1.0});
    CHECK(at_y(0, 0) == 0.0);
    CHECK(at_y(0, 1) == 1.0);
    CHECK(at_y(1, 0) == -1.0);
    CHECK(at_y(1, 1) == 0.0);
    CHECK(determinant(at_y) == doctest::Approx(1.0));

    CHECK(check_equivariance(secs[0], 256) == 0.0);
    CHECK(check_equivariance(secs[1], 256) == 0.0);
}

TEST_CASE("4gamma sections: identity at the pole, orthonormal rows, unit determinant") {
    const auto secs = canonical_sections_4gamma();
    const auto v = to_vector(secs);

    const RealMatrix at_pole = section_matrix(v, Vec3{1.0, 0.0, 0.0});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(at_pole(i, j) == (i == j ? 1.0 : 0.0));

    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Vec3 s = normalized(Vec3{gauss(rng), gauss(rng), gauss(rng)});
        const RealMatrix omega = section_matrix(v, s);
        // Gram matrix of the rows should be the identity.
        const RealMatrix gram = omega * omega.transposed();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(std::fabs(gram(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);
        CHECK(std::fabs(determinant(omega) - 1.0) < 1e-12);
    }

    for (const auto& sec : secs) CHECK(check_equivariance(sec, mesh4()) == 0.0);
}

TEST_CASE("check_equivariance flags a parity mismatch") {
    // Claims an even (+1) slot but supplies an odd function: defect = 2|f|.
    const CircleSection liar({-1, 1},
                             [](const Vec2& p) { return std::vector<double>{p.x, p.y}; });
    CHECK(check_equivariance(liar, 256) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("section_matrix: antipodal column-sign relation") {
    std::mt19937_64 rng(17);
    const auto secs = random_compliant_triple_rp2(rng);
    const SphereMesh& m = mesh4();
    for (std::size_t i = 0; i < m.vertices.size(); i += 101) {
        const RealMatrix a = section_matrix(secs, m.vertices[i]);
        const RealMatrix b = section_matrix(secs, m.vertices[m.antipode[i]]);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                const double expected = (c == 2 ? 1.0 : -1.0) * a(r, c);
                CHECK(b(r, c) == expected);  // exact: monomial parity
            }
    }
}

TEST_CASE("section_matrix rejects mismatched shapes") {
    const auto g2 = canonical_sections_2gamma();
    std::vector<CircleSection> three{g2[0], g2[1], g2[0]};
    CHECK_THROWS_AS(section_matrix(three, Vec2{1.0, 0.0}), DimensionError);
}

TEST_CASE("rank_drop_search_rp1: closed-form family") {
    // Sections (x, 1) and (y, c): det = c*x - y vanishes at tan(theta) = c.
    const double c = 0.75;
    const CircleSection s1({-1, 1}, [](const Vec2& p) { return std::vector<double>{p.x, 1.0}; });
    const CircleSection s2({-1, 1}, [c](const Vec2& p) { return std::vector<double>{p.y, c}; });
    const Rp1Witness w = rank_drop_search_rp1({s1, s2});
    CHECK(w.det_abs < 1e-8);
    CHECK(w.bracket_width <= 1e-12);
    const double theta = std::atan2(w.point.y, w.point.x);
    const double expected = std::atan(c);
    const double dist = std::fabs(std::remainder(theta - expected, std::numbers::pi));
    CHECK(dist < 1e-9);
}

TEST_CASE("rank_drop_search_rp1: antipodal determinant law and random pairs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const auto pair = random_compliant_pair_rp1(rng);
        auto det_at = [&](const Vec2& p) {
            return determinant(section_matrix(pair, p));
        };
        const auto grid = circle_grid(64);
        for (int k = 0; k < 32; ++k) {
            CHECK(det_at(grid[k + 32]) == -det_at(grid[k]));  // exact sign flip
        }
        const Rp1Witness w = rank_drop_search_rp1(pair);
        CHECK(w.det_abs < 1e-8);
    }
}

TEST_CASE("rank_drop_search_rp1: flat determinant still yields a witness") {
    const CircleSection z1({-1, 1},
                           [](const Vec2& p) { return std::vector<double>{p.x, 1.0}; });
    const CircleSection z2({-1, 1},
                           [](const Vec2& p) { return std::vector<double>{p.x, 1.0}; });
    const Rp1Witness w = rank_drop_search_rp1({z1, z2});
    CHECK(w.degenerate_everywhere);
    CHECK(w.det_abs < 1e-8);
}

TEST_CASE("rank_drop_search_rp2: identical first columns force singularity") {
    // rho_1 = rho_2 = identity: the section matrix has two equal columns.
    auto make = [](int i) {
        return SphereSection({-1, -1, 1}, [i](const Vec3& s) {
            const double comp = i == 0 ? s.x : (i == 1 ? s.y : s.z);
            return std::vector<double>{comp, comp, 1.0};
        });
    };
    const std::vector<SphereSection> secs{make(0), make(1), make(2)};
    const Rp2Witness w = rank_drop_search_rp2(secs, mesh4());
    CHECK(w.sigma_min < 1e-6);
}

TEST_CASE("rank_drop_search_rp2: random compliant triples have a rank drop") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto secs = random_compliant_triple_rp2(rng);
        const Rp2Witness w = rank_drop_search_rp2(secs, mesh4());
        CHECK(w.sigma_min < 1e-5);
    }
}

TEST_CASE("constant orthonormal sections of epsilon^3 never drop rank") {
    // All-even control: a genuinely trivial bundle with constant frame.
    auto row = [](int i) {
        return SphereSection({1, 1, 1}, [i](const Vec3&) {
            std::vector<double> r(3, 0.0);
            r[i] = 1.0;
            return r;
        });
    };
    const std::vector<SphereSection> secs{row(0), row(1), row(2)};
    auto objective = [&](const Vec3& s) {
        return jacobi_svd(section_matrix(secs, s)).sigma.back();
    };
    double lowest = 2.0;
    for (const Vec3& v : mesh4().vertices) lowest = std::min(lowest, objective(v));
    CHECK(lowest == doctest::Approx(1.0));
}

TEST_CASE("extract_rho_maps: identity-derived columns give degree one") {
    // tau_i = (s_i, (Rs)_i, c_i) with R a rotation: rho_1 = id, rho_2 = R.
    const double ang = 0.3;
    auto make = [ang](int i) {
        return SphereSection({-1, -1, 1}, [i, ang](const Vec3& s) {
            const double rx = s.x * std::cos(ang) - s.y * std::sin(ang);
            const double ry = s.x * std::sin(ang) + s.y * std::cos(ang);
            const Vec3 rs{rx, ry, s.z};
            const double c[3] = {0.2, -0.4, 0.9};
            return std::vector<double>{s[i], rs[i], c[i]};
        });
    };
    const std::vector<SphereSection> secs{make(0), make(1), make(2)};
    const RhoExtraction ext = extract_rho_maps(secs, mesh4());
    REQUIRE_FALSE(ext.short_circuit);
    CHECK(antipode_defect(*ext.rho1, mesh4()) < 1e-12);
    CHECK(antipode_defect(*ext.rho2, mesh4()) < 1e-12);
    const int d1 = brouwer_degree(*ext.rho1, mesh4()).rounded;
    const int d2 = brouwer_degree(*ext.rho2, mesh4()).rounded;
    CHECK(d1 == 1);
    CHECK(d2 == 1);
    CHECK(d1 % 2 != 0);
    // And the section matrix must still drop rank somewhere (the columns agree
    // along the rotation axis).
    const Rp2Witness w = rank_drop_search_rp2(secs, mesh4());
    CHECK(w.sigma_min < 1e-6);
}

TEST_CASE("extract_rho_maps: vanishing column short-circuits to a witness") {
    const Vec3 axis = mesh4().vertices.front();
    auto make = [axis](int i) {
        return SphereSection({-1, -1, 1}, [i, axis](const Vec3& s) {
            const Vec3 tangential = s - axis * dot(s, axis);  // vanishes at +-axis
            const double c[3] = {0.1, 0.7, -0.2};
            return std::vector<double>{tangential[i], s[i], c[i]};
        });
    };
    const std::vector<SphereSection> secs{make(0), make(1), make(2)};
    const RhoExtraction ext = extract_rho_maps(secs, mesh4());
    REQUIRE(ext.short_circuit);
    CHECK(ext.sigma_min < 1e-9);
    CHECK(std::fabs(std::fabs(dot(ext.witness, axis)) - 1.0) < 1e-12);
}

TEST_CASE("span_morphism: identity family and realified i") {
    const SpanFamily single(2, {RealMatrix::identity(2)});
    const RealMatrix m = span_morphism(single, {1.0});
    CHECK(m(0, 0) == 1.0);
    CHECK(m(0, 1) == 0.0);

    // {I, realified i}: at s = (0, 1) the morphism is the rotation by 90 degrees.
    const RealMatrix rot(2, 2, {0.0, -1.0, 1.0, 0.0});
    const SpanFamily fam(2, {RealMatrix::identity(2), rot});
    const RealMatrix at01 = span_morphism(fam, {0.0, 1.0});
    CHECK(at01(0, 0) == 0.0);
    CHECK(at01(0, 1) == -1.0);
    CHECK(at01(1, 0) == 1.0);

    CHECK_THROWS_AS(span_morphism(fam, {1.0, 0.0, 0.0}), DimensionError);
}

namespace {

// Left multiplications by 1, i, j on the quaternions in the basis (1, i, j, k).
SpanFamily quaternion_family() {
    const RealMatrix one = RealMatrix::identity(4);
    const RealMatrix li(4, 4,
                        {0, -1, 0, 0,
                         1, 0, 0, 0,
                         0, 0, 0, -1,
                         0, 0, 1, 0});
    const RealMatrix lj(4, 4,
                        {0, 0, -1, 0,
                         0, 0, 0, 1,
                         1, 0, 0, 0,
                         0, -1, 0, 0});
    return SpanFamily(4, {one, li, lj});
}

}  // namespace

TEST_CASE("quaternion span: every combination is orthogonal") {
    const SpanFamily fam = quaternion_family();
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec3 s = normalized(Vec3{gauss(rng), gauss(rng), gauss(rng)});
        const RealMatrix a = span_morphism(fam, {s.x, s.y, s.z});
        const RealMatrix gram = a.transposed() * a;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(std::fabs(gram(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);
        CHECK(smallest_singular_value(a) == doctest::Approx(1.0));
    }
}

TEST_CASE("min_rank_over_sphere: quaternion control stays at 1") {
    const MinRankResult res = min_rank_over_sphere(quaternion_family(), mesh4());
    CHECK(res.sigma_min == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(res.estimated_rank == 4);
    CHECK_FALSE(res.warn);
}

TEST_CASE("min_rank_over_sphere: two-member family on the circle") {
    const SpanFamily fam(2, {RealMatrix::identity(2), RealMatrix::diagonal({1.0, -1.0})});
    const MinRankResult res = min_rank_over_sphere(fam, 1024);
    CHECK(res.sigma_min < 1e-8);
    // Singular exactly on the diagonals s = (1, -1)/sqrt(2) and (1, 1)/sqrt(2).
    CHECK(std::fabs(std::fabs(res.witness[0]) - 1.0 / std::sqrt(2.0)) < 1e-6);
    CHECK(std::fabs(std::fabs(res.witness[1]) - 1.0 / std::sqrt(2.0)) < 1e-6);
    CHECK(res.estimated_rank == 1);
}

TEST_CASE("min_rank_over_sphere: single-member family") {
    const SpanFamily fam(3, {RealMatrix::diagonal({2.0, 1.0, 0.5})});
    const MinRankResult res = min_rank_over_sphere(fam);
    CHECK(res.sigma_min == doctest::Approx(0.5));
    CHECK(res.estimated_rank == 3);
}

TEST_CASE("min_rank_over_sphere: three random invertible 6x6 matrices go singular") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto random_invertible = [&] {
        while (true) {
            RealMatrix m(6, 6);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) m(i, j) = u(rng);
            if (smallest_singular_value(m) > 1e-3) return m;
        }
    };
    for (int trial = 0; trial < 5; ++trial) {
        const SpanFamily fam(6, {random_invertible(), random_invertible(), random_invertible()});
        const MinRankResult res = min_rank_over_sphere(fam, mesh4());
        CHECK(res.sigma_min < 1e-5);
    }
}

TEST_CASE("random compliant sections are exactly equivariant") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        const auto pair = random_compliant_pair_rp1(rng);
        CHECK(check_equivariance(pair[0], 128) == 0.0);
        CHECK(check_equivariance(pair[1], 128) == 0.0);
        const auto triple = random_compliant_triple_rp2(rng);
        for (const auto& sec : triple) CHECK(check_equivariance(sec, mesh4()) == 0.0);
    }
}

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(validate_signature(ParitySignature{}), ParameterError);
    CHECK_THROWS_AS(validate_signature(ParitySignature{1, 0}), ParameterError);
    CHECK_THROWS_AS(
        rank_drop_search_rp1({canonical_sections_2gamma()[0], canonical_sections_2gamma()[1]}),
        ParameterError);
}
