#pragma once

// Antipodally symmetric icosphere meshes on S^2 and uniform grids on S^1.
// The antipodal involution is wired in at construction: the second half of the
// base vertex list is the exact IEEE negation of the first half, midpoints of
// antipodal edges are created as negations of each other, and normalization
// commutes with negation bit for bit. Face areas come from the signed
// spherical excess, so positive area doubles as an orientation check.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "oddaxis/errors.hpp"
#include "oddaxis/vec.hpp"

namespace oddaxis {

struct SphereMesh {
    int level = 0;
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    std::vector<int> antipode;        // vertex involution, antipode[antipode[i]] == i
    std::vector<double> face_area;    // steradians, by spherical excess
    std::vector<Vec3> face_centroid;  // normalized centroids
    std::vector<double> face_edge;    // mean chord length, sets finite-difference steps

    double total_area() const {
        double s = 0.0;
        for (double a : face_area) s += a;
        return s;
    }
};

namespace detail {

/// Signed solid angle of the spherical triangle (a, b, c); positive when the
/// vertex order is counterclockwise seen from outside.
inline double spherical_excess(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double num = dot(a, cross(b, c));
    const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    return 2.0 * std::atan2(num, den);
}

inline void fill_face_data(SphereMesh& mesh) {
    const std::size_t nf = mesh.faces.size();
    mesh.face_area.resize(nf);
    mesh.face_centroid.resize(nf);
    mesh.face_edge.resize(nf);
    for (std::size_t f = 0; f < nf; ++f) {
        const Vec3& a = mesh.vertices[mesh.faces[f][0]];
        const Vec3& b = mesh.vertices[mesh.faces[f][1]];
        const Vec3& c = mesh.vertices[mesh.faces[f][2]];
        mesh.face_area[f] = spherical_excess(a, b, c);
        mesh.face_centroid[f] = normalized(Vec3{a.x + b.x + c.x, a.y + b.y + c.y, a.z + b.z + c.z});
        mesh.face_edge[f] = (norm(a - b) + norm(b - c) + norm(c - a)) / 3.0;
    }
}

}  // namespace detail

/// Icosahedron subdivided `level` times and projected to the unit sphere.
/// level 0: 12 vertices, 20 faces; each level quadruples the face count.
inline SphereMesh icosphere(int level) {
    if (level < 0 || level > 8) throw ParameterError("icosphere level must be in [0, 8]");

    SphereMesh mesh;
    mesh.level = level;

    // Six representatives; their negations complete the icosahedron, which
    // makes vertex i and i+6 exact antipodes.
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const Vec3 reps[6] = {{0.0, 1.0, phi}, {0.0, -1.0, phi}, {1.0, phi, 0.0},
                          {-1.0, phi, 0.0}, {phi, 0.0, 1.0},  {phi, 0.0, -1.0}};
    for (const Vec3& r : reps) mesh.vertices.push_back(normalized(r));
    for (int i = 0; i < 6; ++i) mesh.vertices.push_back(-mesh.vertices[i]);
    mesh.antipode = {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5};

    // Faces are exactly the 3-cliques of the edge graph (the icosahedron has
    // no non-facial triangles); orient each one outward.
    const double edge_chord = norm(mesh.vertices[0] - mesh.vertices[1]);
    auto adjacent = [&](int i, int j) {
        return std::fabs(norm(mesh.vertices[i] - mesh.vertices[j]) - edge_chord) < 1e-9;
    };
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j) {
            if (!adjacent(i, j)) continue;
            for (int k = j + 1; k < 12; ++k) {
                if (!adjacent(i, k) || !adjacent(j, k)) continue;
                std::array<int, 3> f{i, j, k};
                const Vec3& a = mesh.vertices[f[0]];
                const Vec3& b = mesh.vertices[f[1]];
                const Vec3& c = mesh.vertices[f[2]];
                if (dot(a, cross(b, c)) < 0.0) std::swap(f[1], f[2]);
                mesh.faces.push_back(f);
            }
        }

    for (int l = 0; l < level; ++l) {
        std::unordered_map<std::uint64_t, int> midpoint;
        auto edge_key = [](int i, int j) {
            if (i > j) std::swap(i, j);
            return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
        };
        auto midpoint_index = [&](int i, int j) {
            const std::uint64_t key = edge_key(i, j);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            const int idx = static_cast<int>(mesh.vertices.size());
            const std::uint64_t anti_key = edge_key(mesh.antipode[i], mesh.antipode[j]);
            auto anti = midpoint.find(anti_key);
            if (anti != midpoint.end()) {
                // Exact negation keeps the involution exact through every level.
                mesh.vertices.push_back(-mesh.vertices[anti->second]);
                mesh.antipode.push_back(anti->second);
                mesh.antipode[anti->second] = idx;
            } else {
                mesh.vertices.push_back(normalized(mesh.vertices[i] + mesh.vertices[j]));
                mesh.antipode.push_back(-1);
            }
            midpoint.emplace(key, idx);
            return idx;
        };

        std::vector<std::array<int, 3>> next;
        next.reserve(mesh.faces.size() * 4);
        for (const auto& f : mesh.faces) {
            const int ab = midpoint_index(f[0], f[1]);
            const int bc = midpoint_index(f[1], f[2]);
            const int ca = midpoint_index(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        mesh.faces = std::move(next);
    }

    detail::fill_face_data(mesh);
    return mesh;
}

/// m equispaced points on S^1 with point k + m/2 the exact negation of point k.
inline std::vector<Vec2> circle_grid(int m) {
    if (m < 8 || m % 2 != 0) throw ParameterError("circle_grid needs even m >= 8");
    std::vector<Vec2> pts(m);
    for (int k = 0; k < m / 2; ++k) {
        const double t = 2.0 * std::numbers::pi * k / m;
        pts[k] = {std::cos(t), std::sin(t)};
        pts[k + m / 2] = -pts[k];
    }
    return pts;
}

/// Centroid-rule quadrature, summed in face order for reproducibility.
inline double surface_integral(const SphereMesh& mesh,
                               const std::function<double(const Vec3&)>& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < mesh.faces.size(); ++i)
        s += f(mesh.face_centroid[i]) * mesh.face_area[i];
    return s;
}

/// OFF-format dump for eyeballing meshes in a viewer.
inline void write_off(const SphereMesh& mesh, std::ostream& out) {
    out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.faces.size() << " 0\n";
    for (const Vec3& v : mesh.vertices) out << v.x << ' ' << v.y << ' ' << v.z << '\n';
    for (const auto& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

}  // namespace oddaxis
