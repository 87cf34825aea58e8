#pragma once

// Numerical mapping degree: winding numbers on S^1 by angle lifting or the
// boundary integral, Brouwer degree on S^2 by the Kronecker integral or by
// signed preimage counting, plus antipode-preservation checks.

#include <cmath>
#include <cstdlib>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "oddaxis/errors.hpp"
#include "oddaxis/linalg.hpp"
#include "oddaxis/sphere.hpp"
#include "oddaxis/vec.hpp"

namespace oddaxis {

struct DegreeReport {
    double raw = 0.0;
    int rounded = 0;
    double residual = 0.0;     // |raw - rounded|
    std::string method;        // "lift" | "integral" | "preimage"
    bool certified = false;    // residual < 0.2
};

inline constexpr double kCertifyResidual = 0.2;
inline constexpr double kDegenerateNorm = 1e-9;

/// Self-map of S^2. The wrapped evaluator may return any vector; evaluation
/// renormalizes and treats norms below 1e-9 as a hard error, which is exactly
/// the rank-drop signal upstream callers want to see.
class SphereMap {
public:
    SphereMap() = default;
    explicit SphereMap(std::function<Vec3(const Vec3&)> raw) : raw_(std::move(raw)) {}

    Vec3 operator()(const Vec3& s) const {
        const Vec3 v = raw_(s);
        const double n = norm(v);
        if (n < kDegenerateNorm)
            throw DegenerateMapValue("map value has norm < 1e-9: not sphere-valued here");
        return {v.x / n, v.y / n, v.z / n};
    }

    const std::function<Vec3(const Vec3&)>& raw() const { return raw_; }

private:
    std::function<Vec3(const Vec3&)> raw_;
};

/// Self-map of S^1 with the same normalization contract.
class CircleMap {
public:
    CircleMap() = default;
    explicit CircleMap(std::function<Vec2(const Vec2&)> raw) : raw_(std::move(raw)) {}

    Vec2 operator()(const Vec2& s) const {
        const Vec2 v = raw_(s);
        const double n = norm(v);
        if (n < kDegenerateNorm)
            throw DegenerateMapValue("map value has norm < 1e-9: not sphere-valued here");
        return {v.x / n, v.y / n};
    }

private:
    std::function<Vec2(const Vec2&)> raw_;
};

inline SphereMap negate(const SphereMap& g) {
    return SphereMap([g](const Vec3& s) { return -g(s); });
}

inline CircleMap negate(const CircleMap& g) {
    return CircleMap([g](const Vec2& s) { return -g(s); });
}

// ---------------------------------------------------------------------------
// Builtin families
// ---------------------------------------------------------------------------

/// Rotates longitude k times; the suspension of theta -> k*theta.
inline SphereMap suspension_map(int k) {
    return SphereMap([k](const Vec3& s) {
        const double r = std::hypot(s.x, s.y);
        if (r < 1e-300) return s;
        const double t = std::atan2(s.y, s.x) * k;
        return Vec3{r * std::cos(t), r * std::sin(t), s.z};
    });
}

/// Normalized image of a fixed linear map.
inline SphereMap linear_map(const RealMatrix& a) {
    if (a.rows() != 3 || a.cols() != 3) throw DimensionError("linear sphere map needs 3x3");
    return SphereMap([a](const Vec3& s) {
        const std::vector<double> y = a * std::vector<double>{s.x, s.y, s.z};
        return Vec3{y[0], y[1], y[2]};
    });
}

/// Builtin registry for the CLI and the acceptance suite. Accepted names:
/// identity, antipodal, suspension:k=K, linear:det+, linear:det-, twist, shifted.
inline SphereMap builtin_sphere_map(const std::string& spec) {
    if (spec == "identity") return SphereMap([](const Vec3& s) { return s; });
    if (spec == "antipodal") return SphereMap([](const Vec3& s) { return -s; });
    if (spec.rfind("suspension:k=", 0) == 0) {
        const int k = std::atoi(spec.c_str() + 13);
        return suspension_map(k);
    }
    if (spec == "linear:det+")
        return linear_map(RealMatrix(3, 3, {2.0, 0.3, -0.1, 0.1, 1.5, 0.2, -0.2, 0.4, 1.2}));
    if (spec == "linear:det-")
        return linear_map(RealMatrix(3, 3, {-2.0, -0.3, 0.1, 0.1, 1.5, 0.2, -0.2, 0.4, 1.2}));
    if (spec == "twist")
        return SphereMap([](const Vec3& s) {
            const double c = std::cos(std::numbers::pi * s.z);
            const double n = std::sin(std::numbers::pi * s.z);
            return Vec3{s.x * c - s.y * n, s.x * n + s.y * c, s.z};
        });
    if (spec == "shifted")
        return SphereMap([](const Vec3& s) { return Vec3{s.x, s.y, s.z + 0.4}; });
    throw ParameterError("unknown builtin map: " + spec);
}

inline std::vector<std::string> builtin_sphere_map_names() {
    return {"identity",      "antipodal",      "suspension:k=-2", "suspension:k=-1",
            "suspension:k=0", "suspension:k=1", "suspension:k=2",  "suspension:k=3",
            "linear:det+",    "linear:det-",    "twist",           "shifted"};
}

/// Circle map from an angle function theta -> Phi(theta).
inline CircleMap angle_circle_map(std::function<double(double)> phi) {
    return CircleMap([phi = std::move(phi)](const Vec2& p) {
        const double t = phi(std::atan2(p.y, p.x));
        return Vec2{std::cos(t), std::sin(t)};
    });
}

// ---------------------------------------------------------------------------
// Winding number on S^1
// ---------------------------------------------------------------------------

namespace detail {

inline double wrap_angle(double d) { return std::remainder(d, 2.0 * std::numbers::pi); }

}  // namespace detail

/// Angle-lift winding number. Doubles the grid until consecutive image gaps
/// stay below pi; a persistent gap >= pi means the samples cannot identify a
/// continuous lift.
inline DegreeReport winding_number(const CircleMap& f, int m) {
    if (m < 8) throw ParameterError("winding_number needs m >= 8");
    constexpr int kMaxGrid = 1 << 21;
    for (; m <= kMaxGrid; m *= 2) {
        std::vector<double> phase(m);
        for (int k = 0; k < m; ++k) {
            const double t = 2.0 * std::numbers::pi * k / m;
            const Vec2 v = f(Vec2{std::cos(t), std::sin(t)});
            phase[k] = std::atan2(v.y, v.x);
        }
        double total = 0.0;
        bool ok = true;
        for (int k = 0; k < m; ++k) {
            const double d = detail::wrap_angle(phase[(k + 1) % m] - phase[k]);
            if (std::fabs(d) >= std::numbers::pi * (1.0 - 1e-9)) {
                ok = false;
                break;
            }
            total += d;
        }
        if (!ok) continue;
        DegreeReport r;
        r.raw = total / (2.0 * std::numbers::pi);
        r.rounded = static_cast<int>(std::lround(r.raw));
        r.residual = std::fabs(r.raw - r.rounded);
        r.method = "lift";
        r.certified = r.residual < kCertifyResidual;
        return r;
    }
    throw UndersampledMapError("consecutive image gap >= pi at the finest circle grid");
}

/// (1/2pi) * integral of g1 dg2 - g2 dg1 over the parametrized circle,
/// with fourth-order central differences for the derivatives.
inline double winding_integral(const CircleMap& g, int m) {
    if (m < 8) throw ParameterError("winding_integral needs m >= 8");
    std::vector<Vec2> val(m);
    for (int k = 0; k < m; ++k) {
        const double t = 2.0 * std::numbers::pi * k / m;
        val[k] = g(Vec2{std::cos(t), std::sin(t)});
    }
    const double dt = 1.0 / m;
    double acc = 0.0;
    for (int k = 0; k < m; ++k) {
        const Vec2& m2 = val[(k + m - 2) % m];
        const Vec2& m1 = val[(k + m - 1) % m];
        const Vec2& p1 = val[(k + 1) % m];
        const Vec2& p2 = val[(k + 2) % m];
        const double d1 = (m2.x - 8.0 * m1.x + 8.0 * p1.x - p2.x) / (12.0 * dt);
        const double d2 = (m2.y - 8.0 * m1.y + 8.0 * p1.y - p2.y) / (12.0 * dt);
        acc += (val[k].x * d2 - val[k].y * d1) * dt;
    }
    return acc / (2.0 * std::numbers::pi);
}

// ---------------------------------------------------------------------------
// Brouwer degree on S^2: Kronecker integral
// ---------------------------------------------------------------------------

namespace detail {

inline double kronecker_integrand(const SphereMap& g, const Vec3& c, double h) {
    const auto [u, v] = tangent_frame(c);
    const Vec3 gu = (g(normalized(c + u * h)) - g(normalized(c - u * h))) * (0.5 / h);
    const Vec3 gv = (g(normalized(c + v * h)) - g(normalized(c - v * h))) * (0.5 / h);
    return dot(g(c), cross(gu, gv));
}

inline DegreeReport integral_degree_on(const SphereMap& g, const SphereMesh& mesh) {
    double acc = 0.0;
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        const double h = 1e-5 * mesh.face_edge[f];
        acc += kronecker_integrand(g, mesh.face_centroid[f], h) * mesh.face_area[f];
    }
    DegreeReport r;
    r.raw = acc / (4.0 * std::numbers::pi);
    r.rounded = static_cast<int>(std::lround(r.raw));
    r.residual = std::fabs(r.raw - r.rounded);
    r.method = "integral";
    r.certified = r.residual < kCertifyResidual;
    return r;
}

}  // namespace detail

/// Kronecker-integral degree. If the integral refuses to settle near an
/// integer, the mesh is escalated level by level up to 8 before giving up:
/// a persistent residual means a discontinuous or undersampled map.
inline DegreeReport brouwer_degree(const SphereMap& g, const SphereMesh& mesh) {
    DegreeReport r = detail::integral_degree_on(g, mesh);
    if (r.certified) return r;
    for (int level = mesh.level + 1; level <= 8; ++level) {
        r = detail::integral_degree_on(g, icosphere(level));
        if (r.certified) return r;
    }
    throw NonConvergentDegreeError("degree integral residual >= 0.2 at the finest mesh level");
}

// ---------------------------------------------------------------------------
// Brouwer degree on S^2: signed preimage count
// ---------------------------------------------------------------------------

/// Signed count of solutions of g(x) = y. Candidate faces are those whose
/// image triangle contains y (with margin); each is refined by Newton steps in
/// the tangent plane and the surviving roots contribute their Jacobian sign.
inline DegreeReport degree_by_preimage(const SphereMap& g, const Vec3& y_in,
                                       const SphereMesh& mesh) {
    const Vec3 y = normalized(y_in);
    const auto yframe = tangent_frame(y);

    std::vector<Vec3> roots;
    std::vector<int> signs;

    auto try_newton = [&](const Vec3& start) -> std::optional<Vec3> {
        Vec3 x = start;
        for (int it = 0; it < 40; ++it) {
            const Vec3 gx = g(x);
            const Vec3 r = gx - y;
            if (norm(r) <= 1e-11) return x;
            const auto [u, v] = tangent_frame(x);
            const double h = 1e-6;
            const Vec3 gu = (g(normalized(x + u * h)) - g(normalized(x - u * h))) * (0.5 / h);
            const Vec3 gv = (g(normalized(x + v * h)) - g(normalized(x - v * h))) * (0.5 / h);
            const double j00 = dot(yframe[0], gu), j01 = dot(yframe[0], gv);
            const double j10 = dot(yframe[1], gu), j11 = dot(yframe[1], gv);
            const double det = j00 * j11 - j01 * j10;
            if (std::fabs(det) < 1e-14) return std::nullopt;
            const double f0 = dot(yframe[0], r), f1 = dot(yframe[1], r);
            double da = (-f0 * j11 + f1 * j01) / det;
            double db = (-j00 * f1 + j10 * f0) / det;
            const double step = std::hypot(da, db);
            if (step > 0.5) {
                da *= 0.5 / step;
                db *= 0.5 / step;
            }
            x = normalized(x + u * da + v * db);
        }
        return std::nullopt;
    };

    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        const Vec3 a = g(mesh.vertices[mesh.faces[f][0]]);
        const Vec3 b = g(mesh.vertices[mesh.faces[f][1]]);
        const Vec3 c = g(mesh.vertices[mesh.faces[f][2]]);
        const double d1 = dot(cross(a, b), y);
        const double d2 = dot(cross(b, c), y);
        const double d3 = dot(cross(c, a), y);
        const double scale = std::max({std::fabs(d1), std::fabs(d2), std::fabs(d3), 1e-30});
        const bool inside_pos = std::min({d1, d2, d3}) >= -0.15 * scale;
        const bool inside_neg = std::max({d1, d2, d3}) <= 0.15 * scale;
        if (!inside_pos && !inside_neg) continue;

        const auto root = try_newton(mesh.face_centroid[f]);
        if (!root) continue;
        bool duplicate = false;
        for (const Vec3& r : roots)
            if (norm(r - *root) < 1e-6) {
                duplicate = true;
                break;
            }
        if (duplicate) continue;

        const auto [u, v] = tangent_frame(*root);
        const double h = 1e-6;
        const Vec3 gu = (g(normalized(*root + u * h)) - g(normalized(*root - u * h))) * (0.5 / h);
        const Vec3 gv = (g(normalized(*root + v * h)) - g(normalized(*root - v * h))) * (0.5 / h);
        const double jac = dot(y, cross(gu, gv));
        if (std::fabs(jac) < 1e-8)
            throw IrregularValueError("preimage with ill-conditioned local Jacobian");
        roots.push_back(*root);
        signs.push_back(jac > 0.0 ? 1 : -1);
    }

    int total = 0;
    for (int s : signs) total += s;
    DegreeReport r;
    r.raw = static_cast<double>(total);
    r.rounded = total;
    r.residual = 0.0;
    r.method = "preimage";
    r.certified = true;
    return r;
}

// ---------------------------------------------------------------------------
// Antipode preservation
// ---------------------------------------------------------------------------

/// Max over antipodal vertex pairs of ||g(-s) + g(s)||.
inline double antipode_defect(const SphereMap& g, const SphereMesh& mesh) {
    double worst = 0.0;
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const int j = mesh.antipode[i];
        if (static_cast<std::size_t>(j) < i) continue;
        worst = std::max(worst, norm(g(mesh.vertices[i]) + g(mesh.vertices[j])));
    }
    return worst;
}

inline double antipode_defect(const CircleMap& f, int m) {
    const std::vector<Vec2> pts = circle_grid(m);
    double worst = 0.0;
    for (int k = 0; k < m / 2; ++k)
        worst = std::max(worst, norm(f(pts[k]) + f(pts[k + m / 2])));
    return worst;
}

// ---------------------------------------------------------------------------
// Sample-table maps
// ---------------------------------------------------------------------------

/// Map defined by one unit vector per mesh vertex, evaluated anywhere by
/// spherical barycentric interpolation and renormalization. The interpolated
/// norm is re-checked against the degenerate threshold before normalizing.
inline SphereMap sampled_sphere_map(const SphereMesh& mesh, std::vector<Vec3> values) {
    if (values.size() != mesh.vertices.size())
        throw DimensionError("need one sample per mesh vertex");
    for (const Vec3& v : values)
        if (std::fabs(norm(v) - 1.0) > kDegenerateNorm)
            throw ParameterError("sample values must be unit vectors within 1e-9");

    struct Table {
        SphereMesh mesh;
        std::vector<Vec3> values;
        std::vector<std::vector<int>> vertex_faces;
    };
    auto table = std::make_shared<Table>();
    table->mesh = mesh;
    table->values = std::move(values);
    table->vertex_faces.resize(mesh.vertices.size());
    for (std::size_t f = 0; f < mesh.faces.size(); ++f)
        for (int corner : mesh.faces[f]) table->vertex_faces[corner].push_back(static_cast<int>(f));

    return SphereMap([table](const Vec3& s) {
        // Nearest vertex, then the best of its incident faces.
        std::size_t best = 0;
        double best_dot = -2.0;
        for (std::size_t i = 0; i < table->mesh.vertices.size(); ++i) {
            const double d = dot(table->mesh.vertices[i], s);
            if (d > best_dot) best_dot = d, best = i;
        }
        double top = -1e300;
        Vec3 out{};
        for (int f : table->vertex_faces[best]) {
            const auto& tri = table->mesh.faces[f];
            const Vec3& a = table->mesh.vertices[tri[0]];
            const Vec3& b = table->mesh.vertices[tri[1]];
            const Vec3& c = table->mesh.vertices[tri[2]];
            double w0 = dot(cross(b, c), s);
            double w1 = dot(cross(c, a), s);
            double w2 = dot(cross(a, b), s);
            const double lowest = std::min({w0, w1, w2});
            if (lowest <= top) continue;
            top = lowest;
            w0 = std::max(w0, 0.0);
            w1 = std::max(w1, 0.0);
            w2 = std::max(w2, 0.0);
            const double wsum = w0 + w1 + w2;
            out = table->values[tri[0]] * (w0 / wsum) + table->values[tri[1]] * (w1 / wsum) +
                  table->values[tri[2]] * (w2 / wsum);
        }
        return out;  // SphereMap wrapper re-checks the norm and normalizes
    });
}

}  // namespace oddaxis
