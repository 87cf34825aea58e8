#pragma once

// Equivariant-section calculus for Whitney sums of canonical (gamma) and
// trivial (epsilon) lines over RP^1 and RP^2: the explicit trivializations,
// the rank-drop searches that refute the impossible ones, and the span
// morphism A(s) = x1 A1 + ... + xr Ar.
//
// A section of k*gamma + l*epsilon is carried by a function on the covering
// sphere whose components are odd (gamma slots) or even (epsilon slots).
// Random compliant sections are built from homogeneous polynomial bases split
// by degree parity, so their equivariance is exact in floating point, not
// merely approximate.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "oddaxis/degree.hpp"
#include "oddaxis/errors.hpp"
#include "oddaxis/linalg.hpp"
#include "oddaxis/parallel.hpp"
#include "oddaxis/sphere.hpp"
#include "oddaxis/vec.hpp"

namespace oddaxis {

using ParitySignature = std::vector<int>;  // one entry per component, -1 (gamma) or +1 (epsilon)

inline void validate_signature(const ParitySignature& signs) {
    if (signs.empty()) throw ParameterError("parity signature must be nonempty");
    for (int s : signs)
        if (s != 1 && s != -1) throw ParameterError("parity signature entries must be +-1");
}

template <class Point>
class EquivariantSection {
public:
    EquivariantSection() = default;
    EquivariantSection(ParitySignature signs,
                       std::function<std::vector<double>(const Point&)> eval)
        : signs_(std::move(signs)), eval_(std::move(eval)) {
        validate_signature(signs_);
    }

    int components() const { return static_cast<int>(signs_.size()); }
    const ParitySignature& signature() const { return signs_; }

    std::vector<double> operator()(const Point& s) const { return eval_(s); }

private:
    ParitySignature signs_;
    std::function<std::vector<double>(const Point&)> eval_;
};

using CircleSection = EquivariantSection<Vec2>;
using SphereSection = EquivariantSection<Vec3>;

// ---------------------------------------------------------------------------
// Canonical trivializations
// ---------------------------------------------------------------------------

/// Rows (x, y) and (-y, x): two independent sections of 2*gamma over RP^1,
/// nonvanishing since x^2 + y^2 = 1.
inline std::array<CircleSection, 2> canonical_sections_2gamma() {
    const ParitySignature gg{-1, -1};
    return {CircleSection(gg, [](const Vec2& s) { return std::vector<double>{s.x, s.y}; }),
            CircleSection(gg, [](const Vec2& s) { return std::vector<double>{-s.y, s.x}; })};
}

/// The four rows (x,y,z,0), (-y,x,0,z), (-z,0,x,-y), (0,-z,y,x): pairwise
/// orthogonal sections of 4*gamma over RP^2 with determinant (x^2+y^2+z^2)^2.
inline std::array<SphereSection, 4> canonical_sections_4gamma() {
    const ParitySignature g4{-1, -1, -1, -1};
    return {SphereSection(g4,
                          [](const Vec3& s) {
                              return std::vector<double>{s.x, s.y, s.z, 0.0};
                          }),
            SphereSection(g4,
                          [](const Vec3& s) {
                              return std::vector<double>{-s.y, s.x, 0.0, s.z};
                          }),
            SphereSection(g4,
                          [](const Vec3& s) {
                              return std::vector<double>{-s.z, 0.0, s.x, -s.y};
                          }),
            SphereSection(g4, [](const Vec3& s) {
                return std::vector<double>{0.0, -s.z, s.y, s.x};
            })};
}

// ---------------------------------------------------------------------------
// Equivariance checks and the section matrix
// ---------------------------------------------------------------------------

/// Max over antipodal grid pairs and components of |f(-s) - sign * f(s)|.
inline double check_equivariance(const CircleSection& sec, int m) {
    const std::vector<Vec2> pts = circle_grid(m);
    double worst = 0.0;
    for (int k = 0; k < m / 2; ++k) {
        const std::vector<double> a = sec(pts[k]);
        const std::vector<double> b = sec(pts[k + m / 2]);
        for (int i = 0; i < sec.components(); ++i)
            worst = std::max(worst, std::fabs(b[i] - sec.signature()[i] * a[i]));
    }
    return worst;
}

inline double check_equivariance(const SphereSection& sec, const SphereMesh& mesh) {
    double worst = 0.0;
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        if (static_cast<std::size_t>(mesh.antipode[i]) < i) continue;
        const std::vector<double> a = sec(mesh.vertices[i]);
        const std::vector<double> b = sec(mesh.vertices[mesh.antipode[i]]);
        for (int c = 0; c < sec.components(); ++c)
            worst = std::max(worst, std::fabs(b[c] - sec.signature()[c] * a[c]));
    }
    return worst;
}

/// k x k matrix with row i = section i evaluated at s.
template <class Point>
inline RealMatrix section_matrix(const std::vector<EquivariantSection<Point>>& secs,
                                 const Point& s) {
    if (secs.empty()) throw DimensionError("need at least one section");
    const int k = static_cast<int>(secs.size());
    for (const auto& sec : secs)
        if (sec.components() != k)
            throw DimensionError("section matrix needs k sections with k components each");
    RealMatrix m(k, k);
    for (int i = 0; i < k; ++i) {
        const std::vector<double> row = secs[i](s);
        for (int j = 0; j < k; ++j) m(i, j) = row[j];
    }
    return m;
}

// ---------------------------------------------------------------------------
// Rank-drop search over RP^1: the intermediate-value argument
// ---------------------------------------------------------------------------

struct Rp1Witness {
    Vec2 point;
    double det_abs = 0.0;
    double bracket_width = 0.0;     // angular width of the final bracket
    bool degenerate_everywhere = false;
};

/// For a section pair of gamma + epsilon (signature (-1, +1) each), the
/// determinant of the 2x2 section matrix is odd: det L(-s) = -det L(s).
/// Scan for the best-conditioned s0, then bisect the sign change that must
/// occur between s0 and -s0.
inline Rp1Witness rank_drop_search_rp1(const std::vector<CircleSection>& secs, int m = 512) {
    if (secs.size() != 2) throw DimensionError("rank_drop_search_rp1 needs two sections");
    for (const auto& sec : secs)
        if (sec.signature() != ParitySignature{-1, 1})
            throw ParameterError("rank_drop_search_rp1 needs signature (-1, +1) sections");

    auto det_at = [&](const Vec2& p) {
        const std::vector<double> r0 = secs[0](p);
        const std::vector<double> r1 = secs[1](p);
        return r0[0] * r1[1] - r0[1] * r1[0];
    };

    const std::vector<Vec2> pts = circle_grid(m);
    int best = 0;
    double best_abs = 0.0;
    for (int k = 0; k < m; ++k) {
        const double d = std::fabs(det_at(pts[k]));
        if (d > best_abs) best_abs = d, best = k;
    }
    if (best_abs < 1e-8) {
        // det below threshold on the whole grid: every point is a witness.
        return {pts[0], std::fabs(det_at(pts[0])), 2.0 * std::numbers::pi / m, true};
    }

    auto point_at = [](double t) { return Vec2{std::cos(t), std::sin(t)}; };
    const double t0 = 2.0 * std::numbers::pi * best / m;
    const double d0 = det_at(point_at(t0));

    // Walk the semicircle for the first sign change; endpoints have opposite
    // signs by the parity law, so one always exists.
    const int steps = m / 2;
    double lo = t0, hi = t0;
    double dlo = d0;
    bool found = false;
    for (int k = 1; k <= steps; ++k) {
        const double t = t0 + std::numbers::pi * k / steps;
        const double d = det_at(point_at(t));
        if ((dlo > 0.0) != (d > 0.0) || d == 0.0) {
            hi = t;
            found = true;
            break;
        }
        lo = t;
        dlo = d;
    }
    if (!found) {
        // Numerically flat semicircle; fall back to the antipode itself.
        return {point_at(t0 + std::numbers::pi), std::fabs(-d0), std::numbers::pi, false};
    }

    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        const double d = det_at(point_at(mid));
        if (d == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((d > 0.0) == (dlo > 0.0))
            lo = mid, dlo = d;
        else
            hi = mid;
    }
    const double t_star = 0.5 * (lo + hi);
    return {point_at(t_star), std::fabs(det_at(point_at(t_star))), hi - lo, false};
}

// ---------------------------------------------------------------------------
// Derivative-free minimization on S^2
// ---------------------------------------------------------------------------

namespace detail {

/// Flips the sign so the first non-negligible coordinate is positive;
/// witnesses are projective points, so this fixes the representative.
inline Vec3 canonical_sign(Vec3 p) {
    double lead = p.x;
    if (std::fabs(lead) <= 1e-12) lead = p.y;
    if (std::fabs(lead) <= 1e-12) lead = p.z;
    return lead < 0.0 ? -p : p;
}

inline bool lex_less(const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

/// Plain Nelder-Mead on R^2, stopping when the simplex diameter drops below
/// diam_tol. The objectives here are conic near their minima, which NM
/// handles where gradient methods stall.
template <class F>
inline std::array<double, 3> nelder_mead2(F&& f, double scale, int max_iter, double diam_tol) {
    std::array<std::array<double, 2>, 3> p{{{0.0, 0.0}, {scale, 0.0}, {0.0, scale}}};
    std::array<double, 3> v{f(p[0][0], p[0][1]), f(p[1][0], p[1][1]), f(p[2][0], p[2][1])};

    auto order = [&] {
        if (v[0] > v[1]) std::swap(v[0], v[1]), std::swap(p[0], p[1]);
        if (v[1] > v[2]) std::swap(v[1], v[2]), std::swap(p[1], p[2]);
        if (v[0] > v[1]) std::swap(v[0], v[1]), std::swap(p[0], p[1]);
    };
    order();

    for (int it = 0; it < max_iter; ++it) {
        const double diam =
            std::max(std::hypot(p[1][0] - p[0][0], p[1][1] - p[0][1]),
                     std::hypot(p[2][0] - p[0][0], p[2][1] - p[0][1]));
        if (diam < diam_tol) break;

        const double cx = 0.5 * (p[0][0] + p[1][0]);
        const double cy = 0.5 * (p[0][1] + p[1][1]);
        const double rx = cx + (cx - p[2][0]);
        const double ry = cy + (cy - p[2][1]);
        const double fr = f(rx, ry);
        if (fr < v[0]) {
            const double ex = cx + 2.0 * (cx - p[2][0]);
            const double ey = cy + 2.0 * (cy - p[2][1]);
            const double fe = f(ex, ey);
            if (fe < fr)
                p[2] = {ex, ey}, v[2] = fe;
            else
                p[2] = {rx, ry}, v[2] = fr;
        } else if (fr < v[1]) {
            p[2] = {rx, ry}, v[2] = fr;
        } else {
            const double kx = cx + 0.5 * ((fr < v[2] ? rx : p[2][0]) - cx);
            const double ky = cy + 0.5 * ((fr < v[2] ? ry : p[2][1]) - cy);
            const double fk = f(kx, ky);
            if (fk < std::min(fr, v[2])) {
                p[2] = {kx, ky}, v[2] = fk;
            } else {
                for (int i = 1; i < 3; ++i) {
                    p[i] = {p[0][0] + 0.5 * (p[i][0] - p[0][0]),
                            p[0][1] + 0.5 * (p[i][1] - p[0][1])};
                    v[i] = f(p[i][0], p[i][1]);
                }
            }
        }
        order();
    }
    return {p[0][0], p[0][1], v[0]};
}

/// Coarse mesh scan followed by Nelder-Mead in the tangent plane, restarted
/// from the best scan points. Deterministic: scan ties break by lowest sample
/// index and final ties by lexicographically smallest canonical witness.
template <class F>
inline std::pair<Vec3, double> minimize_on_sphere(F&& f, const SphereMesh& mesh,
                                                  int restarts = 20) {
    const std::size_t nv = mesh.vertices.size();
    std::vector<double> value(nv);
    parallel_for(nv, [&](std::size_t i) { value[i] = f(mesh.vertices[i]); });

    std::vector<int> idx(nv);
    for (std::size_t i = 0; i < nv; ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return value[a] < value[b]; });

    const double spacing = mesh.face_edge.empty() ? 0.1 : mesh.face_edge[0];
    Vec3 best_point = canonical_sign(mesh.vertices[idx[0]]);
    double best_value = value[idx[0]];

    const int n_restart = std::min<int>(restarts, static_cast<int>(nv));
    for (int r = 0; r < n_restart; ++r) {
        Vec3 anchor = mesh.vertices[idx[r]];
        double scale = spacing;
        for (int round = 0; round < 3; ++round) {
            const std::array<Vec3, 2> frame = tangent_frame(anchor);
            const Vec3 u = frame[0], v = frame[1];
            auto obj = [&](double a, double b) {
                return f(normalized(anchor + u * a + v * b));
            };
            const auto res = detail::nelder_mead2(obj, scale, 400, 1e-10);
            anchor = normalized(anchor + u * res[0] + v * res[1]);
            const double moved = std::hypot(res[0], res[1]);
            scale = std::max(1e-7, moved * 0.1);
            if (moved < 0.2) break;  // stayed local: the chart was adequate
        }
        const double fv = f(anchor);
        const Vec3 cp = canonical_sign(anchor);
        if (fv < best_value - 1e-15 ||
            (std::fabs(fv - best_value) <= 1e-15 && lex_less(cp, best_point))) {
            best_value = fv;
            best_point = cp;
        }
        if (best_value < 1e-13) break;
    }
    return {best_point, best_value};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rank-drop search over RP^2
// ---------------------------------------------------------------------------

struct Rp2Witness {
    Vec3 point;
    double sigma_min = 0.0;
    bool warn = false;  // minimum in the ambiguous band even after a re-run
};

/// Minimizes sigma_min of the 3x3 section matrix over S^2. For compliant
/// (-1,-1,+1) sections a true zero always exists; small positive minima are
/// reported as-is with a warning flag after one automatic re-run at the next
/// mesh level.
inline Rp2Witness rank_drop_search_rp2(const std::vector<SphereSection>& secs,
                                       const SphereMesh& mesh) {
    if (secs.size() != 3) throw DimensionError("rank_drop_search_rp2 needs three sections");
    for (const auto& sec : secs)
        if (sec.signature() != ParitySignature{-1, -1, 1})
            throw ParameterError("rank_drop_search_rp2 needs signature (-1, -1, +1) sections");

    auto objective = [&](const Vec3& s) {
        return jacobi_svd(section_matrix(secs, s)).sigma.back();
    };

    auto [point, value] = detail::minimize_on_sphere(objective, mesh);
    if (value > 1e-5 && value < 1e-2 && mesh.level < 8) {
        const SphereMesh finer = icosphere(mesh.level + 1);
        auto [p2, v2] = detail::minimize_on_sphere(objective, finer);
        if (v2 < value) point = p2, value = v2;
    }
    Rp2Witness w;
    w.point = point;
    w.sigma_min = value;
    w.warn = value > 1e-5 && value < 1e-2;
    return w;
}

// ---------------------------------------------------------------------------
// Column maps rho_1, rho_2
// ---------------------------------------------------------------------------

struct RhoExtraction {
    bool short_circuit = false;  // a column vanished on a sample: direct witness
    Vec3 witness;
    double sigma_min = 0.0;
    std::optional<SphereMap> rho1;
    std::optional<SphereMap> rho2;
};

/// The first two components across the three sections form maps
/// rho_k(s) = (tau_1^k, tau_2^k, tau_3^k), k = 1, 2. If either column comes
/// within 1e-9 of zero on the mesh, that sample already witnesses the rank
/// drop and is returned instead of the maps.
inline RhoExtraction extract_rho_maps(const std::vector<SphereSection>& secs,
                                      const SphereMesh& mesh) {
    if (secs.size() != 3) throw DimensionError("extract_rho_maps needs three sections");
    for (const auto& sec : secs)
        if (sec.signature() != ParitySignature{-1, -1, 1})
            throw ParameterError("extract_rho_maps needs signature (-1, -1, +1) sections");

    auto column = [secs](int k, const Vec3& s) {
        return Vec3{secs[0](s)[k], secs[1](s)[k], secs[2](s)[k]};
    };

    for (const Vec3& v : mesh.vertices) {
        for (int k = 0; k < 2; ++k) {
            if (norm(column(k, v)) < kDegenerateNorm) {
                RhoExtraction r;
                r.short_circuit = true;
                r.witness = detail::canonical_sign(v);
                r.sigma_min = jacobi_svd(section_matrix(secs, v)).sigma.back();
                return r;
            }
        }
    }

    RhoExtraction r;
    r.rho1 = SphereMap([column](const Vec3& s) { return column(0, s); });
    r.rho2 = SphereMap([column](const Vec3& s) { return column(1, s); });
    return r;
}

// ---------------------------------------------------------------------------
// Span families
// ---------------------------------------------------------------------------

struct SpanFamily {
    int q = 0;
    std::vector<RealMatrix> mats;

    SpanFamily(int q, std::vector<RealMatrix> matrices) : q(q), mats(std::move(matrices)) {
        if (mats.empty()) throw DimensionError("span family needs r >= 1 matrices");
        for (const RealMatrix& m : mats)
            if (m.rows() != q || m.cols() != q)
                throw DimensionError("span family matrices must all be q x q");
    }

    int r() const { return static_cast<int>(mats.size()); }
};

inline RealMatrix span_morphism(const SpanFamily& fam, const std::vector<double>& s) {
    if (static_cast<int>(s.size()) != fam.r())
        throw DimensionError("coefficient count must match the family size");
    RealMatrix a(fam.q, fam.q);
    for (int i = 0; i < fam.r(); ++i) a.axpy(s[i], fam.mats[i]);
    return a;
}

struct MinRankResult {
    double sigma_min = 0.0;
    std::vector<double> witness;
    int estimated_rank = 0;
    bool warn = false;
};

namespace detail {

inline MinRankResult finish_min_rank(const SpanFamily& fam, std::vector<double> witness) {
    const SvdResult svd = jacobi_svd(span_morphism(fam, witness));
    MinRankResult res;
    res.sigma_min = svd.sigma.back();
    res.witness = std::move(witness);
    const double thresh = 1e-8 * svd.sigma.front();
    for (double s : svd.sigma)
        if (s > thresh) ++res.estimated_rank;
    res.warn = res.sigma_min > 1e-5 && res.sigma_min < 1e-2;
    return res;
}

}  // namespace detail

/// Scans sigma_min of the span morphism over the coefficient sphere S^(r-1)
/// and refines the minimum locally. r = 3 scans the given mesh; r <= 2 uses a
/// dense circle grid or the two signs. Scan evaluations use the fast LU-based
/// sigma_min estimate; the reported minimum is re-measured with the Jacobi SVD.
inline MinRankResult min_rank_over_sphere(const SpanFamily& fam, const SphereMesh& mesh) {
    if (fam.r() != 3) throw DimensionError("mesh scan applies to three-member families");
    auto objective = [&](const Vec3& s) {
        return sigma_min_estimate(span_morphism(fam, {s.x, s.y, s.z}));
    };
    auto [point, value] = detail::minimize_on_sphere(objective, mesh);
    MinRankResult res = detail::finish_min_rank(fam, {point.x, point.y, point.z});
    if (res.warn && mesh.level < 8) {
        const SphereMesh finer = icosphere(mesh.level + 1);
        auto [p2, v2] = detail::minimize_on_sphere(objective, finer);
        if (v2 < value) {
            MinRankResult res2 = detail::finish_min_rank(fam, {p2.x, p2.y, p2.z});
            if (res2.sigma_min < res.sigma_min) res = res2;
        }
        res.warn = res.sigma_min > 1e-5 && res.sigma_min < 1e-2;
    }
    return res;
}

inline MinRankResult min_rank_over_sphere(const SpanFamily& fam, int grid_m = 1024) {
    if (fam.r() == 1) {
        return detail::finish_min_rank(fam, {1.0});
    }
    if (fam.r() != 2) throw DimensionError("grid scan applies to one- or two-member families");

    auto value_at = [&](double t) {
        return sigma_min_estimate(span_morphism(fam, {std::cos(t), std::sin(t)}));
    };
    int best = 0;
    double best_v = 0.0;
    for (int k = 0; k < grid_m; ++k) {
        const double v = value_at(2.0 * std::numbers::pi * k / grid_m);
        if (k == 0 || v < best_v) best_v = v, best = k;
    }
    // Golden-section refinement around the best sample.
    const double step = 2.0 * std::numbers::pi / grid_m;
    double lo = step * best - step, hi = step * best + step;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
    double fa = value_at(a), fb = value_at(b);
    for (int it = 0; it < 120 && hi - lo > 1e-13; ++it) {
        if (fa < fb) {
            hi = b, b = a, fb = fa;
            a = hi - gr * (hi - lo);
            fa = value_at(a);
        } else {
            lo = a, a = b, fa = fb;
            b = lo + gr * (hi - lo);
            fb = value_at(b);
        }
    }
    const double t = 0.5 * (lo + hi);
    std::vector<double> witness{std::cos(t), std::sin(t)};
    if ((std::fabs(witness[0]) > 1e-12 ? witness[0] : witness[1]) < 0.0)
        witness = {-witness[0], -witness[1]};
    return detail::finish_min_rank(fam, witness);
}

// ---------------------------------------------------------------------------
// Random compliant sections
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<double> random_coeffs(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> c(n);
    for (double& x : c) x = u(rng);
    return c;
}

// Homogeneous monomial bases. Odd total degree flips sign exactly under
// negation in IEEE arithmetic; even degree is exactly invariant.
inline double eval_odd_s1(const std::vector<double>& c, const Vec2& p) {
    const double x = p.x, y = p.y;
    const double m[6] = {x, y, x * x * x, x * x * y, x * y * y, y * y * y};
    double s = 0.0;
    for (int i = 0; i < 6; ++i) s += c[i] * m[i];
    return s;
}

inline double eval_even_s1(const std::vector<double>& c, const Vec2& p) {
    const double x = p.x, y = p.y;
    const double m[4] = {1.0, x * x, x * y, y * y};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += c[i] * m[i];
    return s;
}

inline double eval_odd_s2(const std::vector<double>& c, const Vec3& p) {
    const double x = p.x, y = p.y, z = p.z;
    const double m[13] = {x,         y,         z,         x * x * x, x * x * y,
                          x * x * z, x * y * y, x * y * z, x * z * z, y * y * y,
                          y * y * z, y * z * z, z * z * z};
    double s = 0.0;
    for (int i = 0; i < 13; ++i) s += c[i] * m[i];
    return s;
}

inline double eval_even_s2(const std::vector<double>& c, const Vec3& p) {
    const double x = p.x, y = p.y, z = p.z;
    const double m[7] = {1.0, x * x, x * y, x * z, y * y, y * z, z * z};
    double s = 0.0;
    for (int i = 0; i < 7; ++i) s += c[i] * m[i];
    return s;
}

}  // namespace detail

/// Random section of gamma + epsilon over RP^1: component 1 odd, component 2 even.
inline CircleSection random_compliant_rp1_section(std::mt19937_64& rng) {
    auto odd = detail::random_coeffs(rng, 6);
    auto even = detail::random_coeffs(rng, 4);
    return CircleSection({-1, 1}, [odd, even](const Vec2& p) {
        return std::vector<double>{detail::eval_odd_s1(odd, p), detail::eval_even_s1(even, p)};
    });
}

inline std::vector<CircleSection> random_compliant_pair_rp1(std::mt19937_64& rng) {
    return {random_compliant_rp1_section(rng), random_compliant_rp1_section(rng)};
}

/// Random section of 2*gamma + epsilon over RP^2: components 1, 2 odd, 3 even.
inline SphereSection random_compliant_rp2_section(std::mt19937_64& rng) {
    auto odd1 = detail::random_coeffs(rng, 13);
    auto odd2 = detail::random_coeffs(rng, 13);
    auto even = detail::random_coeffs(rng, 7);
    return SphereSection({-1, -1, 1}, [odd1, odd2, even](const Vec3& p) {
        return std::vector<double>{detail::eval_odd_s2(odd1, p), detail::eval_odd_s2(odd2, p),
                                   detail::eval_even_s2(even, p)};
    });
}

inline std::vector<SphereSection> random_compliant_triple_rp2(std::mt19937_64& rng) {
    return {random_compliant_rp2_section(rng), random_compliant_rp2_section(rng),
            random_compliant_rp2_section(rng)};
}

}  // namespace oddaxis
