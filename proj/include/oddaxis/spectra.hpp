#pragma once

// Companion matrices, realification, bisection for odd real polynomials, the
// real odd-dimension axis finder, and the complex odd-dimension eigenvector
// finder. The complex case runs the constructive route: realify T and iT,
// search the coefficient sphere for a singular combination of {I, D, E}, and
// read the eigenvalue off the witness as rho = -alpha / (beta + i gamma).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oddaxis/bundles.hpp"
#include "oddaxis/errors.hpp"
#include "oddaxis/linalg.hpp"
#include "oddaxis/sphere.hpp"
#include "oddaxis/vec.hpp"

namespace oddaxis {

// ---------------------------------------------------------------------------
// Polynomials (monic; coeffs[i] multiplies X^i, leading 1 implied)
// ---------------------------------------------------------------------------

struct PolynomialReal {
    std::vector<double> coeffs;

    explicit PolynomialReal(std::vector<double> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw ParameterError("polynomial degree must be >= 1");
        for (double v : coeffs)
            if (!std::isfinite(v)) throw ParameterError("polynomial coefficients must be finite");
    }

    int degree() const { return static_cast<int>(coeffs.size()); }

    double eval(double x) const {
        double s = 1.0;
        for (int i = degree() - 1; i >= 0; --i) s = s * x + coeffs[i];
        return s;
    }
};

struct PolynomialComplex {
    std::vector<Complex> coeffs;

    explicit PolynomialComplex(std::vector<Complex> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw ParameterError("polynomial degree must be >= 1");
    }

    int degree() const { return static_cast<int>(coeffs.size()); }
};

/// Standard companion form: ones on the subdiagonal, last column -a_0..-a_{n-1}.
inline RealMatrix companion_matrix(const PolynomialReal& p) {
    const int n = p.degree();
    RealMatrix c(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs[i];
    return c;
}

inline ComplexMatrix companion_matrix(const PolynomialComplex& p) {
    const int n = p.degree();
    ComplexMatrix c(n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = {1.0, 0.0};
    for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs[i];
    return c;
}

// ---------------------------------------------------------------------------
// Realification
// ---------------------------------------------------------------------------

/// Each entry a + ib becomes the 2x2 block [[a, -b], [b, a]], so the real
/// vector (v1, v2, v3, v4, ...) carries the complex vector (v1+iv2, v3+iv4,..).
inline RealMatrix realify(const ComplexMatrix& t) {
    const int n = t.size();
    RealMatrix a(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Complex& z = t(i, j);
            a(2 * i, 2 * j) = z.re;
            a(2 * i, 2 * j + 1) = -z.im;
            a(2 * i + 1, 2 * j) = z.im;
            a(2 * i + 1, 2 * j + 1) = z.re;
        }
    return a;
}

/// Realification of i*T in one step: a + ib goes to [[-b, -a], [a, -b]].
inline RealMatrix realify_i(const ComplexMatrix& t) {
    const int n = t.size();
    RealMatrix a(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Complex& z = t(i, j);
            a(2 * i, 2 * j) = -z.im;
            a(2 * i, 2 * j + 1) = -z.re;
            a(2 * i + 1, 2 * j) = z.re;
            a(2 * i + 1, 2 * j + 1) = -z.im;
        }
    return a;
}

inline std::vector<Complex> complexify(const std::vector<double>& v) {
    std::vector<Complex> w(v.size() / 2);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = {v[2 * i], v[2 * i + 1]};
    return w;
}

// ---------------------------------------------------------------------------
// Odd-degree real roots by bisection
// ---------------------------------------------------------------------------

/// Bisection inside the Cauchy bound M = 1 + sum |a_i|. Runs until both
/// |p(x)| <= tol and the bracket width is below 1e-14 * M, or the bracket
/// cannot shrink further in double precision.
inline double odd_poly_real_root(const PolynomialReal& p, double tol = 1e-12) {
    if (p.degree() % 2 == 0) throw ParameterError("odd_poly_real_root needs odd degree");
    double bound = 1.0;
    for (double c : p.coeffs) bound += std::fabs(c);

    double lo = -bound, hi = bound;
    double flo = p.eval(lo);
    if (flo == 0.0) return lo;
    if (flo > 0.0) throw ParameterError("Cauchy bound failed to bracket (non-monic input?)");

    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // bracket exhausted double precision
        const double fm = p.eval(mid);
        if (fm == 0.0) return mid;
        if (fm < 0.0)
            lo = mid, flo = fm;
        else
            hi = mid;
        if (std::fabs(fm) <= tol && hi - lo <= 1e-14 * bound) return mid;
    }
    return std::fabs(p.eval(lo)) < std::fabs(p.eval(hi)) ? lo : hi;
}

// ---------------------------------------------------------------------------
// Real odd axis
// ---------------------------------------------------------------------------

struct RealAxis {
    double lambda = 0.0;
    std::vector<double> v;
    double residual = 0.0;
    bool used_fallback = false;
};

namespace detail {

/// Characteristic polynomial coefficients through the Hessenberg determinant
/// recurrence: reduce to upper Hessenberg by Householder similarity, then
/// expand det(XI - H) along the last row of each leading block.
inline PolynomialReal characteristic_polynomial(RealMatrix a) {
    const int n = a.rows();
    // Householder reduction to Hessenberg form (similarity, so the
    // characteristic polynomial is preserved).
    for (int k = 0; k < n - 2; ++k) {
        double xnorm = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm += a(i, k) * a(i, k);
        xnorm = std::sqrt(xnorm);
        if (xnorm < 1e-300) continue;
        std::vector<double> w(n, 0.0);
        const double alpha = a(k + 1, k) >= 0.0 ? -xnorm : xnorm;
        w[k + 1] = a(k + 1, k) - alpha;
        for (int i = k + 2; i < n; ++i) w[i] = a(i, k);
        double wn = 0.0;
        for (double x : w) wn += x * x;
        if (wn < 1e-300) continue;
        // A <- (I - 2ww^T/w^Tw) A (I - 2ww^T/w^Tw)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += w[i] * a(i, j);
            s *= 2.0 / wn;
            for (int i = 0; i < n; ++i) a(i, j) -= s * w[i];
        }
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += a(i, j) * w[j];
            s *= 2.0 / wn;
            for (int j = 0; j < n; ++j) a(i, j) -= s * w[j];
        }
    }

    // p_k(X) = det(XI - H_k) over leading k x k blocks:
    // p_k = (X - h_kk) p_{k-1} - sum_j h_{j,k} (prod of subdiagonals) p_{j-1}.
    std::vector<std::vector<double>> p(n + 1);
    p[0] = {1.0};
    for (int k = 1; k <= n; ++k) {
        std::vector<double> cur(k + 1, 0.0);
        for (int i = 0; i < k; ++i) {
            cur[i + 1] += p[k - 1][i];
            cur[i] -= a(k - 1, k - 1) * p[k - 1][i];
        }
        double chain = 1.0;
        for (int j = k - 1; j >= 1; --j) {
            chain *= a(j, j - 1);
            const double coeff = a(j - 1, k - 1) * chain;
            for (int i = 0; i < j; ++i) cur[i] -= coeff * p[j - 1][i];
        }
        p[k] = std::move(cur);
    }
    std::vector<double> coeffs(p[n].begin(), p[n].end() - 1);  // monic tail dropped
    return PolynomialReal(std::move(coeffs));
}

}  // namespace detail

/// Real eigenpair for odd n. Singular input returns (0, null vector) at once;
/// otherwise the alignment |<T x / ||T x||, x>| is pushed to 1 by multi-start
/// projected gradient ascent and the pair is polished by Rayleigh-quotient
/// iteration. A stalled search falls back to the characteristic polynomial
/// route and flags it.
inline RealAxis real_odd_axis(const RealMatrix& t) {
    if (!t.square()) throw DimensionError("real_odd_axis needs a square matrix");
    const int n = t.rows();
    if (n % 2 == 0) throw ParameterError("real_odd_axis needs odd dimension");

    if (smallest_singular_value(t) < 1e-12) {
        RealAxis out;
        out.lambda = 0.0;
        out.v = null_vector(t, 1e-10);
        out.residual = norm2(t * out.v);
        return out;
    }

    const RealMatrix tt = t.transposed();
    const double scale = std::max(t.max_abs(), 1e-300);

    auto alignment = [&](const std::vector<double>& x) {
        const std::vector<double> u = t * x;
        return std::fabs(std::inner_product(x.begin(), x.end(), u.begin(), 0.0)) / norm2(u);
    };

    auto rqi_polish = [&](std::vector<double> x) -> RealAxis {
        RealAxis out;
        for (int it = 0; it < 25; ++it) {
            const std::vector<double> tx = t * x;
            const double lambda = std::inner_product(x.begin(), x.end(), tx.begin(), 0.0);
            std::vector<double> resid(n);
            for (int i = 0; i < n; ++i) resid[i] = tx[i] - lambda * x[i];
            out.lambda = lambda;
            out.v = x;
            out.residual = norm2(resid);
            if (out.residual <= 1e-9 * std::max(1.0, scale) && it > 0) break;
            RealMatrix shifted = t;
            for (int i = 0; i < n; ++i) shifted(i, i) -= lambda;
            LUFactors lu(shifted);
            if (lu.singular()) {
                for (int i = 0; i < n; ++i) shifted(i, i) += 1e-12 * scale;
                lu = LUFactors(shifted);
                if (lu.singular()) break;
            }
            std::vector<double> y = lu.solve(x);
            const double yn = norm2(y);
            if (!std::isfinite(yn) || yn == 0.0) break;
            for (double& c : y) c /= yn;
            x = std::move(y);
        }
        return out;
    };

    // Deterministic multi-start: coordinate axes first, then seeded random
    // directions, 32 starts of up to 400 projected-gradient steps each.
    std::mt19937_64 rng(0x0dda715u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    RealAxis best;
    best.residual = 1e300;

    for (int start = 0; start < 32; ++start) {
        std::vector<double> x(n, 0.0);
        if (start < n)
            x[start] = 1.0;
        else {
            for (double& c : x) c = gauss(rng);
            normalize_in_place(x);
        }

        double step = 0.1;
        double fx = alignment(x);
        for (int it = 0; it < 400 && fx < 1.0 - 1e-12; ++it) {
            // ascend |f| with f = <Tx, x> / ||Tx||: flip the gradient by sign(f)
            const std::vector<double> u = t * x;
            const double un = norm2(u);
            const double r = std::inner_product(x.begin(), x.end(), u.begin(), 0.0);
            const std::vector<double> ttu = tt * u;
            const std::vector<double> ttx = tt * x;
            std::vector<double> grad(n);
            for (int i = 0; i < n; ++i)
                grad[i] = (u[i] + ttx[i]) / un - r * ttu[i] / (un * un * un);
            const double sign = r >= 0.0 ? 1.0 : -1.0;
            double gdotx = std::inner_product(grad.begin(), grad.end(), x.begin(), 0.0);
            for (int i = 0; i < n; ++i) grad[i] = sign * (grad[i] - gdotx * x[i]);
            const double gn = norm2(grad);
            if (gn < 1e-14) break;

            bool improved = false;
            for (int bt = 0; bt < 20; ++bt) {
                std::vector<double> cand(n);
                for (int i = 0; i < n; ++i) cand[i] = x[i] + step * grad[i];
                normalize_in_place(cand);
                const double fc = alignment(cand);
                if (fc > fx) {
                    x = std::move(cand);
                    fx = fc;
                    step = std::min(step * 1.6, 1.0);
                    improved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!improved) break;
        }

        if (fx > 0.99) {
            RealAxis cand = rqi_polish(x);
            if (cand.residual < best.residual) best = cand;
            if (best.residual <= 1e-8) return best;
        }
    }

    // Stalled: characteristic polynomial by Hessenberg recurrence, then the
    // guaranteed odd-degree real root.
    const PolynomialReal charpoly = detail::characteristic_polynomial(t);
    const double lambda0 = odd_poly_real_root(charpoly, 1e-10);
    RealMatrix shifted = t;
    for (int i = 0; i < n; ++i) shifted(i, i) -= lambda0;
    const SvdResult svd = jacobi_svd(shifted);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = svd.v(i, n - 1);
    normalize_in_place(x);
    RealAxis out = rqi_polish(x);
    out.used_fallback = true;
    if (out.residual < best.residual) {
        best = out;
    }
    best.used_fallback = true;
    return best;
}

// ---------------------------------------------------------------------------
// Singular combinations and the complex odd eigenvector
// ---------------------------------------------------------------------------

struct SingularWitness {
    Vec3 point;
    double sigma_min = 0.0;
    bool warn = false;
};

/// Minimizes sigma_min(s1 A1 + s2 A2 + s3 A3) over the coefficient sphere.
/// For q = 2(2m+1) a zero is guaranteed; q = 0 mod 4 families (quaternion
/// style) legitimately bottom out at a positive value.
inline SingularWitness singular_combination_search(const RealMatrix& a1, const RealMatrix& a2,
                                                   const RealMatrix& a3,
                                                   const SphereMesh& mesh) {
    if (!a1.square() || a1.rows() != a2.rows() || a1.rows() != a3.rows() ||
        !a2.square() || !a3.square())
        throw DimensionError("singular_combination_search needs equal square sizes");
    const SpanFamily fam(a1.rows(), {a1, a2, a3});
    const MinRankResult res = min_rank_over_sphere(fam, mesh);
    SingularWitness w;
    w.point = {res.witness[0], res.witness[1], res.witness[2]};
    w.sigma_min = res.sigma_min;
    w.warn = res.warn;
    return w;
}

struct SpectralCertificate {
    Complex eigenvalue;
    std::vector<Complex> eigenvector;  // unit
    double residual = 0.0;             // ||T v - mu v||
    Vec3 witness;                      // (alpha, beta, gamma) on S^2
    double witness_sigma_min = 0.0;
    std::string method = "singular-combination";
};

/// Complex eigenpair for odd n via the singular-combination search on
/// {I, realify(T), realify(iT)}. The witness cannot sit at (+-1, 0, 0) since
/// sigma_min there is 1, so beta^2 + gamma^2 stays away from zero and
/// rho = -alpha / (beta + i gamma) is well defined. The pair is recovered from
/// the realified null vector and polished by two inverse-iteration steps.
inline SpectralCertificate complex_odd_eigen(const ComplexMatrix& t, const SphereMesh& mesh) {
    const int n = t.size();
    if (n % 2 == 0) throw ParameterError("complex_odd_eigen needs odd dimension");

    const RealMatrix d = realify(t);
    const RealMatrix e = realify_i(t);
    const RealMatrix id = RealMatrix::identity(2 * n);

    SingularWitness w = singular_combination_search(id, d, e, mesh);
    if (w.sigma_min > 1e-6)
        throw SearchFailure("no singular combination found (sigma_min " +
                                std::to_string(w.sigma_min) + " at best witness)",
                            w.sigma_min, {w.point.x, w.point.y, w.point.z});

    const double alpha = w.point.x, beta = w.point.y, gamma = w.point.z;
    if (beta * beta + gamma * gamma <= 1e-12)
        throw SearchFailure("witness collapsed onto the identity axis", w.sigma_min,
                            {w.point.x, w.point.y, w.point.z});
    Complex rho = Complex{-alpha, 0.0} / Complex{beta, gamma};

    // Null vector of the realified T - rho I seeds the complex eigenvector.
    ComplexMatrix shifted = t;
    for (int i = 0; i < n; ++i) shifted(i, i) = shifted(i, i) - rho;
    const SvdResult svd = jacobi_svd(realify(shifted));
    std::vector<double> vr(2 * n);
    for (int i = 0; i < 2 * n; ++i) vr[i] = svd.v(i, 2 * n - 1);
    std::vector<Complex> v = complexify(vr);
    normalize_in_place(v);

    // Two inverse-iteration steps with a slightly perturbed shift, then a
    // Rayleigh-quotient update of the eigenvalue.
    const double scale = [&] {
        double m = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m = std::max(m, cabs(t(i, j)));
        return std::max(m, 1.0);
    }();
    for (int it = 0; it < 2; ++it) {
        ComplexMatrix a = t;
        const Complex shift{rho.re + 1e-12 * scale, rho.im};
        for (int i = 0; i < n; ++i) a(i, i) = a(i, i) - shift;
        std::vector<Complex> y;
        try {
            y = complex_solve(a, v);
        } catch (const NoNullVectorError&) {
            break;  // exactly singular: v is already in the kernel
        }
        const double yn = norm2(y);
        if (!std::isfinite(yn) || yn == 0.0) break;
        for (Complex& z : y) z = {z.re / yn, z.im / yn};
        v = std::move(y);
        // rho <- v* T v
        const std::vector<Complex> tv = t * v;
        Complex acc{0.0, 0.0};
        for (int i = 0; i < n; ++i) acc = acc + conj(v[i]) * tv[i];
        rho = acc;
    }

    SpectralCertificate cert;
    cert.eigenvalue = rho;
    cert.eigenvector = v;
    const std::vector<Complex> tv = t * v;
    std::vector<Complex> resid(n);
    for (int i = 0; i < n; ++i) resid[i] = tv[i] - rho * v[i];
    cert.residual = norm2(resid);
    cert.witness = w.point;
    cert.witness_sigma_min = w.sigma_min;
    if (cert.residual > 1e-8)
        throw SearchFailure("eigenpair residual " + std::to_string(cert.residual) +
                                " exceeds 1e-8 after polish",
                            cert.residual, {w.point.x, w.point.y, w.point.z});
    return cert;
}

inline SpectralCertificate complex_odd_eigen(const ComplexMatrix& t, int mesh_level = 4) {
    return complex_odd_eigen(t, icosphere(mesh_level));
}

}  // namespace oddaxis
