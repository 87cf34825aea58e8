#pragma once

// Dense small-matrix real/complex arithmetic: determinants, singular values,
// null vectors. Everything here targets matrices of size <= ~64, where simple
// elimination and one-sided Jacobi are both fast and accurate.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "oddaxis/errors.hpp"

namespace oddaxis {

class RealMatrix {
public:
    RealMatrix() = default;

    RealMatrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be >= 1");
    }

    RealMatrix(int rows, int cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be >= 1");
        if (a_.size() != static_cast<std::size_t>(rows) * cols)
            throw DimensionError("entry count does not match rows*cols");
        for (double v : a_)
            if (!std::isfinite(v)) throw ParameterError("matrix entries must be finite");
    }

    static RealMatrix identity(int n) {
        RealMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static RealMatrix diagonal(std::initializer_list<double> d) {
        RealMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        int i = 0;
        for (double v : d) m(i, i) = v, ++i;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }

    RealMatrix transposed() const {
        RealMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RealMatrix operator*(const RealMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        RealMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const double v = (*this)(i, k);
                if (v == 0.0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    std::vector<double> operator*(const std::vector<double>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw DimensionError("matrix-vector shape mismatch");
        std::vector<double> y(rows_, 0.0);
        for (int i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    RealMatrix operator+(const RealMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
        RealMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    RealMatrix operator-(const RealMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix diff shape mismatch");
        RealMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    RealMatrix operator*(double c) const {
        RealMatrix r = *this;
        for (double& v : r.a_) v *= c;
        return r;
    }

    void axpy(double c, const RealMatrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += c * o.a_[i];
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::fabs(v));
        return m;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

inline double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline void normalize_in_place(std::vector<double>& v) {
    const double n = norm2(v);
    for (double& x : v) x /= n;
}

// ---------------------------------------------------------------------------
// LU with partial pivoting. Pivot magnitude below 1e-300 declares exact
// singularity; determinant sign comes from the permutation parity.
// ---------------------------------------------------------------------------

class LUFactors {
public:
    explicit LUFactors(RealMatrix m) : lu_(std::move(m)), perm_(lu_.rows()) {
        if (!lu_.square()) throw DimensionError("LU needs a square matrix");
        const int n = lu_.rows();
        std::iota(perm_.begin(), perm_.end(), 0);
        for (int k = 0; k < n; ++k) {
            int piv = k;
            double best = std::fabs(lu_(k, k));
            for (int i = k + 1; i < n; ++i) {
                const double v = std::fabs(lu_(i, k));
                if (v > best) best = v, piv = i;
            }
            if (best < 1e-300) {
                singular_ = true;
                return;
            }
            if (piv != k) {
                for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
                std::swap(perm_[k], perm_[piv]);
                sign_ = -sign_;
            }
            const double d = lu_(k, k);
            for (int i = k + 1; i < n; ++i) {
                const double f = lu_(i, k) / d;
                lu_(i, k) = f;
                for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
            }
        }
    }

    bool singular() const { return singular_; }

    double determinant() const {
        if (singular_) return 0.0;
        double d = sign_;
        for (int i = 0; i < lu_.rows(); ++i) d *= lu_(i, i);
        return d;
    }

    std::vector<double> solve(const std::vector<double>& b) const {
        if (singular_) throw NoNullVectorError("LU solve on a singular matrix");
        const int n = lu_.rows();
        std::vector<double> y(n);
        for (int i = 0; i < n; ++i) {
            double s = b[perm_[i]];
            for (int j = 0; j < i; ++j) s -= lu_(i, j) * y[j];
            y[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * y[j];
            y[i] = s / lu_(i, i);
        }
        return y;
    }

    // Solves A^T x = b using the same factorization (PA = LU => A^T = U^T L^T P).
    std::vector<double> solve_transposed(const std::vector<double>& b) const {
        if (singular_) throw NoNullVectorError("LU solve on a singular matrix");
        const int n = lu_.rows();
        std::vector<double> y(n);
        for (int i = 0; i < n; ++i) {
            double s = b[i];
            for (int j = 0; j < i; ++j) s -= lu_(j, i) * y[j];
            y[i] = s / lu_(i, i);
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            for (int j = i + 1; j < n; ++j) s -= lu_(j, i) * y[j];
            y[i] = s;
        }
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[perm_[i]] = y[i];
        return x;
    }

private:
    RealMatrix lu_;
    std::vector<int> perm_;
    int sign_ = 1;
    bool singular_ = false;
};

inline double determinant(const RealMatrix& m) {
    if (!m.square()) throw DimensionError("determinant needs a square matrix");
    return LUFactors(m).determinant();
}

inline std::vector<double> lu_solve(const RealMatrix& a, const std::vector<double>& b) {
    return LUFactors(a).solve(b);
}

// ---------------------------------------------------------------------------
// One-sided Jacobi SVD. Columns of the working copy converge to sigma_i * u_i
// while V accumulates the right rotations. Accurate for the tiny matrices used
// here, including exact zeros for structurally rank-deficient input.
// ---------------------------------------------------------------------------

struct SvdResult {
    std::vector<double> sigma;  // descending
    RealMatrix u;               // columns may be arbitrary unit vectors when sigma == 0
    RealMatrix v;
};

inline SvdResult jacobi_svd(const RealMatrix& m) {
    if (!m.square()) throw DimensionError("jacobi_svd needs a square matrix");
    const int n = m.rows();
    RealMatrix a = m;
    RealMatrix v = RealMatrix::identity(n);

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int i = 0; i < n; ++i) {
                    app += a(i, p) * a(i, p);
                    aqq += a(i, q) * a(i, q);
                    apq += a(i, p) * a(i, q);
                }
                if (std::fabs(apq) <= 1e-30 + 1e-16 * std::sqrt(app * aqq)) continue;
                rotated = true;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int i = 0; i < n; ++i) {
                    const double x = a(i, p), y = a(i, q);
                    a(i, p) = c * x - s * y;
                    a(i, q) = s * x + c * y;
                }
                for (int i = 0; i < n; ++i) {
                    const double x = v(i, p), y = v(i, q);
                    v(i, p) = c * x - s * y;
                    v(i, q) = s * x + c * y;
                }
            }
        }
        if (!rotated) break;
    }

    SvdResult r{std::vector<double>(n), RealMatrix(n, n), v};
    std::vector<int> order(n);
    std::vector<double> colnorm(n);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += a(i, j) * a(i, j);
        colnorm[j] = std::sqrt(s);
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return colnorm[x] > colnorm[y]; });

    RealMatrix vs(n, n);
    for (int jj = 0; jj < n; ++jj) {
        const int j = order[jj];
        r.sigma[jj] = colnorm[j];
        for (int i = 0; i < n; ++i) {
            r.u(i, jj) = colnorm[j] > 0.0 ? a(i, j) / colnorm[j] : (i == jj ? 1.0 : 0.0);
            vs(i, jj) = v(i, j);
        }
    }
    r.v = vs;
    return r;
}

inline std::vector<double> singular_values(const RealMatrix& m) { return jacobi_svd(m).sigma; }

inline double smallest_singular_value(const RealMatrix& m) {
    if (!m.square()) throw DimensionError("smallest_singular_value needs a square matrix");
    return jacobi_svd(m).sigma.back();
}

/// Unit vector v with ||M v|| <= 10*tol. Requires sigma_min(M) <= tol.
inline std::vector<double> null_vector(const RealMatrix& m, double tol) {
    if (!m.square()) throw DimensionError("null_vector needs a square matrix");
    const SvdResult svd = jacobi_svd(m);
    if (svd.sigma.back() > tol)
        throw NoNullVectorError("matrix has no null vector at the requested tolerance");
    const int n = m.rows();
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = svd.v(i, n - 1);
    normalize_in_place(v);
    return v;
}

/// Fast sigma_min estimate by inverse power iteration through an LU of A.
/// Used inside sphere scans where thousands of evaluations are needed; every
/// reported minimum is re-measured with jacobi_svd. Deterministic start vector.
inline double sigma_min_estimate(const RealMatrix& a) {
    const int n = a.rows();
    LUFactors lu(a);
    if (lu.singular()) return 0.0;
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double inv_norm = 0.0;
    for (int it = 0; it < 5; ++it) {
        std::vector<double> y = lu.solve_transposed(x);
        std::vector<double> z = lu.solve(y);
        inv_norm = norm2(z);
        if (!std::isfinite(inv_norm) || inv_norm > 1e280) return 0.0;
        if (inv_norm == 0.0) break;
        for (double& c : z) c /= inv_norm;
        x = std::move(z);
    }
    // x is (up to sign) the top eigenvector of (A A^T)^-1; Rayleigh quotient.
    std::vector<double> y = lu.solve_transposed(x);
    const double lam = [&] {
        double s = 0.0;
        for (double c : y) s += c * c;
        return s;
    }();
    if (lam <= 0.0 || !std::isfinite(lam)) return 0.0;
    return 1.0 / std::sqrt(lam);
}

// ---------------------------------------------------------------------------
// Complex values as explicit (re, im) pairs. No std::complex anywhere: the
// realification path is the whole point, so the complex layer stays minimal.
// ---------------------------------------------------------------------------

struct Complex {
    double re = 0.0;
    double im = 0.0;

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator-() const { return {-re, -im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator*(double c) const { return {re * c, im * c}; }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline double cabs(const Complex& z) { return std::hypot(z.re, z.im); }

inline Complex operator/(const Complex& a, const Complex& b) {
    // Smith's algorithm; avoids overflow in the denominator.
    if (std::fabs(b.re) >= std::fabs(b.im)) {
        const double r = b.im / b.re;
        const double d = b.re + b.im * r;
        return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    const double r = b.re / b.im;
    const double d = b.re * r + b.im;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n < 1) throw DimensionError("complex matrix size must be >= 1");
    }

    ComplexMatrix(int n, std::vector<Complex> entries) : n_(n), a_(std::move(entries)) {
        if (n < 1) throw DimensionError("complex matrix size must be >= 1");
        if (a_.size() != static_cast<std::size_t>(n) * n)
            throw DimensionError("entry count does not match n*n");
        for (const Complex& z : a_)
            if (!std::isfinite(z.re) || !std::isfinite(z.im))
                throw ParameterError("matrix entries must be finite");
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = {1.0, 0.0};
        return m;
    }

    int size() const { return n_; }

    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

    ComplexMatrix operator*(const ComplexMatrix& o) const {
        if (n_ != o.n_) throw DimensionError("complex product shape mismatch");
        ComplexMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Complex v = (*this)(i, k);
                for (int j = 0; j < n_; ++j) r(i, j) = r(i, j) + v * o(k, j);
            }
        return r;
    }

    ComplexMatrix operator+(const ComplexMatrix& o) const {
        if (n_ != o.n_) throw DimensionError("complex sum shape mismatch");
        ComplexMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
        return r;
    }

    ComplexMatrix operator-(const ComplexMatrix& o) const {
        if (n_ != o.n_) throw DimensionError("complex diff shape mismatch");
        ComplexMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
        return r;
    }

    ComplexMatrix operator*(const Complex& c) const {
        ComplexMatrix r = *this;
        for (Complex& z : r.a_) z = z * c;
        return r;
    }

    std::vector<Complex> operator*(const std::vector<Complex>& x) const {
        if (static_cast<int>(x.size()) != n_) throw DimensionError("shape mismatch");
        std::vector<Complex> y(n_);
        for (int i = 0; i < n_; ++i) {
            Complex s{0.0, 0.0};
            for (int j = 0; j < n_; ++j) s = s + (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

private:
    int n_ = 0;
    std::vector<Complex> a_;
};

inline double norm2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& z : v) s += z.re * z.re + z.im * z.im;
    return std::sqrt(s);
}

inline void normalize_in_place(std::vector<Complex>& v) {
    const double n = norm2(v);
    for (Complex& z : v) z = {z.re / n, z.im / n};
}

/// Complex LU solve with partial pivoting (by modulus).
inline std::vector<Complex> complex_solve(ComplexMatrix a, std::vector<Complex> b) {
    const int n = a.size();
    if (static_cast<int>(b.size()) != n) throw DimensionError("shape mismatch");
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = cabs(a(k, k));
        for (int i = k + 1; i < n; ++i)
            if (cabs(a(i, k)) > best) best = cabs(a(i, k)), piv = i;
        if (best < 1e-300) throw NoNullVectorError("complex solve on a singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            const Complex f = a(i, k) / a(k, k);
            for (int j = k + 1; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
            b[i] = b[i] - f * b[k];
        }
    }
    std::vector<Complex> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Complex s = b[i];
        for (int j = i + 1; j < n; ++j) s = s - a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

}  // namespace oddaxis
