#pragma once

// Test-only dense eigenvalue oracle, deliberately independent of the
// production path (which searches the coefficient sphere of {I, D, E}).
// Here: characteristic polynomial by the Faddeev-LeVerrier trace recurrence,
// then all roots at once by Durand-Kerner iteration. O(n^4) is irrelevant at
// the sizes under test (n <= 9).

#include <cmath>
#include <vector>

#include "oddaxis/linalg.hpp"

namespace oracle {

using oddaxis::cabs;
using oddaxis::Complex;
using oddaxis::ComplexMatrix;

/// Monic characteristic polynomial coefficients c[0..n-1] (constant term
/// first) of det(XI - T).
inline std::vector<Complex> char_poly(const ComplexMatrix& t) {
    const int n = t.size();
    ComplexMatrix m = t;
    std::vector<Complex> c(n + 1);
    c[n] = {1.0, 0.0};
    for (int k = 1; k <= n; ++k) {
        if (k > 1) m = t * m;
        Complex tr{0.0, 0.0};
        for (int i = 0; i < n; ++i) tr = tr + m(i, i);
        c[n - k] = tr * (-1.0 / k);
        for (int i = 0; i < n; ++i) m(i, i) = m(i, i) + c[n - k];
    }
    c.pop_back();
    return c;
}

inline Complex eval_monic(const std::vector<Complex>& c, const Complex& z) {
    Complex acc{1.0, 0.0};
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * z + c[i];
    return acc;
}

/// All n roots by Durand-Kerner from the standard staggered start.
inline std::vector<Complex> all_roots(const std::vector<Complex>& c) {
    const int n = static_cast<int>(c.size());
    std::vector<Complex> r(n);
    const Complex seed{0.4, 0.9};
    r[0] = {1.0, 0.0};
    for (int i = 1; i < n; ++i) r[i] = r[i - 1] * seed;
    for (int iter = 0; iter < 400; ++iter) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex denom{1.0, 0.0};
            for (int j = 0; j < n; ++j)
                if (j != i) denom = denom * (r[i] - r[j]);
            if (cabs(denom) < 1e-300) continue;
            const Complex delta = eval_monic(c, r[i]) / denom;
            r[i] = r[i] - delta;
            moved = std::max(moved, cabs(delta));
        }
        if (moved < 1e-14) break;
    }
    return r;
}

inline std::vector<Complex> eigenvalues(const ComplexMatrix& t) {
    return all_roots(char_poly(t));
}

/// Distance from mu to the nearest oracle eigenvalue of t.
inline double nearest_eigen_distance(const ComplexMatrix& t, const Complex& mu) {
    double best = 1e300;
    for (const Complex& lam : eigenvalues(t)) best = std::min(best, cabs(mu - lam));
    return best;
}

}  // namespace oracle
