#pragma once

// Arithmetic in Z2[a]/(a^(n+1)) plus the Radon-Hurwitz function. Coefficients
// are bits packed 64 per word; multiplication is carryless shift-xor, so the
// mod-2 reduction can never be wrong.

#include <bit>
#include <cstdint>
#include <vector>

#include "oddaxis/errors.hpp"

namespace oddaxis {

class TruncatedZ2Poly {
public:
    explicit TruncatedZ2Poly(int truncation)
        : n_(truncation), w_(static_cast<std::size_t>(truncation) / 64 + 1, 0) {
        if (truncation < 0) throw ParameterError("truncation index must be >= 0");
    }

    static TruncatedZ2Poly one(int truncation) {
        TruncatedZ2Poly p(truncation);
        p.set_bit(0, true);
        return p;
    }

    /// 1 + a, the total class of a single canonical line.
    static TruncatedZ2Poly one_plus_a(int truncation) {
        TruncatedZ2Poly p = one(truncation);
        if (truncation >= 1) p.set_bit(1, true);
        return p;
    }

    int truncation() const { return n_; }

    bool bit(int i) const {
        if (i < 0 || i > n_) return false;
        return (w_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
    }

    void set_bit(int i, bool value) {
        if (i < 0 || i > n_) throw ParameterError("coefficient index out of range");
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (value)
            w_[static_cast<std::size_t>(i) / 64] |= mask;
        else
            w_[static_cast<std::size_t>(i) / 64] &= ~mask;
    }

    bool is_one() const {
        if (!bit(0)) return false;
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] != (k == 0 ? 1u : 0u)) return false;
        return true;
    }

    bool operator==(const TruncatedZ2Poly& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_;
    std::vector<std::uint64_t> w_;

    // Clears coefficients above the truncation degree.
    void mask_tail() {
        const int top = n_ % 64;
        if (top != 63) w_.back() &= (std::uint64_t{2} << top) - 1;
    }

    friend TruncatedZ2Poly z2_multiply(const TruncatedZ2Poly&, const TruncatedZ2Poly&);
};

/// Carryless convolution: for every set bit 64*pw + b of p, xor in q shifted
/// left by that amount, word by word, then truncate at degree n.
inline TruncatedZ2Poly z2_multiply(const TruncatedZ2Poly& p, const TruncatedZ2Poly& q) {
    if (p.truncation() != q.truncation())
        throw DimensionError("z2_multiply needs matching truncations");
    TruncatedZ2Poly r(p.truncation());
    const std::size_t words = r.w_.size();
    for (std::size_t pw = 0; pw < words; ++pw) {
        std::uint64_t bits = p.w_[pw];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            for (std::size_t qw = 0; qw + pw < words; ++qw) {
                const std::uint64_t v = q.w_[qw];
                if (v == 0) continue;
                r.w_[qw + pw] ^= v << b;
                if (b != 0 && qw + pw + 1 < words) r.w_[qw + pw + 1] ^= v >> (64 - b);
            }
        }
    }
    r.mask_tail();
    return r;
}

/// Total Stiefel-Whitney class of k*gamma + l*epsilon over RP^n: (1+a)^k in
/// Z2[a]/(a^(n+1)). The trivial summands contribute the factor 1, so l only
/// participates through the signature of the bundle, not the class.
inline TruncatedZ2Poly total_sw_class(std::int64_t k, std::int64_t l, int n) {
    if (k < 0 || l < 0) throw ParameterError("bundle multiplicities must be >= 0");
    if (n < 1) throw ParameterError("base dimension must be >= 1");
    TruncatedZ2Poly acc = TruncatedZ2Poly::one(n);
    TruncatedZ2Poly base = TruncatedZ2Poly::one_plus_a(n);
    std::uint64_t e = static_cast<std::uint64_t>(k);
    while (e > 0) {
        if (e & 1u) acc = z2_multiply(acc, base);
        base = z2_multiply(base, base);
        e >>= 1;
    }
    return acc;
}

inline bool is_sw_trivial(std::int64_t k, int n) { return total_sw_class(k, 0, n).is_one(); }

struct RadonHurwitzDecomposition {
    std::int64_t n = 0;
    int b = 0;           // n = 2^b * (2m+1)
    std::int64_t m = 0;
    int c = 0;           // b = c + 4d, 0 <= c < 4
    int d = 0;
    std::int64_t rho = 0;  // 2^c + 8d
};

inline RadonHurwitzDecomposition radon_hurwitz(std::int64_t n) {
    if (n < 1) throw ParameterError("radon_hurwitz needs n >= 1");
    RadonHurwitzDecomposition r;
    r.n = n;
    r.b = std::countr_zero(static_cast<std::uint64_t>(n));
    r.m = ((n >> r.b) - 1) / 2;
    r.c = r.b % 4;
    r.d = r.b / 4;
    r.rho = (std::int64_t{1} << r.c) + 8 * r.d;
    return r;
}

}  // namespace oddaxis
