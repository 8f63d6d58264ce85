#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cox/intpoly.hpp"

namespace cox {

/// Closed interval [lo, hi] with exact rational endpoints.
struct RatInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    double mid() const { return static_cast<double>(Rational((lo + hi) / 2)); }
    bool is_point() const { return lo == hi; }

    /// a strictly below b: every point of a is less than every point of b.
    static bool strictly_below(const RatInterval& a, const RatInterval& b) { return a.hi < b.lo; }
};

namespace detail {

inline int sign_variations(const std::vector<Int>& c) {
    int var = 0;
    int prev = 0;
    for (const Int& x : c) {
        int s = x.sign();
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++var;
        prev = s;
    }
    return var;
}

/// Descartes bound for the number of roots of p in the open interval
/// (a/den, b/den): variations of sum c_i den^(n-i) (a + b s)^i (1+s)^(n-i).
inline int variations_on(const IntPolynomial& p, const Int& a, const Int& b, const Int& den) {
    const int n = p.degree();
    // pascal[m] = coefficients of (1+s)^m
    std::vector<std::vector<Int>> pascal(static_cast<size_t>(n) + 1);
    pascal[0] = {Int(1)};
    for (int m = 1; m <= n; ++m) {
        pascal[static_cast<size_t>(m)].assign(static_cast<size_t>(m) + 1, Int(1));
        for (int j = 1; j < m; ++j)
            pascal[static_cast<size_t>(m)][static_cast<size_t>(j)] =
                pascal[static_cast<size_t>(m - 1)][static_cast<size_t>(j - 1)] +
                pascal[static_cast<size_t>(m - 1)][static_cast<size_t>(j)];
    }
    std::vector<Int> h{p[n]};
    Int dpow = 1;
    for (int i = n - 1; i >= 0; --i) {
        dpow *= den;
        std::vector<Int> next(h.size() + 1, Int(0));
        for (size_t j = 0; j < h.size(); ++j) {
            next[j] += h[j] * a;
            next[j + 1] += h[j] * b;
        }
        const Int ci = p[i] * dpow;
        if (ci != 0) {
            const auto& row = pascal[static_cast<size_t>(n - i)];
            for (size_t j = 0; j < row.size(); ++j)
                next[j] += ci * row[j];
        }
        h = std::move(next);
    }
    return sign_variations(h);
}

/// Exact-sign bisection of [lo/den, hi/den] with a sign change at the ends,
/// down to width <= tol. Doubling den keeps midpoints integral.
inline RatInterval bisect_to_tol(const IntPolynomial& p, Int lo, Int hi, Int den, int slo,
                                 const Rational& tol) {
    const Int tol_num = boost::multiprecision::numerator(tol);
    const Int tol_den = boost::multiprecision::denominator(tol);
    while ((hi - lo) * tol_den > tol_num * den) {
        Int two_lo = lo << 1, two_hi = hi << 1;
        den <<= 1;
        Int mid = (two_lo + two_hi) >> 1;
        int sm = p.sign_at(mid, den);
        if (sm == 0)
            return {Rational(mid, den), Rational(mid, den)};
        if (sm == slo) {
            lo = std::move(mid);
            hi = std::move(two_hi);
        } else {
            lo = std::move(two_lo);
            hi = std::move(mid);
        }
    }
    return {Rational(lo, den), Rational(hi, den)};
}

struct RootSearch {
    const IntPolynomial& p;
    Rational tol;
    static constexpr int kMaxDepth = 40;

    /* Largest root of p in the open interval (lo/den, hi/den), recursing on
     * the upper half first so the first hit is the largest. The step halves
     * with each level; after kMaxDepth halvings an interval that still shows
     * a sign change is refined anyway, anything else is abandoned (this only
     * triggers near even-multiplicity roots, which are out of contract). */
    std::optional<RatInterval> largest_in(const Int& lo, const Int& hi, const Int& den,
                                          int depth) const {
        int v = variations_on(p, lo, hi, den);
        if (v == 0)
            return std::nullopt;
        const int slo = p.sign_at(lo, den);
        const int shi = p.sign_at(hi, den);
        if (v == 1) // exactly one simple root in the interval
            return bisect_to_tol(p, lo, hi, den, slo, tol);
        if (depth >= kMaxDepth) {
            if (slo * shi < 0)
                return bisect_to_tol(p, lo, hi, den, slo, tol);
            return std::nullopt;
        }
        Int two_lo = lo << 1, two_hi = hi << 1;
        Int den2 = den << 1;
        Int mid = (two_lo + two_hi) >> 1;
        if (p.sign_at(mid, den2) == 0) {
            // rational root at the split point: deflate and search above it
            IntPolynomial linear(std::vector<Int>{-mid, den2});
            IntPolynomial q = p, quo;
            while (try_divide_exact(q, linear, quo))
                q = quo;
            Rational m(mid, den2);
            if (q.degree() >= 1) {
                RootSearch sub{q, tol};
                if (auto above = sub.largest_in(mid, two_hi, den2, depth + 1))
                    return above;
            }
            return RatInterval{m, m};
        }
        if (auto upper = largest_in(mid, two_hi, den2, depth + 1))
            return upper;
        return largest_in(two_lo, mid, den2, depth + 1);
    }
};

} // namespace detail

/// Certified enclosure of the largest real root of p in (1, B], where
/// B = 1 + max|a_i|/|a_n| is the Cauchy bound. Returns an interval of width
/// <= tol whose endpoint signs are decided by exact integer arithmetic, or
/// nullopt when no root is found above 1+tol.
inline std::optional<RatInterval> largest_real_root_above_one(const IntPolynomial& p, double tol) {
    if (p.is_zero())
        throw zero_polynomial();
    if (!(tol > 0))
        throw tolerance_not_positive();
    if (p.degree() < 1)
        return std::nullopt;

    const Rational tol_r(tol); // exact value of the double
    const int n = p.degree();
    Int maxc = 0;
    for (int i = 0; i < n; ++i) {
        Int a = abs(p[i]);
        if (a > maxc)
            maxc = std::move(a);
    }
    const Int lead = abs(p.leading());

    // common denominator for 1+tol and the Cauchy bound
    const Int td = boost::multiprecision::denominator(tol_r);
    const Int tn = boost::multiprecision::numerator(tol_r);
    Int den = td * lead;
    Int lo = (td + tn) * lead; // (1+tol) * den
    Int hi = (lead + maxc) * td;
    if (lo >= hi)
        return std::nullopt;

    IntPolynomial q = p;
    // roots exactly at an endpoint would defeat the sign tests: deflate
    IntPolynomial quo;
    bool root_at_lo = false, root_at_hi = false;
    for (const Int& pt : {lo, hi}) {
        IntPolynomial linear(std::vector<Int>{-pt, den});
        while (q.degree() >= 1 && try_divide_exact(q, linear, quo)) {
            q = quo;
            (pt == lo ? root_at_lo : root_at_hi) = true;
        }
    }
    if (root_at_hi)
        return RatInterval{Rational(hi, den), Rational(hi, den)};
    if (q.degree() >= 1)
        if (auto inner = detail::RootSearch{q, tol_r}.largest_in(lo, hi, den, 0))
            return inner;
    if (root_at_lo)
        return RatInterval{Rational(lo, den), Rational(lo, den)};
    return std::nullopt;
}

} // namespace cox
