#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "cox/intpoly.hpp"

namespace cox {

/// Aberth-Ehrlich simultaneous iteration at long double (x87: 64-bit
/// mantissa) precision. All roots at once; good to ~1e-16 relative for the
/// simple, well-separated roots this library feeds it. Zero roots (trailing
/// zero coefficients) are split off exactly first.
inline std::vector<std::complex<long double>> complex_roots(const IntPolynomial& p) {
    using C = std::complex<long double>;
    if (p.degree() < 1)
        return {};

    std::vector<C> roots;
    int low = 0;
    while (p[low] == 0) {
        roots.emplace_back(0.0L, 0.0L);
        ++low;
    }
    const int n = p.degree() - low;
    if (n == 0)
        return roots;

    std::vector<long double> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<size_t>(i)] = p[low + i].convert_to<long double>();

    auto eval = [&](const C& z, C& f, C& df) {
        f = c[static_cast<size_t>(n)];
        df = 0.0L;
        for (int i = n - 1; i >= 0; --i) {
            df = df * z + f;
            f = f * z + c[static_cast<size_t>(i)];
        }
    };

    long double radius = 0.0L;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, std::fabs(c[static_cast<size_t>(i)] / c[static_cast<size_t>(n)]));
    radius = 1.0L + radius;

    std::vector<C> z(static_cast<size_t>(n));
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int i = 0; i < n; ++i) {
        long double theta = 2.0L * pi * i / n + 0.4L;
        long double r = radius * (0.3L + 0.65L * (i + 1.0L) / n);
        z[static_cast<size_t>(i)] = C(r * std::cos(theta), r * std::sin(theta));
    }

    const long double eps = 1e-18L;
    for (int iter = 0; iter < 400; ++iter) {
        long double worst = 0.0L;
        for (int i = 0; i < n; ++i) {
            C f, df;
            eval(z[static_cast<size_t>(i)], f, df);
            C newton = (df != C(0.0L)) ? f / df : C(0.0L);
            C sum = 0.0L;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    sum += C(1.0L) / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            C denom = C(1.0L) - newton * sum;
            C w = (denom != C(0.0L)) ? newton / denom : newton;
            z[static_cast<size_t>(i)] -= w;
            worst = std::max(worst, std::abs(w) / (1.0L + std::abs(z[static_cast<size_t>(i)])));
        }
        if (worst < eps)
            break;
    }

    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

struct RootCounts {
    int outside = 0;   // |z| > 1 + eps
    int on_circle = 0; // | |z| - 1 | <= eps
    int inside = 0;

    int total() const { return outside + on_circle + inside; }
};

inline RootCounts count_by_modulus(const std::vector<std::complex<long double>>& roots,
                                   long double eps) {
    RootCounts rc;
    for (const auto& z : roots) {
        long double m = std::abs(z);
        if (m > 1.0L + eps)
            ++rc.outside;
        else if (m >= 1.0L - eps)
            ++rc.on_circle;
        else
            ++rc.inside;
    }
    return rc;
}

inline long double max_modulus(const std::vector<std::complex<long double>>& roots) {
    long double m = 0.0L;
    for (const auto& z : roots)
        m = std::max(m, std::abs(z));
    return m;
}

} // namespace cox
