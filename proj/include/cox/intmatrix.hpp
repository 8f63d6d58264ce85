#pragma once

#include <vector>

#include "cox/intpoly.hpp"

namespace cox {

/// Dense square matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Int(0)) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    int size() const { return n_; }

    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }
    friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        const int n = x.n_;
        IntMatrix r(n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const Int& xik = x(i, k);
                if (xik == 0)
                    continue;
                const Int* yrow = &y.a_[static_cast<size_t>(k) * n];
                Int* rrow = &r.a_[static_cast<size_t>(i) * n];
                for (int j = 0; j < n; ++j)
                    rrow[j] += xik * yrow[j];
            }
        }
        return r;
    }

    IntMatrix operator-() const {
        IntMatrix r = *this;
        for (auto& v : r.a_)
            v = -v;
        return r;
    }

    IntMatrix transposed() const {
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    Int trace() const {
        Int t = 0;
        for (int i = 0; i < n_; ++i)
            t += (*this)(i, i);
        return t;
    }

    void add_to_diagonal(const Int& c) {
        for (int i = 0; i < n_; ++i)
            (*this)(i, i) += c;
    }

    IntMatrix pow(unsigned e) const {
        IntMatrix r = identity(n_);
        IntMatrix base = *this;
        while (e) {
            if (e & 1u)
                r = r * base;
            e >>= 1u;
            if (e)
                base = base * base;
        }
        return r;
    }

  private:
    int n_ = 0;
    std::vector<Int> a_;
};

/// det(t*I - A), exactly, by Faddeev-LeVerrier; every division by k is exact
/// for integer matrices.
inline IntPolynomial char_poly(const IntMatrix& a) {
    const int n = a.size();
    std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
    c[static_cast<size_t>(n)] = 1;
    IntMatrix m = a;
    for (int k = 1; k <= n; ++k) {
        Int tr = m.trace();
        if (tr % k != 0)
            throw internal_error("Faddeev-LeVerrier trace division is not exact");
        c[static_cast<size_t>(n - k)] = -tr / k;
        if (k < n) {
            m.add_to_diagonal(c[static_cast<size_t>(n - k)]);
            m = a * m;
        }
    }
    return IntPolynomial(std::move(c));
}

/// Inverse of an upper unitriangular integer matrix (exact, unitriangular).
inline IntMatrix invert_unitriangular(const IntMatrix& u) {
    const int n = u.size();
    IntMatrix v = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j) {
        for (int i = j - 1; i >= 0; --i) {
            Int s = 0;
            for (int k = i + 1; k <= j; ++k)
                s += u(i, k) * v(k, j);
            v(i, j) = -s;
        }
    }
    return v;
}

} // namespace cox
