#pragma once

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cox/errors.hpp"

namespace cox {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial over the integers, coefficients ascending by
/// degree. The zero polynomial is the empty coefficient sequence and reports
/// degree() == -1; every nonzero value keeps a nonzero leading coefficient.
class IntPolynomial {
  public:
    IntPolynomial() = default;

    IntPolynomial(std::initializer_list<long long> ascending) {
        coeffs_.reserve(ascending.size());
        for (long long c : ascending)
            coeffs_.emplace_back(c);
        trim();
    }

    explicit IntPolynomial(std::vector<Int> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static IntPolynomial constant(Int c) {
        IntPolynomial p;
        p.coeffs_.push_back(std::move(c));
        p.trim();
        return p;
    }

    static IntPolynomial one() { return constant(1); }

    /// coeff * t^deg
    static IntPolynomial monomial(int deg, Int coeff = Int(1)) {
        IntPolynomial p;
        if (coeff != 0) {
            p.coeffs_.assign(static_cast<size_t>(deg) + 1, Int(0));
            p.coeffs_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of t^i; zero outside the stored range.
    const Int& operator[](int i) const {
        static const Int kZero{0};
        if (i < 0 || i >= static_cast<int>(coeffs_.size()))
            return kZero;
        return coeffs_[static_cast<size_t>(i)];
    }

    const Int& leading() const {
        if (is_zero())
            throw zero_polynomial();
        return coeffs_.back();
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    bool is_pm_monic() const { return !is_zero() && (coeffs_.back() == 1 || coeffs_.back() == -1); }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }
    friend bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ < b.coeffs_;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
        r.trim();
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
        r.trim();
        return r;
    }

    IntPolynomial operator-() const {
        IntPolynomial r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        IntPolynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            const Int& ai = a.coeffs_[i];
            if (ai == 0)
                continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += ai * b.coeffs_[j];
        }
        // no trim needed: leading coefficients are nonzero and Z has no zero divisors
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const Int& s) {
        if (s == 0)
            return {};
        IntPolynomial r = a;
        for (auto& c : r.coeffs_)
            c *= s;
        return r;
    }

    IntPolynomial& operator+=(const IntPolynomial& b) { return *this = *this + b; }
    IntPolynomial& operator-=(const IntPolynomial& b) { return *this = *this - b; }
    IntPolynomial& operator*=(const IntPolynomial& b) { return *this = *this * b; }

    IntPolynomial pow(unsigned e) const {
        IntPolynomial r = one();
        IntPolynomial base = *this;
        while (e) {
            if (e & 1u)
                r *= base;
            e >>= 1u;
            if (e)
                base *= base;
        }
        return r;
    }

    /// this * t^k
    IntPolynomial shifted(int k) const {
        if (is_zero() || k == 0)
            return *this;
        IntPolynomial r;
        r.coeffs_.assign(coeffs_.size() + static_cast<size_t>(k), Int(0));
        std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + k);
        return r;
    }

    Int evaluate(const Int& x) const {
        Int v = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            v = v * x + *it;
        return v;
    }

    Rational evaluate(const Rational& x) const {
        Rational v = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            v = v * x + *it;
        return v;
    }

    /// Exact sign of p(num/den), den > 0, via the homogenized integer value
    /// sum_i c_i num^i den^(n-i). No rounding anywhere.
    int sign_at(const Int& num, const Int& den) const {
        if (is_zero())
            return 0;
        Int v = coeffs_.back();
        Int dpow = 1;
        for (size_t i = coeffs_.size() - 1; i-- > 0;) {
            dpow *= den;
            v = v * num + coeffs_[i] * dpow;
        }
        return v.sign();
    }

    int sign_at(const Rational& x) const {
        return sign_at(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
    }

    /// p*(t) = t^deg(p) p(1/t): the coefficient sequence reversed.
    IntPolynomial reciprocal() const {
        if (is_zero())
            throw zero_polynomial();
        IntPolynomial r = *this;
        std::reverse(r.coeffs_.begin(), r.coeffs_.end());
        r.trim();
        return r;
    }

    bool is_self_reciprocal() const { return reciprocal() == *this; }

    IntPolynomial derivative() const {
        IntPolynomial r;
        if (degree() < 1)
            return r;
        r.coeffs_.reserve(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i)
            r.coeffs_.push_back(coeffs_[i] * static_cast<long>(i));
        r.trim();
        return r;
    }

    /// Ascending comma-separated coefficients, e.g. "1,1,0,0,1" for 1+t+t^4.
    /// The zero polynomial prints as "0".
    std::string to_coeff_string() const {
        if (is_zero())
            return "0";
        std::string s;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i)
                s += ',';
            s += coeffs_[i].str();
        }
        return s;
    }

    static IntPolynomial from_coeff_string(std::string_view text) {
        std::vector<Int> c;
        std::string tok;
        auto flush = [&](size_t pos) {
            if (tok.empty())
                throw syntax_error(pos, "expected integer coefficient");
            try {
                c.emplace_back(tok);
            } catch (const std::exception&) {
                throw syntax_error(pos, "bad integer '" + tok + "'");
            }
            tok.clear();
        };
        for (size_t i = 0; i < text.size(); ++i) {
            char ch = text[i];
            if (ch == ',') {
                flush(i);
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                tok += ch;
            }
        }
        flush(text.size());
        return IntPolynomial(std::move(c));
    }

    /// Display form like "t^4+t+1"; output only, never parsed back.
    std::string pretty(const std::string& var = "t") const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Int& c = (*this)[i];
            if (c == 0)
                continue;
            if (c > 0 && !first)
                os << '+';
            if (i == 0) {
                os << c.str();
            } else {
                if (c == -1)
                    os << '-';
                else if (c != 1)
                    os << c.str() << '*';
                os << var;
                if (i > 1)
                    os << '^' << i;
            }
            first = false;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

/// Quotient of a by b when a = q*b exactly over Z[t]; false when long
/// division leaves a remainder or needs a fractional quotient coefficient.
inline bool try_divide_exact(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& q) {
    if (b.is_zero())
        throw zero_polynomial();
    if (a.is_zero()) {
        q = IntPolynomial();
        return true;
    }
    if (a.degree() < b.degree())
        return false;
    std::vector<Int> rem(a.coeffs());
    const int db = b.degree();
    const Int& lead = b.leading();
    std::vector<Int> quot(static_cast<size_t>(a.degree() - db) + 1, Int(0));
    for (int i = a.degree(); i >= db; --i) {
        Int& top = rem[static_cast<size_t>(i)];
        if (top == 0)
            continue;
        if (top % lead != 0)
            return false;
        Int f = top / lead;
        for (int j = 0; j < db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= f * b[j];
        top = 0;
        quot[static_cast<size_t>(i - db)] = std::move(f);
    }
    for (const Int& r : rem)
        if (r != 0)
            return false;
    q = IntPolynomial(std::move(quot));
    return true;
}

inline IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial q;
    if (!try_divide_exact(a, b, q))
        throw not_divisible("(" + a.to_coeff_string() + ") is not divisible by (" +
                            b.to_coeff_string() + ")");
    return q;
}

inline long euler_phi(long d) {
    long phi = 1;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p)
            continue;
        d /= p;
        phi *= p - 1;
        while (d % p == 0) {
            d /= p;
            phi *= p;
        }
    }
    if (d > 1)
        phi *= d - 1;
    return phi;
}

/// d-th cyclotomic polynomial via Phi_d = (t^d - 1) / prod_{e|d, e<d} Phi_e,
/// building Phi_e for the divisors of d in increasing order.
inline IntPolynomial cyclotomic(long d) {
    if (d < 1)
        throw parameter_out_of_range("cyclotomic index must be >= 1");
    std::vector<long> divs;
    for (long e = 1; e * e <= d; ++e) {
        if (d % e)
            continue;
        divs.push_back(e);
        if (e != d / e)
            divs.push_back(d / e);
    }
    std::sort(divs.begin(), divs.end());
    std::map<long, IntPolynomial> table;
    for (long e : divs) {
        IntPolynomial f = IntPolynomial::monomial(static_cast<int>(e)) - IntPolynomial::one();
        for (long e2 : divs) {
            if (e2 >= e || e % e2)
                continue;
            f = div_exact(f, table.at(e2));
        }
        table.emplace(e, std::move(f));
    }
    return table.at(d);
}

struct CyclotomicFactorization {
    std::map<long, int> cyclotomic_part; // index d -> multiplicity
    IntPolynomial remainder;

    IntPolynomial reassemble() const {
        IntPolynomial p = remainder;
        for (const auto& [d, m] : cyclotomic_part)
            p *= cyclotomic(d).pow(static_cast<unsigned>(m));
        return p;
    }
};

/// Extract the maximal cyclotomic part of p by repeated exact division.
/// Indices run over 1..2*deg^2+6; since phi(d) >= sqrt(d/2), every d with
/// phi(d) <= deg(p) is covered, and candidates with phi(d) larger than the
/// current remainder degree are skipped.
inline CyclotomicFactorization strip_cyclotomic(const IntPolynomial& p) {
    if (p.is_zero())
        throw zero_polynomial();
    if (!p.is_pm_monic())
        throw not_monic();
    CyclotomicFactorization out;
    out.remainder = p;
    const long n0 = p.degree();
    const long bound = 2 * n0 * n0 + 6;
    for (long d = 1; d <= bound; ++d) {
        const int dr = out.remainder.degree();
        if (dr == 0)
            break;
        if (euler_phi(d) > dr)
            continue;
        const IntPolynomial phi_d = cyclotomic(d);
        IntPolynomial q;
        while (try_divide_exact(out.remainder, phi_d, q)) {
            out.remainder = q;
            ++out.cyclotomic_part[d];
        }
    }
    return out;
}

/// Largest m with q^m dividing p exactly over Z[t].
inline int factor_multiplicity(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero())
        throw zero_polynomial();
    if (q.degree() < 1)
        throw constant_divisor();
    int m = 0;
    IntPolynomial rem = p;
    IntPolynomial quot;
    while (try_divide_exact(rem, q, quot)) {
        rem = quot;
        ++m;
    }
    return m;
}

} // namespace cox
