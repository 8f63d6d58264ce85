#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cox/coxeter.hpp"
#include "cox/realroot.hpp"
#include "cox/roots_numeric.hpp"

namespace cox {

inline constexpr double kDefaultRadiusTol = 1e-10;
inline constexpr long double kModulusEps = 1e-8L;

/// cox_{A_m} = t^m + ... + t + 1, with cox_{A_0} = 1.
inline IntPolynomial cox_A(int m) {
    if (m < 0)
        throw parameter_out_of_range("cox_A requires m >= 0");
    return IntPolynomial(std::vector<Int>(static_cast<size_t>(m) + 1, Int(1)));
}

namespace detail {

inline IntPolynomial t_power(int k) { return IntPolynomial::monomial(k); }

inline const IntPolynomial& t_minus_1() {
    static const IntPolynomial p{-1, 1};
    return p;
}

inline const IntPolynomial& t_plus_1() {
    static const IntPolynomial p{1, 1};
    return p;
}

} // namespace detail

/// The F polynomials of the three-arm closed form:
///   F0 = t^{p+q} - cox_{A_{p-1}} cox_{A_{q-1}}
///   F1 = t^{p+q-2}(t-1) - (t^{p-2}+1) cox_{A_{q-1}}
///   F2 = F3 = t^{p+q-4}(t-1)^2 - (t^{p-2}+1)(t^{q-2}+1)
/// Each is also computed in its alternative printed form and the two must
/// agree after exact division.
inline IntPolynomial F_poly(int i, int p, int q) {
    using detail::t_minus_1;
    using detail::t_power;
    if (i < 0 || i > 3)
        throw parameter_out_of_range("F_poly requires i in {0,1,2,3}");
    if (i == 0 && (p < 1 || q < 1))
        throw parameter_out_of_range("F^(0)_{p,q} requires p,q >= 1");
    if (i == 1 && (p < 3 || q < 1))
        throw parameter_out_of_range("F^(1)_{p,q} requires p >= 3, q >= 1");
    if (i >= 2 && (p < 3 || q < 3))
        throw parameter_out_of_range("F^(" + std::to_string(i) + ")_{p,q} requires p,q >= 3");

    IntPolynomial f;
    IntPolynomial alt;
    if (i == 0) {
        f = t_power(p + q) - cox_A(p - 1) * cox_A(q - 1);
        alt = div_exact(t_power(p) * (t_power(q + 2) - t_power(q + 1) * Int(2) + IntPolynomial::one()) +
                            t_power(q) - IntPolynomial::one(),
                        t_minus_1() * t_minus_1());
    } else if (i == 1) {
        f = t_power(p + q - 2) * t_minus_1() - (t_power(p - 2) + IntPolynomial::one()) * cox_A(q - 1);
        alt = div_exact(t_power(p - 2) * (t_power(q + 2) - t_power(q + 1) * Int(2) + IntPolynomial::one()) -
                            t_power(q) + IntPolynomial::one(),
                        t_minus_1());
        // second explicit form, constant corrected to +1 so that t-1 divides
        IntPolynomial alt2 =
            div_exact(t_power(q) * (t_power(p) - t_power(p - 1) * Int(2) - IntPolynomial::one()) +
                          t_power(p - 2) + IntPolynomial::one(),
                      t_minus_1());
        if (alt != alt2)
            throw internal_error("the two explicit forms of F^(1) disagree");
    } else {
        f = t_power(p + q - 4) * t_minus_1() * t_minus_1() -
            (t_power(p - 2) + IntPolynomial::one()) * (t_power(q - 2) + IntPolynomial::one());
        alt = t_power(p - 2) * (t_power(q) - t_power(q - 1) * Int(2) - IntPolynomial::one()) -
              t_power(q - 2) - IntPolynomial::one();
    }
    if (f != alt)
        throw internal_error("F polynomial and its explicit form disagree at i=" +
                             std::to_string(i) + ", p=" + std::to_string(p) +
                             ", q=" + std::to_string(q));
    return f;
}

/// Closed form for the Coxeter polynomial of the three-arm tree:
///   i <= 2:  (t+1)^i / (t-1) * [t^{r+2} F^(i)_{p,q} - (F^(i)_{p,q})*]
///   i == 3:  (t+1)^3 * [t^r F^(3)_{p,q} + (F^(3)_{p,q})*]
/// All divisions are exact; a failed division signals a bug, not bad input.
inline IntPolynomial closed_form_cox(int i, int p, int q, int r) {
    using detail::t_minus_1;
    using detail::t_plus_1;
    if (i < 0 || i > 3)
        throw parameter_out_of_range("closed form requires i in {0,1,2,3}");
    if (i <= 2 && r < 1)
        throw parameter_out_of_range("closed form with i <= 2 requires r >= 1");
    if (i == 3 && r < 3)
        throw parameter_out_of_range("closed form with i = 3 requires r >= 3");
    const IntPolynomial f = F_poly(i, p, q);
    if (i <= 2) {
        IntPolynomial num = f.shifted(r + 2) - f.reciprocal();
        return div_exact(num, t_minus_1()) * t_plus_1().pow(static_cast<unsigned>(i));
    }
    return t_plus_1().pow(3) * (f.shifted(r) + f.reciprocal());
}

namespace detail {

/// Canonical key: D-arms and A-arms each sorted descending, zero A-arms
/// dropped. Arms of the same type permute without changing the tree.
inline SalemSpec canonical_spec(SalemSpec s) {
    std::sort(s.arms.begin(), s.arms.begin() + s.i, std::greater<>());
    std::sort(s.arms.begin() + s.i, s.arms.end(), std::greater<>());
    while (!s.arms.empty() && s.arms.back() == 0)
        s.arms.pop_back();
    if (s.arms.empty())
        s.arms.push_back(0); // keep k >= 1; S^(0)_{0} is the single-vertex join
    return s;
}

inline IntPolynomial recursive_cox_impl(const SalemSpec& spec,
                                        std::map<SalemSpec, IntPolynomial>& memo) {
    const SalemSpec s = canonical_spec(spec);
    if (auto it = memo.find(s); it != memo.end())
        return it->second;
    IntPolynomial out;
    const IntPolynomial t{0, 1};
    if (s.i >= 1 && s.k() >= 2) {
        // cox = (t+1) [ cox S^(i-1)_{p_2,...,p_k,p_1-1} - t cox S^(i-1)_{p_2,...,p_k,p_1-3} ]
        const int p1 = s.arms[0];
        SalemSpec a{s.i - 1, {s.arms.begin() + 1, s.arms.end()}};
        SalemSpec b = a;
        a.arms.push_back(p1 - 1);
        b.arms.push_back(p1 - 3);
        out = t_plus_1() * (recursive_cox_impl(a, memo) - t * recursive_cox_impl(b, memo));
    } else if (s.i == 0 && s.arms[0] >= 2) {
        // cox = (t+1) cox S^(0)_{p_1-1,...} - t cox S^(0)_{p_1-2,...}
        SalemSpec a = s, b = s;
        a.arms[0] -= 1;
        b.arms[0] -= 2;
        out = t_plus_1() * recursive_cox_impl(a, memo) - t * recursive_cox_impl(b, memo);
    } else {
        out = coxeter_polynomial(salem_tree(s));
    }
    memo.emplace(s, out);
    return out;
}

} // namespace detail

/// Coxeter polynomial of S^(i)_{p_1,...,p_k} by the two recursions, down to
/// base cases evaluated on explicit small trees.
inline IntPolynomial recursive_cox(const SalemSpec& spec) {
    spec.validate();
    std::map<SalemSpec, IntPolynomial> memo;
    return detail::recursive_cox_impl(spec, memo);
}

/// G polynomials of the iterated k-arm limit: after growing p_2,...,p_k the
/// spectral radii converge to the dominant root of
///   t^{p_1} - (k-1) t^{p_1-1} - (k-2)      (i != 0)
///   t^{p_1+1} - (k-1) t^{p_1} + (k-2)      (i == 0)
inline IntPolynomial general_limit_polys(int i, int k, int p1) {
    using detail::t_power;
    if (k < 2)
        throw parameter_out_of_range("general limit requires k >= 2");
    if (i < 0 || i > k)
        throw parameter_out_of_range("general limit requires 0 <= i <= k");
    if (p1 < 1 || (i != 0 && p1 < 3))
        throw parameter_out_of_range("general limit requires p1 >= 1 (>= 3 when i != 0)");
    if (i != 0)
        return t_power(p1) - t_power(p1 - 1) * Int(k - 1) - IntPolynomial::constant(k - 2);
    return t_power(p1 + 1) - t_power(p1) * Int(k - 1) + IntPolynomial::constant(k - 2);
}

enum class Verdict { Cyclotomic, Salem, Pisot, Other };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Cyclotomic:
        return "Cyclotomic";
    case Verdict::Salem:
        return "Salem";
    case Verdict::Pisot:
        return "Pisot";
    default:
        return "Other";
    }
}

struct ClassificationReport {
    CyclotomicFactorization factorization;
    Verdict verdict = Verdict::Other;
    RatInterval radius{1, 1};
    RatInterval mahler{1, 1};
    // root location of the non-cyclotomic remainder
    int roots_outside = 0;
    int roots_on_circle = 0;
    int roots_inside = 0;
};

namespace detail {

inline RatInterval approx_interval(long double v, long double slack = 1e-6L) {
    Rational m(static_cast<double>(v));
    Rational d(static_cast<double>(v * slack + 1e-12L));
    return {m - d, m + d};
}

} // namespace detail

/// Certified enclosure of the spectral radius of a monic polynomial:
/// exactly [1,1] when the cyclotomic part is everything, otherwise the
/// isolated dominant real root of the stripped remainder. nullopt when the
/// remainder has no real root above 1 (complex-dominant case).
inline std::optional<RatInterval> spectral_radius_of_poly(const IntPolynomial& p,
                                                          double tol = kDefaultRadiusTol) {
    CyclotomicFactorization f = strip_cyclotomic(p);
    if (f.remainder.degree() == 0)
        return RatInterval{1, 1};
    return largest_real_root_above_one(f.remainder, tol);
}

/// Classification of a monic polynomial per root location: strips cyclotomic
/// factors, counts remainder roots by modulus at working precision, and
/// certifies the dominant real root exactly. Salem/Pisot verdicts describe
/// the remainder's root layout only; irreducibility is not tested.
inline ClassificationReport classify(const IntPolynomial& p, double tol = kDefaultRadiusTol) {
    if (p.is_zero() || !p.is_monic())
        throw not_monic();
    if (p.degree() < 1)
        throw constant_polynomial();

    ClassificationReport rep;
    rep.factorization = strip_cyclotomic(p);
    const IntPolynomial& rem = rep.factorization.remainder;
    if (rem.degree() == 0) {
        rep.verdict = Verdict::Cyclotomic;
        rep.radius = {1, 1};
        rep.mahler = {1, 1};
        return rep;
    }

    const auto roots = complex_roots(rem);
    const RootCounts rc = count_by_modulus(roots, kModulusEps);
    rep.roots_outside = rc.outside;
    rep.roots_on_circle = rc.on_circle;
    rep.roots_inside = rc.inside;
    if (rc.total() != rem.degree())
        throw internal_error("numeric root count does not match remainder degree");
    if (rem.reciprocal() == rem || rem.reciprocal() == -rem) {
        // self-reciprocal remainders pair roots z <-> 1/z
        if (rc.outside != rc.inside)
            throw internal_error("reciprocal pairing violated by numeric root count");
    }

    if (rc.outside == 1) {
        auto rr = largest_real_root_above_one(rem, tol);
        if (!rr)
            throw internal_error("single root outside the unit circle must be real");
        rep.verdict = rc.on_circle > 0 ? Verdict::Salem : Verdict::Pisot;
        rep.radius = *rr;
        rep.mahler = *rr; // one root outside => Mahler measure equals the radius
        return rep;
    }

    rep.verdict = Verdict::Other;
    if (rc.outside == 0) {
        // nothing outside; the full polynomial still has its cyclotomic part on the circle
        if (!rep.factorization.cyclotomic_part.empty())
            rep.radius = {1, 1};
        else
            rep.radius = detail::approx_interval(max_modulus(roots));
        rep.mahler = {1, 1};
        return rep;
    }
    if (auto rr = largest_real_root_above_one(rem, tol);
        rr && static_cast<double>(rr->hi) >= static_cast<double>(max_modulus(roots)) - 1e-9) {
        rep.radius = *rr;
    } else {
        rep.radius = detail::approx_interval(max_modulus(roots));
    }
    long double mm = 1.0L;
    for (const auto& z : roots)
        if (std::abs(z) > 1.0L + kModulusEps)
            mm *= std::abs(z);
    rep.mahler = detail::approx_interval(mm);
    return rep;
}

/// Tree-level classification. A Salem tree is one whose Coxeter polynomial
/// has exactly one root outside the unit circle, whether or not the stripped
/// remainder keeps a root on it, so a Pisot-shaped remainder still reports
/// Salem here (the remainder counts stay available in the report).
inline ClassificationReport classify_tree(const Tree& t, double tol = kDefaultRadiusTol) {
    if (t.is_empty())
        throw empty_tree();
    ClassificationReport rep = classify(coxeter_polynomial(t), tol);
    if (rep.verdict == Verdict::Pisot)
        rep.verdict = Verdict::Salem;
    return rep;
}

/// classify_tree for the S family. These trees are joins of cyclotomic
/// trees, so anything other than Cyclotomic/Salem is a consistency failure.
inline ClassificationReport classify_salem_tree(const SalemSpec& spec,
                                                double tol = kDefaultRadiusTol) {
    ClassificationReport rep = classify_tree(salem_tree(spec), tol);
    if (rep.verdict != Verdict::Cyclotomic && rep.verdict != Verdict::Salem)
        throw internal_error("join of cyclotomic trees classified as " +
                             std::string(to_string(rep.verdict)));
    return rep;
}

/// Spectral radius of the Coxeter transformation of a tree: exactly 1 for
/// cyclotomic trees, else the certified dominant real root of the stripped
/// remainder (which exists for trees).
inline RatInterval spectral_radius_tree(const Tree& t, double tol = kDefaultRadiusTol) {
    if (t.is_empty())
        throw empty_tree();
    auto rho = spectral_radius_of_poly(coxeter_polynomial(t), tol);
    if (!rho)
        throw internal_error("tree Coxeter polynomial has no certified dominant real root");
    return *rho;
}

namespace detail {

inline RatInterval rho_or_throw(const IntPolynomial& p, double tol, const std::string& what) {
    auto rho = spectral_radius_of_poly(p, tol);
    if (!rho)
        throw internal_error("no certified dominant real root for " + what);
    return *rho;
}

} // namespace detail

enum class Arm { p = 0, q = 1, r = 2 };

struct LimitExperimentResult {
    std::vector<int> params; // ascending values of the swept parameter
    std::vector<RatInterval> radii;
    IntPolynomial predicted_limit_poly;
    RatInterval predicted_limit{1, 1};
    bool monotone = false;
    bool increasing = false;    // direction, valid when monotone
    bool inconclusive = false;  // enclosures still overlapped after refinement
    double final_gap = 0.0;     // rigorous upper bound on |rho_last - limit|

    std::string to_table() const {
        auto fmt = [](double v) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", v);
            return std::string(buf);
        };
        std::ostringstream os;
        os << "param radius_lo radius_hi\n";
        for (size_t j = 0; j < params.size(); ++j)
            os << params[j] << ' ' << fmt(static_cast<double>(radii[j].lo)) << ' '
               << fmt(static_cast<double>(radii[j].hi)) << '\n';
        os << "limit_lo " << fmt(static_cast<double>(predicted_limit.lo)) << '\n';
        os << "limit_hi " << fmt(static_cast<double>(predicted_limit.hi)) << '\n';
        os << "final_gap " << fmt(final_gap) << '\n';
        return os.str();
    }
};

namespace detail {

/// Monotonicity from enclosure bounds only. Overlapping neighbours are
/// recomputed at 10x tighter tolerance up to three times; after that the
/// tolerance keeps dropping by 100x per round down to ~1e-33, because
/// consecutive radii in a geometrically convergent family can sit within
/// rho^-r of each other near the tail. Only then is the comparison reported
/// inconclusive. Ties are accepted when both enclosures are the exact point
/// [1,1] (cyclotomic trees).
inline void judge_monotonicity(LimitExperimentResult& out,
                               const std::function<RatInterval(int, double)>& radius_at,
                               double tol) {
    const size_t n = out.radii.size();
    if (n < 2) {
        out.monotone = true;
        out.increasing = true;
        return;
    }
    int up = 0, down = 0, ties = 0;
    for (size_t j = 0; j + 1 < n; ++j) {
        RatInterval a = out.radii[j];
        RatInterval b = out.radii[j + 1];
        double t2 = tol;
        for (int attempt = 0; attempt < 13 && !(a.hi < b.lo) && !(b.hi < a.lo); ++attempt) {
            if (a.is_point() && b.is_point())
                break;
            t2 /= (attempt < 3) ? 10.0 : 100.0;
            a = radius_at(out.params[j], t2);
            b = radius_at(out.params[j + 1], t2);
            out.radii[j] = a;
            out.radii[j + 1] = b;
        }
        if (a.hi < b.lo)
            ++up;
        else if (b.hi < a.lo)
            ++down;
        else if (a.is_point() && b.is_point() && a.lo == b.lo)
            ++ties;
        else {
            out.inconclusive = true;
            return;
        }
    }
    if (up > 0 && down == 0) {
        out.monotone = true;
        out.increasing = true;
    } else if (down > 0 && up == 0) {
        out.monotone = true;
        out.increasing = false;
    } else if (ties == static_cast<int>(n) - 1) {
        out.monotone = true; // constant cyclotomic run
        out.increasing = true;
    }
}

inline double rigorous_gap(const RatInterval& a, const RatInterval& b) {
    Rational g1 = a.hi > b.lo ? a.hi - b.lo : b.lo - a.hi;
    Rational g2 = b.hi > a.lo ? b.hi - a.lo : a.lo - b.hi;
    return static_cast<double>(g1 > g2 ? g1 : g2);
}

} // namespace detail

namespace detail {

inline bool is_d_arm(int i, Arm a) { return static_cast<int>(a) < i; }

/// Limit polynomial of a single-arm limit: growing the last arm converges
/// to the dominant root of F^(i)_{p,q}, growing a D-arm to that of
/// F^(i-1)_{q,r}; any other arm reduces to these through the symmetries of
/// the family (arms of equal type permute).
inline IntPolynomial single_arm_limit_poly(int i, const std::array<int, 3>& arms, Arm g) {
    const int p = arms[0], q = arms[1], r = arms[2];
    switch (g) {
    case Arm::r:
        return (i <= 2) ? F_poly(i, p, q) : F_poly(2, q, p);
    case Arm::p:
        return (i >= 1) ? F_poly(i - 1, q, r) : F_poly(0, q, r);
    default: // Arm::q
        if (i == 0)
            return F_poly(0, p, r);
        return (i <= 2) ? F_poly(1, p, r) : F_poly(2, p, r);
    }
}

} // namespace detail

/// Spectral-radius limit experiment for the three-arm family. `growing`
/// lists the arms sent to infinity, outermost first; multiple limits are
/// iterated, so every inner limit is realized by substituting its predicted
/// limit polynomial and only the outermost parameter is swept over
/// start..max_value. Radii come from the exact closed-form polynomials.
inline LimitExperimentResult limit_experiment(int i, std::array<int, 3> arms,
                                              std::vector<Arm> growing, int start, int max_value,
                                              double tol = kDefaultRadiusTol) {
    if (growing.empty() || growing.size() > 3)
        throw invalid_spec("growing set must name 1..3 arms");
    {
        std::vector<Arm> sorted = growing;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw invalid_spec("growing arms must be distinct");
    }
    if (i < 0 || i > 3)
        throw parameter_out_of_range("i must lie in {0,...,3}");
    if (start > max_value)
        throw invalid_spec("empty parameter range");

    // radius of the swept family member, and the predicted limit polynomial
    std::function<IntPolynomial(int)> member;
    IntPolynomial limit_poly;
    const Arm outer = growing[0];
    if (growing.size() == 1) {
        // sweep the tree family itself along one arm
        member = [=](int v) {
            std::array<int, 3> a = arms;
            a[static_cast<size_t>(outer)] = v;
            return closed_form_cox(i, a[0], a[1], a[2]);
        };
        limit_poly = detail::single_arm_limit_poly(i, arms, outer);
    } else if (growing.size() == 2) {
        // the inner arm is replaced by its limit polynomial, the outer swept;
        // the double limit depends only on the remaining fixed arm
        const Arm inner = growing[1];
        member = [=](int v) {
            std::array<int, 3> a = arms;
            a[static_cast<size_t>(outer)] = v;
            return detail::single_arm_limit_poly(i, a, inner);
        };
        Arm fixed = Arm::p;
        for (Arm a : {Arm::p, Arm::q, Arm::r})
            if (a != outer && a != inner)
                fixed = a;
        const int f = arms[static_cast<size_t>(fixed)];
        limit_poly = detail::is_d_arm(i, fixed) ? general_limit_polys(1, 3, f)
                                                : general_limit_polys(0, 3, f + 1);
    } else {
        // full limit: after the two inner limits only the G family is left
        const bool outer_is_d = detail::is_d_arm(i, outer);
        member = [=](int v) {
            return outer_is_d ? general_limit_polys(1, 3, v) : general_limit_polys(0, 3, v + 1);
        };
        limit_poly = member(max_value);
    }

    LimitExperimentResult out;
    out.predicted_limit_poly = limit_poly;
    out.predicted_limit = (growing.size() == 3)
                              ? RatInterval{2, 2} // k - 1 at k = 3
                              : detail::rho_or_throw(limit_poly, tol, "predicted limit polynomial");
    auto radius_at = [&](int v, double tv) {
        return detail::rho_or_throw(member(v), tv, "family member at parameter " + std::to_string(v));
    };
    for (int v = start; v <= max_value; ++v) {
        out.params.push_back(v);
        out.radii.push_back(radius_at(v, tol));
    }
    detail::judge_monotonicity(out, radius_at, tol);
    out.final_gap = detail::rigorous_gap(out.radii.back(), out.predicted_limit);
    return out;
}

struct MultiplicityCheck {
    std::vector<int> part_multiplicities; // m_i = mult of q in cox of part i
    int total = 0;                        // m = sum m_i
    int min_bound = 0;                    // min_i (m - m_i)
    int actual = 0;                       // mult of q in cox of the join
};

/// Check of the join multiplicity bound: if q^(m_i) divides the Coxeter
/// polynomial of part i, then q^min_i(m - m_i) divides the Coxeter
/// polynomial of the join. Violation is a consistency failure.
inline MultiplicityCheck multiplicity_check(const std::vector<std::pair<Tree, int>>& parts,
                                            const IntPolynomial& q) {
    if (parts.size() < 2)
        throw invalid_spec("multiplicity check requires k >= 2 parts");
    if (q.degree() < 1)
        throw constant_divisor();
    MultiplicityCheck out;
    for (const auto& [t, attach] : parts) {
        (void)attach;
        out.part_multiplicities.push_back(factor_multiplicity(coxeter_polynomial(t), q));
        out.total += out.part_multiplicities.back();
    }
    out.min_bound = out.total;
    for (int mi : out.part_multiplicities)
        out.min_bound = std::min(out.min_bound, out.total - mi);
    out.actual = factor_multiplicity(coxeter_polynomial(join(parts)), q);
    if (out.actual < out.min_bound)
        throw internal_error("join multiplicity bound violated: actual " +
                             std::to_string(out.actual) + " < bound " +
                             std::to_string(out.min_bound));
    return out;
}

} // namespace cox
