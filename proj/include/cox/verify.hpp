#pragma once

#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

#include "cox/salem.hpp"
#include "cox/tree_expr.hpp"

namespace cox::verify {

/// Deterministic indexed parallelism: slot i is computed by exactly one
/// worker and aggregation happens in index order afterwards.
template <typename Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (int w = 0; w < std::min(jobs, count); ++w) {
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error)
                        error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

/// Uniform random labeled tree on n vertices via a random Pruefer sequence.
inline Tree random_tree(std::mt19937_64& rng, int n) {
    if (n <= 1)
        return path(n);
    if (n == 2)
        return path(2);
    std::vector<int> pruefer(static_cast<size_t>(n - 2));
    std::uniform_int_distribution<int> pick(1, n);
    for (auto& x : pruefer)
        x = pick(rng);
    std::vector<int> deg(static_cast<size_t>(n) + 1, 1);
    for (int x : pruefer)
        ++deg[static_cast<size_t>(x)];
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[static_cast<size_t>(v)] == 1)
            leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int x : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--deg[static_cast<size_t>(x)] == 1)
            leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Tree(n, std::move(edges));
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

struct CheckResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

namespace detail {

struct Failures {
    std::mutex mu;
    std::vector<std::string> items;

    void add(std::string s) {
        std::lock_guard<std::mutex> lock(mu);
        if (items.size() < 8)
            items.push_back(std::move(s));
    }
    bool empty() {
        std::lock_guard<std::mutex> lock(mu);
        return items.empty();
    }
    std::string summary() {
        std::lock_guard<std::mutex> lock(mu);
        std::sort(items.begin(), items.end()); // stable text across thread schedules
        std::string s;
        for (const auto& it : items) {
            if (!s.empty())
                s += "; ";
            s += it;
        }
        return s;
    }
};

inline IntPolynomial expected_cox_D(int n) {
    // t^n + t^{n-1} + t + 1
    IntPolynomial p = IntPolynomial::monomial(n) + IntPolynomial::monomial(n - 1);
    return p + IntPolynomial{1, 1};
}

inline IntPolynomial expected_cox_euclid_D(int n) {
    // (t^{n-2} - 1)(t - 1)(t + 1)^2
    return (IntPolynomial::monomial(n - 2) - IntPolynomial::one()) * IntPolynomial{-1, 1} *
           IntPolynomial{1, 1}.pow(2);
}

inline IntPolynomial expected_cox_E(int n) {
    // [t^{n-2}(t^3 - t - 1) + t^3 + t^2 - 1] / (t - 1)
    IntPolynomial num = IntPolynomial::monomial(n - 2) * IntPolynomial{-1, -1, 0, 1} +
                        IntPolynomial{-1, 0, 1, 1};
    return div_exact(num, IntPolynomial{-1, 1});
}

} // namespace detail

/// 1. Closed formulas for the classical families, via the matrix route.
inline CheckResult check_formula_reproduction(int jobs) {
    detail::Failures bad;
    struct Item {
        char kind;
        int n;
    };
    std::vector<Item> items;
    for (int n = 1; n <= 50; ++n)
        items.push_back({'A', n});
    for (int n = 4; n <= 30; ++n)
        items.push_back({'D', n});
    for (int n = 4; n <= 20; ++n)
        items.push_back({'d', n});
    for (int n = 4; n <= 20; ++n)
        items.push_back({'E', n});
    auto t0 = std::chrono::steady_clock::now();
    parallel_for(static_cast<int>(items.size()), jobs, [&](int idx) {
        auto [kind, n] = items[static_cast<size_t>(idx)];
        IntPolynomial got, want;
        switch (kind) {
        case 'A':
            got = coxeter_polynomial(path(n));
            want = cox_A(n);
            break;
        case 'D':
            got = coxeter_polynomial(dynkin_D(n));
            want = detail::expected_cox_D(n);
            break;
        case 'd':
            got = coxeter_polynomial(euclidean_D(n));
            want = detail::expected_cox_euclid_D(n);
            break;
        default:
            got = coxeter_polynomial(dynkin_E(n));
            want = detail::expected_cox_E(n);
            break;
        }
        if (got != want)
            bad.add(std::string(1, kind) + std::to_string(n));
    });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{1, "formula reproduction (A_n, D_n, ~D_n, E_n)", false, "", secs};
    r.pass = bad.empty() && secs < 5.0;
    r.detail = bad.empty() ? (std::to_string(items.size()) + " formulas exact") : bad.summary();
    if (bad.empty() && secs >= 5.0)
        r.detail += "; over 5 s budget";
    return r;
}

/// 2. cox(E_10) = closed_form(0;1,2,6) = the Lehmer polynomial.
inline CheckResult check_lehmer_identity(int) {
    auto t0 = std::chrono::steady_clock::now();
    const IntPolynomial lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
    const IntPolynomial via_tree = coxeter_polynomial(dynkin_E(10));
    const IntPolynomial via_closed = closed_form_cox(0, 1, 2, 6);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{2, "Lehmer identity for E_10", via_tree == lehmer && via_closed == lehmer,
                  via_tree.to_coeff_string(), secs};
    return r;
}

/// 3. Matrix, reflection-product and splitting-edge routes agree exactly.
inline CheckResult check_triple_oracle(int jobs) {
    detail::Failures bad;
    std::mt19937_64 seeder(20240311);
    std::vector<Tree> trees;
    std::uniform_int_distribution<int> size(1, 12);
    for (int c = 0; c < 300; ++c)
        trees.push_back(random_tree(seeder, size(seeder)));
    auto t0 = std::chrono::steady_clock::now();
    parallel_for(static_cast<int>(trees.size()), jobs, [&](int idx) {
        const Tree& t = trees[static_cast<size_t>(idx)];
        IntPolynomial a = coxeter_polynomial(t);
        if (coxeter_polynomial_via_reflections(t) != a)
            bad.add("reflections@" + std::to_string(idx));
        if (coxeter_polynomial_via_split(t) != a)
            bad.add("split@" + std::to_string(idx));
    });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{3, "triple-oracle agreement on 300 random trees", false, "", secs};
    r.pass = bad.empty() && secs < 30.0;
    r.detail = bad.empty() ? "3 routes x 300 trees exact" : bad.summary();
    if (bad.empty() && secs >= 30.0)
        r.detail += "; over 30 s budget";
    return r;
}

/// 4. Closed form equals the matrix route on the whole i,p,q,r <= 8 grid.
inline CheckResult check_closed_form_grid(int jobs) {
    std::vector<std::array<int, 4>> grid;
    for (int i = 0; i <= 3; ++i)
        for (int p = (i >= 1 ? 3 : 1); p <= 8; ++p)
            for (int q = (i >= 2 ? 3 : 1); q <= 8; ++q)
                for (int r = (i >= 3 ? 3 : 1); r <= 8; ++r)
                    grid.push_back({i, p, q, r});
    detail::Failures bad;
    auto t0 = std::chrono::steady_clock::now();
    parallel_for(static_cast<int>(grid.size()), jobs, [&](int idx) {
        auto [i, p, q, r] = grid[static_cast<size_t>(idx)];
        SalemSpec spec{i, {p, q, r}};
        if (closed_form_cox(i, p, q, r) != coxeter_polynomial(salem_tree(spec)))
            bad.add(spec.to_string());
    });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{4, "closed form vs matrix route on the three-arm grid", bad.empty(),
                  bad.empty() ? std::to_string(grid.size()) + " specs exact" : bad.summary(), secs};
    return r;
}

/// 5. The recursion equals the matrix route for k <= 4, p_j <= 6.
inline CheckResult check_recursion_grid(int jobs) {
    std::vector<SalemSpec> grid;
    for (int k = 1; k <= 4; ++k) {
        std::vector<int> arms(static_cast<size_t>(k));
        for (int i = 0; i <= k; ++i) {
            // odometer over valid arm values
            std::function<void(int)> rec = [&](int j) {
                if (j == k) {
                    grid.push_back(SalemSpec{i, arms});
                    return;
                }
                int lo = j < i ? 3 : 0;
                for (int v = lo; v <= 6; ++v) {
                    arms[static_cast<size_t>(j)] = v;
                    rec(j + 1);
                }
            };
            rec(0);
        }
    }
    detail::Failures bad;
    auto t0 = std::chrono::steady_clock::now();
    parallel_for(static_cast<int>(grid.size()), jobs, [&](int idx) {
        const SalemSpec& spec = grid[static_cast<size_t>(idx)];
        if (recursive_cox(spec) != coxeter_polynomial(salem_tree(spec)))
            bad.add(spec.to_string());
    });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{5, "recursion vs matrix route for k <= 4", bad.empty(),
                  bad.empty() ? std::to_string(grid.size()) + " specs exact" : bad.summary(), secs};
    return r;
}

/// 6. The splitting-edge identity holds at every edge of random trees.
inline CheckResult check_split_identity(int jobs) {
    std::mt19937_64 seeder(777001);
    std::vector<Tree> trees;
    std::uniform_int_distribution<int> size(2, 12);
    for (int c = 0; c < 100; ++c)
        trees.push_back(random_tree(seeder, size(seeder)));
    detail::Failures bad;
    const IntPolynomial t_var{0, 1};
    auto t0 = std::chrono::steady_clock::now();
    parallel_for(static_cast<int>(trees.size()), jobs, [&](int idx) {
        const Tree& t = trees[static_cast<size_t>(idx)];
        const IntPolynomial whole = coxeter_polynomial(t);
        for (const auto& [u, v] : t.edges()) {
            EdgeSplit es = split_edge(t, u, v);
            IntPolynomial rhs = coxeter_polynomial(es.R) * coxeter_polynomial(es.S) -
                                t_var * coxeter_polynomial(es.R_tilde) *
                                    coxeter_polynomial(es.S_tilde);
            if (rhs != whole) {
                bad.add("tree " + std::to_string(idx) + " edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
                return;
            }
        }
    });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{6, "splitting-edge identity at every edge of 100 random trees", bad.empty(),
                  bad.empty() ? "all edges exact" : bad.summary(), secs};
    return r;
}

/// 7. Invariant suite on the random-tree corpus.
inline CheckResult check_invariant_suite(int jobs) {
    std::mt19937_64 seeder(424242);
    std::vector<Tree> trees;
    std::uniform_int_distribution<int> size(1, 12);
    for (int c = 0; c < 60; ++c)
        trees.push_back(random_tree(seeder, size(seeder)));
    std::vector<std::vector<std::vector<int>>> perms(trees.size());
    for (size_t i = 0; i < trees.size(); ++i)
        for (int k = 0; k < 10; ++k)
            perms[i].push_back(random_permutation(seeder, trees[i].vertex_count()));
    detail::Failures bad;
    auto t0 = std::chrono::steady_clock::now();
    parallel_for(static_cast<int>(trees.size()), jobs, [&](int idx) {
        const Tree& t = trees[static_cast<size_t>(idx)];
        const int n = t.vertex_count();
        const IntPolynomial cx = coxeter_polynomial(t);
        if (!cx.is_self_reciprocal())
            bad.add("self-reciprocity@" + std::to_string(idx));
        if (cx[0] != 1 || !cx.is_monic() || cx.degree() != n)
            bad.add("cox shape@" + std::to_string(idx));
        for (const auto& perm : perms[static_cast<size_t>(idx)])
            if (coxeter_polynomial(t.relabeled(perm)) != cx) {
                bad.add("enumeration@" + std::to_string(idx));
                break;
            }
        if (!is_bipartite_symmetric_spectrum(t))
            bad.add("chi parity@" + std::to_string(idx));
        // reflection relations: sigma_i^2 = 1, (sigma_i sigma_j)^{2,3} = 1
        const IntMatrix id = IntMatrix::identity(n);
        auto adj = adjacency_matrix(t);
        for (int i = 1; i <= n; ++i) {
            IntMatrix si = reflection_matrix(t, i);
            if (si * si != id) {
                bad.add("sigma^2@" + std::to_string(idx));
                break;
            }
            for (int j = i + 1; j <= n; ++j) {
                IntMatrix prod = si * reflection_matrix(t, j);
                unsigned order = adj(i - 1, j - 1) == 1 ? 3 : 2;
                if (prod.pow(order) != id) {
                    bad.add("braid@" + std::to_string(idx));
                    i = n + 1;
                    break;
                }
            }
        }
    });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{7, "invariant suite (reciprocity, cox(0)=1, enumeration, parity, reflections)",
                  bad.empty(), bad.empty() ? "60 trees, 10 permutations each" : bad.summary(),
                  secs};
    return r;
}

/// 8. Verdicts of the known cyclotomic and Salem members, and the E_10 radius.
inline CheckResult check_classification(int) {
    detail::Failures bad;
    auto t0 = std::chrono::steady_clock::now();
    auto expect = [&](SalemSpec spec, Verdict want) {
        ClassificationReport rep = classify_salem_tree(spec, 1e-10);
        if (rep.verdict != want)
            bad.add(spec.to_string() + " -> " + to_string(rep.verdict));
        if (want == Verdict::Salem && rep.roots_outside != 1)
            bad.add(spec.to_string() + " outside-count " + std::to_string(rep.roots_outside));
    };
    expect(SalemSpec{0, {2, 2, 2}}, Verdict::Cyclotomic);
    expect(SalemSpec{0, {1, 3, 3}}, Verdict::Cyclotomic);
    expect(SalemSpec{0, {1, 2, 5}}, Verdict::Cyclotomic);
    expect(SalemSpec{0, {1, 2, 6}}, Verdict::Salem);
    expect(SalemSpec{0, {3, 3, 3}}, Verdict::Salem);
    RatInterval rho = spectral_radius_tree(dynkin_E(10), 1e-12);
    if (std::abs(rho.mid() - 1.176280818) > 1e-9 || !(rho.width() <= Rational(1e-12)))
        bad.add("E_10 radius " + std::to_string(rho.mid()));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{8, "classification of the known cyclotomic/Salem specs and the E_10 radius", bad.empty(),
                  bad.empty() ? "verdicts and radius as published" : bad.summary(), secs};
    return r;
}

/// 9. Limit convergence: growing the A-side increases the radius toward
/// rho(F) with the stated gap; growing the D-side decreases it.
inline CheckResult check_convergence(int jobs) {
    detail::Failures bad;
    auto t0 = std::chrono::steady_clock::now();
    struct Case {
        int i;
        std::array<int, 3> arms;
        Arm grow;
        int start, stop;
        bool want_increasing;
        bool gap_bound; // enforce final gap < 1e-3
    };
    std::vector<Case> cases = {
        {0, {1, 2, 0}, Arm::r, 5, 60, true, true},
        {1, {3, 2, 0}, Arm::r, 5, 60, true, true},
        {2, {3, 3, 0}, Arm::r, 5, 60, true, true},
        {1, {0, 2, 2}, Arm::p, 3, 20, false, false},
        {2, {0, 3, 2}, Arm::p, 3, 20, false, false},
        {3, {0, 3, 3}, Arm::p, 3, 20, false, false},
    };
    parallel_for(static_cast<int>(cases.size()), jobs, [&](int idx) {
        const Case& c = cases[static_cast<size_t>(idx)];
        LimitExperimentResult res =
            limit_experiment(c.i, c.arms, {c.grow}, c.start, c.stop, 1e-10);
        std::string tag = "i=" + std::to_string(c.i) + (c.grow == Arm::r ? " grow r" : " grow p");
        if (res.inconclusive || !res.monotone)
            bad.add(tag + " not enclosure-separated");
        else if (res.increasing != c.want_increasing)
            bad.add(tag + " wrong direction");
        if (c.gap_bound && res.final_gap >= 1e-3)
            bad.add(tag + " gap " + std::to_string(res.final_gap));
    });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{9, "radius convergence and monotone directions", false, "", secs};
    r.pass = bad.empty() && secs < 120.0;
    r.detail = bad.empty() ? "6 parameter sweeps separated and convergent" : bad.summary();
    if (bad.empty() && secs >= 120.0)
        r.detail += "; over 2 min budget";
    return r;
}

/// 10. Desk-scale brackets for the k-1 limit of the full family. The
/// radii run within ~2^-40 of the limit, so the enclosures must be tighter
/// than that to stay strictly inside the bracket.
inline CheckResult check_limit_brackets(int) {
    detail::Failures bad;
    auto t0 = std::chrono::steady_clock::now();
    auto rho3 = spectral_radius_of_poly(closed_form_cox(0, 40, 40, 40), 1e-18);
    if (!rho3 || !(rho3->lo > Rational(19, 10) && rho3->hi < Rational(2)))
        bad.add("rho(S0_40,40,40) = " + (rho3 ? std::to_string(rho3->mid()) : "none"));
    auto rho4 = spectral_radius_of_poly(recursive_cox(SalemSpec{0, {30, 30, 30, 30}}), 1e-18);
    if (!rho4 || !(rho4->lo > Rational(285, 100) && rho4->hi < Rational(3)))
        bad.add("rho(S0 k=4 arms 30) = " + (rho4 ? std::to_string(rho4->mid()) : "none"));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{10, "spectral-radius brackets near k-1", bad.empty(),
                  bad.empty() ? "both radii inside the stated brackets" : bad.summary(), secs};
    return r;
}

/// 11. The join multiplicity bound, at the two-~D_4 join and at random.
inline CheckResult check_multiplicity(int jobs) {
    detail::Failures bad;
    auto t0 = std::chrono::steady_clock::now();
    {
        Tree dt4 = euclidean_D(4); // center is vertex 3
        MultiplicityCheck mc = multiplicity_check({{dt4, 3}, {dt4, 3}}, IntPolynomial{-1, 1});
        if (mc.part_multiplicities != std::vector<int>{2, 2} || mc.min_bound != 2 || mc.actual != 2)
            bad.add("two ~D_4: bound " + std::to_string(mc.min_bound) + " actual " +
                    std::to_string(mc.actual));
    }
    const std::vector<IntPolynomial> witnesses = {
        IntPolynomial{-1, 1}, IntPolynomial{1, 1}, cyclotomic(3), cyclotomic(4), cyclotomic(6)};
    std::mt19937_64 seeder(90210);
    struct Item {
        std::vector<std::pair<Tree, int>> parts;
        size_t witness;
    };
    std::vector<Item> items;
    std::uniform_int_distribution<int> nparts(2, 4), size(1, 6), wit(0, 4);
    for (int c = 0; c < 50; ++c) {
        Item item;
        int k = nparts(seeder);
        for (int j = 0; j < k; ++j) {
            Tree t = random_tree(seeder, size(seeder));
            std::uniform_int_distribution<int> at(1, t.vertex_count());
            int attach = at(seeder);
            item.parts.emplace_back(std::move(t), attach);
        }
        item.witness = static_cast<size_t>(wit(seeder));
        items.push_back(std::move(item));
    }
    parallel_for(static_cast<int>(items.size()), jobs, [&](int idx) {
        const Item& item = items[static_cast<size_t>(idx)];
        MultiplicityCheck mc = multiplicity_check(item.parts, witnesses[item.witness]);
        if (mc.actual < mc.min_bound)
            bad.add("join " + std::to_string(idx));
    });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{11, "join multiplicity bound (two ~D_4 diagrams + 50 random joins)", bad.empty(),
                  bad.empty() ? "bound respected everywhere" : bad.summary(), secs};
    return r;
}

/// 12. Every stripped F^(i)_{p,q} is Pisot-shaped: exactly one root outside,
/// none near the circle, cross-checked through the reciprocal.
inline CheckResult check_pisot_certification(int jobs) {
    std::vector<std::array<int, 3>> grid;
    for (int i = 0; i <= 2; ++i)
        for (int p = (i >= 1 ? 3 : 1); p <= 6; ++p)
            for (int q = (i >= 2 ? 3 : 1); q <= 6; ++q)
                grid.push_back({i, p, q});
    detail::Failures bad;
    auto t0 = std::chrono::steady_clock::now();
    parallel_for(static_cast<int>(grid.size()), jobs, [&](int idx) {
        auto [i, p, q] = grid[static_cast<size_t>(idx)];
        std::string tag =
            "F(" + std::to_string(i) + ";" + std::to_string(p) + "," + std::to_string(q) + ")";
        CyclotomicFactorization f = strip_cyclotomic(F_poly(i, p, q));
        if (f.remainder.degree() == 0) {
            // the only fully cyclotomic member: the D_n family at (0,1,1)
            if (!(i == 0 && p == 1 && q == 1))
                bad.add(tag + " unexpectedly cyclotomic");
            return;
        }
        auto roots = complex_roots(f.remainder);
        RootCounts rc = count_by_modulus(roots, kModulusEps);
        if (rc.outside != 1)
            bad.add(tag + " outside=" + std::to_string(rc.outside));
        if (rc.on_circle != 0)
            bad.add(tag + " on-circle=" + std::to_string(rc.on_circle));
        RootCounts mirror = count_by_modulus(complex_roots(f.remainder.reciprocal()), kModulusEps);
        if (mirror.inside != rc.outside || mirror.outside != rc.inside)
            bad.add(tag + " reciprocal pairing mismatch");
    });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult r{12, "Pisot certification of the stripped F polynomials", bad.empty(),
                  bad.empty() ? std::to_string(grid.size()) + " pairs certified" : bad.summary(),
                  secs};
    return r;
}

inline std::vector<std::string> suite_names() {
    return {"formulas",   "lehmer", "triple",         "closed-form-grid", "recursion-grid", "split",
            "invariants", "classification", "convergence", "brackets",   "multiplicity", "pisot"};
}

inline CheckResult run_suite(const std::string& name, int jobs) {
    if (name == "formulas")
        return check_formula_reproduction(jobs);
    if (name == "lehmer")
        return check_lehmer_identity(jobs);
    if (name == "triple")
        return check_triple_oracle(jobs);
    if (name == "closed-form-grid")
        return check_closed_form_grid(jobs);
    if (name == "recursion-grid")
        return check_recursion_grid(jobs);
    if (name == "split")
        return check_split_identity(jobs);
    if (name == "invariants")
        return check_invariant_suite(jobs);
    if (name == "classification")
        return check_classification(jobs);
    if (name == "convergence")
        return check_convergence(jobs);
    if (name == "brackets")
        return check_limit_brackets(jobs);
    if (name == "multiplicity")
        return check_multiplicity(jobs);
    if (name == "pisot")
        return check_pisot_certification(jobs);
    throw invalid_spec("unknown verification suite '" + name + "'");
}

inline std::vector<CheckResult> run_all(int jobs) {
    std::vector<CheckResult> out;
    for (const std::string& name : suite_names())
        out.push_back(run_suite(name, jobs));
    return out;
}

} // namespace cox::verify
