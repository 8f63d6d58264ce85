#include <catch2/catch_amalgamated.hpp>

#include "cox/salem.hpp"

using namespace cox;

namespace {
const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
const IntPolynomial kTm1{-1, 1};
const IntPolynomial kTp1{1, 1};

bool contains(const RatInterval& iv, double v) {
    return static_cast<double>(iv.lo) <= v && v <= static_cast<double>(iv.hi);
}
} // namespace

TEST_CASE("F polynomials") {
    CHECK(F_poly(0, 1, 1) == IntPolynomial{-1, 0, 1});
    CHECK(F_poly(0, 2, 1) == IntPolynomial{-1, -1, 0, 1}); // t^3 - (t+1)
    // F^(2)_{3,3} = t^2(t-1)^2 - (t+1)^2
    CHECK(F_poly(2, 3, 3) ==
          IntPolynomial{0, 0, 1} * kTm1.pow(2) - kTp1.pow(2));
    CHECK(F_poly(3, 3, 3) == F_poly(2, 3, 3));
    CHECK_THROWS_AS(F_poly(0, 0, 1), parameter_out_of_range);
    CHECK_THROWS_AS(F_poly(1, 2, 1), parameter_out_of_range);
    CHECK_THROWS_AS(F_poly(2, 3, 2), parameter_out_of_range);
    CHECK_THROWS_AS(F_poly(4, 3, 3), parameter_out_of_range);
}

TEST_CASE("both printed F forms agree up to p,q = 12") {
    // F_poly cross-checks the explicit forms internally and throws on mismatch
    for (int i = 0; i <= 2; ++i)
        for (int p = (i >= 1 ? 3 : 1); p <= 12; ++p)
            for (int q = (i >= 2 ? 3 : 1); q <= 12; ++q)
                CHECK_NOTHROW(F_poly(i, p, q));
}

TEST_CASE("closed form") {
    CHECK(closed_form_cox(0, 1, 1, 1) == IntPolynomial{1, 1, 0, 1, 1}); // cox_{D_4}
    CHECK(closed_form_cox(0, 1, 2, 6) == kLehmer);
    // cox_{~D_6} = (t^4-1)(t-1)(t+1)^2
    CHECK(closed_form_cox(1, 4, 1, 1) ==
          (IntPolynomial::monomial(4) - IntPolynomial::one()) * kTm1 * kTp1.pow(2));
    CHECK_THROWS_AS(closed_form_cox(0, 1, 1, 0), parameter_out_of_range);
    CHECK_THROWS_AS(closed_form_cox(3, 3, 3, 2), parameter_out_of_range);
}

TEST_CASE("alternative closed form for i >= 1") {
    // cox S^(i)_{p,q,r} = (t+1)^i [ t^p F^(i-1)_{q,r} + (F^(i-1)_{q,r})* ]
    for (int i = 1; i <= 3; ++i)
        for (int p = 3; p <= 6; ++p)
            for (int q = (i >= 2 ? 3 : 1); q <= 6; ++q)
                for (int r = (i >= 3 ? 3 : 1); r <= 6; ++r) {
                    IntPolynomial f = F_poly(i - 1, q, r);
                    IntPolynomial alt = kTp1.pow(static_cast<unsigned>(i)) *
                                        (f.shifted(p) + f.reciprocal());
                    CHECK(alt == closed_form_cox(i, p, q, r));
                }
}

TEST_CASE("recursion") {
    // S^(0)_{2,1,1} is D_5: (t+1) cox_{D_4} - t cox_{A_3} = t^5+t^4+t+1
    IntPolynomial d5 = recursive_cox(SalemSpec{0, {2, 1, 1}});
    CHECK(d5 == IntPolynomial{1, 1, 0, 0, 1, 1});
    CHECK(d5 == coxeter_polynomial(salem_tree(SalemSpec{0, {2, 1, 1}})));
    CHECK(d5 == kTp1 * IntPolynomial{1, 1, 0, 1, 1} -
                    IntPolynomial{0, 1} * IntPolynomial{1, 1, 1, 1});

    CHECK(recursive_cox(SalemSpec{1, {4, 1, 1}}) == closed_form_cox(1, 4, 1, 1));
    // base case: S^(0)_{1,1} is the path A_3
    CHECK(recursive_cox(SalemSpec{0, {1, 1}}) == IntPolynomial{1, 1, 1, 1});
    CHECK_THROWS_AS(recursive_cox(SalemSpec{1, {1, 1}}), invalid_spec);
}

TEST_CASE("recursion matches the matrix route on a small grid") {
    for (int i = 0; i <= 3; ++i)
        for (int p = (i >= 1 ? 3 : 0); p <= 5; ++p)
            for (int q = (i >= 2 ? 3 : 0); q <= 5; ++q)
                for (int r = (i >= 3 ? 3 : 0); r <= 5; ++r) {
                    SalemSpec s{i, {p, q, r}};
                    CHECK(recursive_cox(s) == coxeter_polynomial(salem_tree(s)));
                }
}

TEST_CASE("general limit polynomials") {
    CHECK(general_limit_polys(1, 3, 5) == IntPolynomial{-1, 0, 0, 0, -2, 1});
    CHECK(general_limit_polys(0, 3, 6) == IntPolynomial{1, 0, 0, 0, 0, 0, -2, 1});
    CHECK(general_limit_polys(2, 4, 5) == IntPolynomial{-2, 0, 0, 0, -3, 1});
    CHECK_THROWS_AS(general_limit_polys(0, 1, 4), parameter_out_of_range);
    CHECK_THROWS_AS(general_limit_polys(1, 3, 2), parameter_out_of_range);
}

TEST_CASE("arm-type symmetries of the family") {
    // arms of equal type permute: A-arms for i=1, D-arms for i=2, all for i=3
    for (int p = 3; p <= 6; ++p)
        for (int q = 1; q <= 4; ++q)
            for (int r = 1; r <= 4; ++r)
                CHECK(closed_form_cox(1, p, q, r) == closed_form_cox(1, p, r, q));
    for (int p = 3; p <= 6; ++p)
        for (int q = 3; q <= 6; ++q)
            for (int r = 1; r <= 4; ++r)
                CHECK(closed_form_cox(2, p, q, r) == closed_form_cox(2, q, p, r));
    for (int p = 3; p <= 5; ++p)
        for (int q = 3; q <= 5; ++q)
            for (int r = 3; r <= 5; ++r) {
                CHECK(closed_form_cox(3, p, q, r) == closed_form_cox(3, r, q, p));
                CHECK(closed_form_cox(3, p, q, r) == closed_form_cox(3, q, p, r));
            }
    // and the D-arm of S^(1) does not exchange with an A-arm
    CHECK(closed_form_cox(1, 4, 1, 3) != closed_form_cox(1, 3, 1, 4));
}

TEST_CASE("classify polynomials") {
    auto d4 = classify(IntPolynomial{1, 1, 0, 1, 1});
    CHECK(d4.verdict == Verdict::Cyclotomic);
    CHECK(d4.radius.lo == 1);
    CHECK(d4.radius.hi == 1);

    auto lehmer = classify(kLehmer);
    CHECK(lehmer.verdict == Verdict::Salem);
    CHECK(lehmer.roots_outside == 1);
    CHECK(lehmer.roots_on_circle == 8);
    CHECK(contains(lehmer.radius, 1.176280818259917));
    CHECK(contains(lehmer.mahler, 1.176280818259917));

    // F^(0)_{1,2} = t^3 - t - 1: the plastic number is a Pisot number
    auto plastic = classify(F_poly(0, 1, 2));
    CHECK(plastic.verdict == Verdict::Pisot);
    CHECK(plastic.roots_on_circle == 0);
    CHECK(contains(plastic.radius, 1.324717957244746));

    CHECK_THROWS_AS(classify(IntPolynomial{1, 2}), not_monic);
    CHECK_THROWS_AS(classify(IntPolynomial{1}), constant_polynomial);
    CHECK_THROWS_AS(classify(IntPolynomial{}), not_monic);
}

TEST_CASE("classify trees") {
    CHECK(classify_salem_tree(SalemSpec{0, {2, 2, 2}}).verdict == Verdict::Cyclotomic);
    CHECK(classify_salem_tree(SalemSpec{0, {1, 2, 5}}).verdict == Verdict::Cyclotomic);
    // the k = i = 2 family is cyclotomic: S^(2)_{p,q} is the diagram ~D_{p+q}
    for (int p = 3; p <= 6; ++p)
        for (int q = 3; q <= 6; ++q) {
            CHECK(classify_salem_tree(SalemSpec{2, {p, q}}).verdict == Verdict::Cyclotomic);
            CHECK(coxeter_polynomial(salem_tree(SalemSpec{2, {p, q}})) ==
                  coxeter_polynomial(euclidean_D(p + q)));
        }
    auto s = classify_salem_tree(SalemSpec{0, {1, 2, 6}});
    CHECK(s.verdict == Verdict::Salem);
    CHECK(s.roots_outside == 1);

    // the 5-star: one root outside but no remainder root on the circle;
    // tree-level verdict is Salem, polynomial-level verdict is Pisot
    Tree star5 = salem_tree(SalemSpec{0, {1, 1, 1, 1, 1}});
    auto tree_level = classify_tree(star5);
    CHECK(tree_level.verdict == Verdict::Salem);
    CHECK(tree_level.roots_on_circle == 0);
    auto poly_level = classify(coxeter_polynomial(star5));
    CHECK(poly_level.verdict == Verdict::Pisot);
    CHECK(contains(poly_level.radius, 2.618033988749895)); // golden ratio squared

    CHECK_THROWS_AS(classify_tree(Tree{}), empty_tree);
}

TEST_CASE("spectral radius of trees") {
    RatInterval a10 = spectral_radius_tree(path(10));
    CHECK(a10.lo == 1);
    CHECK(a10.hi == 1);

    RatInterval e10 = spectral_radius_tree(dynkin_E(10), 1e-11);
    CHECK(contains(e10, 1.176280818259917));
    CHECK(e10.width() <= Rational(1e-11));

    RatInterval big = spectral_radius_tree(salem_tree(SalemSpec{0, {10, 10, 10}}));
    CHECK(big.lo > 1);
    CHECK(big.hi < 2);
}

TEST_CASE("limit experiment, single growing arm") {
    LimitExperimentResult res = limit_experiment(0, {1, 2, 0}, {Arm::r}, 5, 20, 1e-10);
    REQUIRE(res.params.size() == 16);
    CHECK(res.monotone);
    CHECK(res.increasing);
    CHECK_FALSE(res.inconclusive);
    // limit is rho(F^(0)_{1,2}) = rho(t^3 - t - 1), the plastic number
    CHECK(res.predicted_limit_poly == F_poly(0, 1, 2));
    CHECK(contains(res.predicted_limit, 1.324717957244746));
    CHECK(res.final_gap < 1e-2);
    // every radius sits below the limit
    for (const auto& iv : res.radii)
        CHECK(iv.hi < res.predicted_limit.hi);
}

TEST_CASE("limit experiment, D-side decreases") {
    LimitExperimentResult res = limit_experiment(1, {0, 2, 2}, {Arm::p}, 3, 12, 1e-10);
    CHECK(res.monotone);
    CHECK_FALSE(res.increasing);
    CHECK(res.predicted_limit_poly == F_poly(0, 2, 2));
}

TEST_CASE("limit experiment, iterated limits") {
    // grow q then p for i=1: limit is rho(t^{r+2} - 2t^{r+1} + 1) at r=2
    LimitExperimentResult res = limit_experiment(1, {0, 0, 2}, {Arm::p, Arm::q}, 3, 14, 1e-10);
    CHECK(res.predicted_limit_poly == general_limit_polys(0, 3, 3));
    CHECK(res.monotone);

    // grow r then q for i=2 with p=3: limit is rho(t^3 - 2t^2 - 1)
    LimitExperimentResult res2 = limit_experiment(2, {3, 0, 0}, {Arm::q, Arm::r}, 3, 14, 1e-10);
    CHECK(res2.predicted_limit_poly == general_limit_polys(1, 3, 3));

    // all three arms: the limit is k-1 = 2 exactly
    LimitExperimentResult res3 = limit_experiment(0, {0, 0, 0}, {Arm::p, Arm::q, Arm::r}, 2, 30);
    CHECK(res3.predicted_limit.lo == 2);
    CHECK(res3.predicted_limit.hi == 2);
    CHECK(res3.monotone);
    CHECK(res3.increasing);
    CHECK(res3.final_gap < 0.01);
}

TEST_CASE("limit experiment serialization") {
    LimitExperimentResult res = limit_experiment(0, {1, 2, 0}, {Arm::r}, 5, 7, 1e-10);
    std::string table = res.to_table();
    CHECK(table.find("param radius_lo radius_hi\n") == 0);
    CHECK(table.find("\n5 ") != std::string::npos);
    CHECK(table.find("limit_lo ") != std::string::npos);
    CHECK(table.find("limit_hi ") != std::string::npos);
    CHECK(table.find("final_gap ") != std::string::npos);
}

TEST_CASE("limit experiment validation") {
    CHECK_THROWS_AS(limit_experiment(0, {1, 2, 0}, {}, 5, 10), invalid_spec);
    CHECK_THROWS_AS(limit_experiment(0, {1, 2, 0}, {Arm::r, Arm::r}, 5, 10), invalid_spec);
    CHECK_THROWS_AS(limit_experiment(0, {1, 2, 0}, {Arm::r}, 10, 5), invalid_spec);
    CHECK_THROWS_AS(limit_experiment(5, {1, 2, 0}, {Arm::r}, 5, 10), parameter_out_of_range);
}

TEST_CASE("multiplicity checks") {
    Tree dt4 = euclidean_D(4);
    auto mc = multiplicity_check({{dt4, 3}, {dt4, 3}}, kTm1);
    CHECK(mc.part_multiplicities == std::vector<int>{2, 2});
    CHECK(mc.total == 4);
    CHECK(mc.min_bound == 2);
    CHECK(mc.actual == 2);

    // three copies of A_2 joined at endpoints, witness Phi_3
    auto mc2 = multiplicity_check({{path(2), 1}, {path(2), 1}, {path(2), 1}}, cyclotomic(3));
    CHECK(mc2.part_multiplicities == std::vector<int>{1, 1, 1});
    CHECK(mc2.min_bound == 2);
    CHECK(mc2.actual >= 2);

    // disjoint spectra give a trivial bound
    auto mc3 = multiplicity_check({{path(1), 1}, {path(2), 1}}, cyclotomic(3));
    CHECK(mc3.part_multiplicities == std::vector<int>{0, 1});
    CHECK(mc3.min_bound == 0);

    CHECK_THROWS_AS(multiplicity_check({{dt4, 3}}, kTm1), invalid_spec);
    CHECK_THROWS_AS(multiplicity_check({{dt4, 3}, {dt4, 3}}, IntPolynomial{5}), constant_divisor);
}

TEST_CASE("radius monotonicity in arm length") {
    // growing an A-arm never lowers the radius; strictness off the cyclotomic list
    for (int r = 6; r <= 10; ++r) {
        RatInterval lo = spectral_radius_tree(salem_tree(SalemSpec{0, {1, 2, r}}));
        RatInterval hi = spectral_radius_tree(salem_tree(SalemSpec{0, {1, 2, r + 1}}));
        CHECK(lo.hi < hi.lo);
    }
    // growing the D-arm of S^(1) lowers it
    for (int p = 3; p <= 6; ++p) {
        RatInterval hi = spectral_radius_tree(salem_tree(SalemSpec{1, {p, 2, 2}}));
        RatInterval lo = spectral_radius_tree(salem_tree(SalemSpec{1, {p + 1, 2, 2}}));
        CHECK(lo.hi < hi.lo);
    }
    // ties on the cyclotomic family ~D_n
    RatInterval a = spectral_radius_tree(salem_tree(SalemSpec{1, {5, 1, 1}}));
    RatInterval b = spectral_radius_tree(salem_tree(SalemSpec{1, {6, 1, 1}}));
    CHECK(a.is_point());
    CHECK(a.lo == b.lo);
}

TEST_CASE("cox_A helper") {
    CHECK(cox_A(0) == IntPolynomial::one());
    CHECK(cox_A(5) == IntPolynomial{1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(cox_A(-1), parameter_out_of_range);
}

TEST_CASE("the E_n family turns Salem exactly at n = 10") {
    for (int n = 4; n <= 9; ++n)
        CHECK(classify_tree(dynkin_E(n)).verdict == Verdict::Cyclotomic);
    for (int n = 10; n <= 14; ++n) {
        auto rep = classify_tree(dynkin_E(n));
        CHECK(rep.verdict == Verdict::Salem);
        CHECK(rep.radius.lo > 1);
    }
    // and among those, E_10 carries the smallest radius
    RatInterval r10 = spectral_radius_tree(dynkin_E(10));
    for (int n = 11; n <= 14; ++n)
        CHECK(r10.hi < spectral_radius_tree(dynkin_E(n)).lo);
}

TEST_CASE("affine diagrams are cyclotomic") {
    CHECK(classify_tree(euclidean_E(6)).verdict == Verdict::Cyclotomic);
    CHECK(classify_tree(euclidean_E(7)).verdict == Verdict::Cyclotomic);
    CHECK(classify_tree(euclidean_E(8)).verdict == Verdict::Cyclotomic);
    for (int n = 4; n <= 12; ++n)
        CHECK(classify_tree(euclidean_D(n)).verdict == Verdict::Cyclotomic);
}
