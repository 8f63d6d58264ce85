#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cox/realroot.hpp"

using namespace cox;

namespace {

/// Plain exact bisection oracle: start from [1, B] and halve on rational
/// sign evaluations. Independent of the library's Descartes-based search.
Rational bisection_oracle(const IntPolynomial& p, int iterations) {
    Int maxc = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Int a = abs(p[i]);
        if (a > maxc)
            maxc = a;
    }
    Rational lo = 1, hi = Rational(abs(p.leading()) + maxc, abs(p.leading()));
    REQUIRE(p.sign_at(hi) != 0);
    for (int k = 0; k < iterations; ++k) {
        Rational mid = (lo + hi) / 2;
        int s = p.sign_at(mid);
        if (s == 0)
            return mid;
        if (s == p.sign_at(hi))
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / 2;
}

const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

} // namespace

TEST_CASE("golden ratio enclosure") {
    auto iv = largest_real_root_above_one(IntPolynomial{-1, -1, 1}, 1e-12);
    REQUIRE(iv.has_value());
    CHECK(iv->width() <= Rational(1e-12));
    // (1+sqrt 5)/2 = 1.6180339887498949...
    CHECK(iv->mid() == Catch::Approx(1.6180339887498949).epsilon(1e-11));
    // exact certificate, no floating point
    CHECK(IntPolynomial{-1, -1, 1}.sign_at(iv->lo) * IntPolynomial{-1, -1, 1}.sign_at(iv->hi) < 0);
}

TEST_CASE("no real roots above one") {
    CHECK_FALSE(largest_real_root_above_one(IntPolynomial{1, 0, 1}, 1e-9).has_value());
    // all roots on the unit circle
    CHECK_FALSE(largest_real_root_above_one(IntPolynomial{1, 1, 1}, 1e-9).has_value());
    // root exactly at 1 is outside the contract interval (1, B]
    CHECK_FALSE(largest_real_root_above_one(IntPolynomial{-1, 1}, 1e-9).has_value());
}

TEST_CASE("Lehmer's number") {
    auto iv = largest_real_root_above_one(kLehmer, 1e-9);
    REQUIRE(iv.has_value());
    CHECK(iv->width() <= Rational(1e-9));
    Rational oracle = bisection_oracle(kLehmer, 64);
    CHECK(Rational(abs(Rational(iv->mid()) - oracle)) < Rational(1e-8));
    CHECK(iv->mid() == Catch::Approx(1.176280818).epsilon(1e-8));
}

TEST_CASE("largest root is returned when several lie above one") {
    // (t-2)(t-3)(t-5/2... keep integer: (t-2)(t-3)(2t-5) has roots 2, 2.5, 3
    IntPolynomial p = IntPolynomial{-2, 1} * IntPolynomial{-3, 1} * IntPolynomial{-5, 2};
    auto iv = largest_real_root_above_one(p, 1e-10);
    REQUIRE(iv.has_value());
    CHECK(iv->mid() == Catch::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("exact integer root stays enclosed") {
    IntPolynomial p = IntPolynomial{-2, 1} * IntPolynomial{1, 0, 1}; // (t-2)(t^2+1)
    auto iv = largest_real_root_above_one(p, 1e-10);
    REQUIRE(iv.has_value());
    CHECK(iv->lo <= Rational(2));
    CHECK(Rational(2) <= iv->hi);
    CHECK(iv->width() <= Rational(1e-10));
}

TEST_CASE("certificates hold on random polynomials with a planted root") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coeff(1, 4), deg(1, 6), root_num(3, 9);
    for (int c = 0; c < 120; ++c) {
        // plant a single root at root_num/2 > 1; an all-positive cofactor has
        // no positive roots, so the planted one is the unique root above 1
        std::vector<Int> cof(static_cast<size_t>(deg(rng)) + 1);
        for (auto& x : cof)
            x = coeff(rng);
        int num = root_num(rng);
        IntPolynomial p = IntPolynomial{-num, 2} * IntPolynomial(std::move(cof));
        auto iv = largest_real_root_above_one(p, 1e-10);
        REQUIRE(iv.has_value());
        CHECK(iv->width() <= Rational(1e-10));
        CHECK(iv->lo <= Rational(num, 2));
        CHECK(Rational(num, 2) <= iv->hi);
        int slo = p.sign_at(iv->lo), shi = p.sign_at(iv->hi);
        CHECK((slo * shi < 0 || (iv->lo == iv->hi && slo == 0)));
    }
}

TEST_CASE("largest root of random products is found, not a smaller one") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> halves(3, 12);
    for (int c = 0; c < 80; ++c) {
        // roots a/2 < b/2 planted together with a wiggle factor
        int a = halves(rng), b = halves(rng);
        if (a == b)
            continue;
        if (a > b)
            std::swap(a, b);
        IntPolynomial p = IntPolynomial{-a, 2} * IntPolynomial{-b, 2} * IntPolynomial{1, 1, 1};
        auto iv = largest_real_root_above_one(p, 1e-9);
        REQUIRE(iv.has_value());
        CHECK(iv->mid() == Catch::Approx(b / 2.0).epsilon(1e-7));
    }
}

TEST_CASE("tolerance validation") {
    CHECK_THROWS_AS(largest_real_root_above_one(IntPolynomial{-1, -1, 1}, 0.0),
                    tolerance_not_positive);
    CHECK_THROWS_AS(largest_real_root_above_one(IntPolynomial{-1, -1, 1}, -1e-3),
                    tolerance_not_positive);
    CHECK_THROWS_AS(largest_real_root_above_one(IntPolynomial{}, 1e-9), zero_polynomial);
}

TEST_CASE("interval ordering helper") {
    RatInterval a{1, 2}, b{3, 4}, c{Rational(3, 2), Rational(5, 2)};
    CHECK(RatInterval::strictly_below(a, b));
    CHECK_FALSE(RatInterval::strictly_below(b, a));
    CHECK_FALSE(RatInterval::strictly_below(a, c));
    CHECK(RatInterval{1, 1}.is_point());
}
