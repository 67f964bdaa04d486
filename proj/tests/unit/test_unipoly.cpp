#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "topzeta/unipoly.hpp"

using namespace topzeta;
using topzeta::testing::poly;
using topzeta::testing::r;
using topzeta::testing::random_poly;

TEST_CASE("construction trims trailing zeros") {
    CHECK(UniPoly({r(1), r(2), r(0), r(0)}) == poly({1, 2}));
    CHECK(UniPoly({r(0)}).is_zero());
    CHECK(UniPoly().degree() == -1);
    CHECK(poly({1, 2}).degree() == 1);
}

TEST_CASE("arithmetic and evaluation") {
    UniPoly p = poly({5, 4});  // 4t+5
    UniPoly q = poly({1, 1});  // t+1
    CHECK(p + q == poly({6, 5}));
    CHECK(p - p == UniPoly());
    CHECK(p * q == poly({5, 9, 4}));
    CHECK(p.evaluate(r(-5, 6)) == r(5, 3));
    CHECK(poly({1, 2, 1}).derivative() == poly({2, 2}));
    CHECK(UniPoly().derivative() == UniPoly());
}

TEST_CASE("monomial predicate") {
    CHECK(poly({0, 0, 3}).is_monomial());
    CHECK(poly({2}).is_monomial());
    CHECK_FALSE(poly({1, 1}).is_monomial());
    CHECK_FALSE(UniPoly().is_monomial());
}

TEST_CASE("divmod: a = b*q + r with deg r < deg b") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        UniPoly a = random_poly(rng, 5, 4);
        UniPoly b = random_poly(rng, 3, 4);
        if (b.is_zero()) continue;
        auto [q, rem] = UniPoly::divmod(a, b);
        CHECK(b * q + rem == a);
        CHECK(rem.degree() < b.degree());
    }
    CHECK_THROWS_AS(UniPoly::divmod(poly({1}), UniPoly()), std::domain_error);
    CHECK_THROWS_AS(poly({1, 1}).divide_exact(poly({1, 2})), std::domain_error);
}

TEST_CASE("poly_gcd on known inputs") {
    // Euclid on (1+t)^2 and its derivative.
    CHECK(poly_gcd(poly({1, 2, 1}), poly({2, 2})) == poly({1, 1}));
    CHECK(poly_gcd(poly({1, 1}), poly({1})) == poly({1}));
    CHECK(poly_gcd(UniPoly(), UniPoly()) == UniPoly());
    // gcd(p, 0) is the monic associate of p.
    CHECK(poly_gcd(poly({2, 4}), UniPoly()) == UniPoly({r(1, 2), r(1)}));
}

TEST_CASE("poly_gcd divides both arguments exactly") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        UniPoly g = random_poly(rng, 2, 3);
        UniPoly p = g * random_poly(rng, 2, 3);
        UniPoly q = g * random_poly(rng, 2, 3);
        UniPoly d = poly_gcd(p, q);
        if (d.is_zero()) {
            CHECK(p.is_zero());
            CHECK(q.is_zero());
            continue;
        }
        CHECK(UniPoly::divmod(p, d).second.is_zero());
        CHECK(UniPoly::divmod(q, d).second.is_zero());
        if (!g.is_zero() && !(p.is_zero() && q.is_zero()))
            CHECK(UniPoly::divmod(d, g).second.is_zero()); // g | gcd
    }
}

TEST_CASE("polynomial display") {
    CHECK(to_string(poly({5, 4})) == "4s+5");
    CHECK(to_string(poly({0, -1})) == "-s");
    CHECK(to_string(poly({1, 0, 2})) == "2s^2+1");
    CHECK(to_string(poly({-1, 1})) == "s-1");
    CHECK(to_string(UniPoly()) == "0");
    CHECK(to_string(UniPoly({r(1, 2), r(1)})) == "s+1/2");
    CHECK(to_string(UniPoly({r(0), r(-3, 2)})) == "-(3/2)s");
}
