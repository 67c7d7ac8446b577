#include <doctest.h>

#include <random>

#include "menage/laurent.hpp"

using namespace menage;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_terms(0, 6);
    std::uniform_int_distribution<int> ey(-3, 3);
    std::uniform_int_distribution<int> ezt(0, 3);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Term> terms;
    const int count = n_terms(rng);
    for (int i = 0; i < count; ++i)
        terms.push_back(Term{Monomial{ey(rng), ezt(rng), ezt(rng)},
                             make_rat(num(rng), den(rng))});
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("addition basics") {
    const LaurentPoly y = LaurentPoly::y();
    const LaurentPoly z = LaurentPoly::z();
    CHECK(y + z + (-y) == z);
    CHECK(LaurentPoly{} + z == z);

    const LaurentPoly yz2 = LaurentPoly::monomial(2, 1, 1, 0);
    const LaurentPoly yz3 = LaurentPoly::monomial(3, 1, 1, 0);
    CHECK(yz2 + yz3 == LaurentPoly::monomial(5, 1, 1, 0));
}

TEST_CASE("multiplication basics") {
    CHECK(LaurentPoly::y(1) * LaurentPoly::y(-1) == LaurentPoly::constant(1));
    CHECK(LaurentPoly::monomial(1, -1, 1, 0) * LaurentPoly::y() == LaurentPoly::z());

    const LaurentPoly one = LaurentPoly::constant(1);
    const LaurentPoly t = LaurentPoly::t();
    CHECK((one + t) * (one - t) == one - t * t);
}

TEST_CASE("coefficient extraction") {
    // 2z + 3yz + 4
    const LaurentPoly p = LaurentPoly::monomial(2, 0, 1, 0) + LaurentPoly::monomial(3, 1, 1, 0) +
                          LaurentPoly::constant(4);
    CHECK(p.coeff_of_yz(0, 1) == LaurentPoly::constant(2));
    CHECK((LaurentPoly::y(1) + LaurentPoly::y(-1)).coeff_of_yz(0, 0).is_zero());
    CHECK(p.coeff(1, 1, 0) == 3);
    CHECK(p.coeff(2, 0, 0) == 0);
}

TEST_CASE("laplace transform at one") {
    CHECK(laplace_at_one(LaurentPoly::t(2)) == 2);
    CHECK(laplace_at_one(LaurentPoly::constant(1) + LaurentPoly::t()) == 2);
    CHECK(laplace_at_one(LaurentPoly::monomial(3, 0, 0, 3) - LaurentPoly::t()) == 17);
    CHECK(laplace_at_one(LaurentPoly{}) == 0);
    CHECK_THROWS_AS(laplace_at_one(LaurentPoly::y()), std::invalid_argument);
    CHECK_THROWS_AS(laplace_at_one(LaurentPoly::z()), std::invalid_argument);
}

TEST_CASE("laplace transform is linear") {
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
        LaurentPoly f, g;
        for (const Term& term : random_poly(rng).terms())
            f = f + LaurentPoly::monomial(term.coeff, 0, 0, term.mono.et);
        for (const Term& term : random_poly(rng).terms())
            g = g + LaurentPoly::monomial(term.coeff, 0, 0, term.mono.et);
        CHECK(laplace_at_one(f + g) == laplace_at_one(f) + laplace_at_one(g));
    }
}

TEST_CASE("ring laws on random triples") {
    std::mt19937 rng(42);
    for (int round = 0; round < 40; ++round) {
        const LaurentPoly a = random_poly(rng);
        const LaurentPoly b = random_poly(rng);
        const LaurentPoly c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("multiplication caps discard high exponents") {
    const LaurentPoly p = LaurentPoly::constant(1) + LaurentPoly::z();
    PolyCaps caps;
    caps.max_ez = 2;
    const LaurentPoly p4 = poly_mul(poly_mul(p, p, caps), poly_mul(p, p, caps), caps);
    // (1+z)^4 mod z^3 = 1 + 4z + 6z^2
    CHECK(p4.coeff(0, 0, 0) == 1);
    CHECK(p4.coeff(0, 1, 0) == 4);
    CHECK(p4.coeff(0, 2, 0) == 6);
    CHECK(p4.max_ez() == 2);

    PolyCaps ycap;
    ycap.max_ey = 1;
    CHECK_THROWS_AS(poly_mul(LaurentPoly::y(-1), LaurentPoly::y(), ycap), std::invalid_argument);
}

TEST_CASE("rendering matches the documented form") {
    const LaurentPoly p = LaurentPoly::monomial(-2, -1, 1, 0) + LaurentPoly::monomial(3, 0, 0, 2);
    CHECK(p.to_string() == "-2*y^-1*z + 3*t^2");
    CHECK(LaurentPoly{}.to_string() == "0");
    CHECK(LaurentPoly::constant(make_rat(1, 2)).to_string() == "1/2");
    CHECK((LaurentPoly::y() - LaurentPoly::t()).to_string() == "y - t");
    CHECK(LaurentPoly::parse("-2*y^-1*z + 3*t^2") == p);
    CHECK(LaurentPoly::parse("0").is_zero());
}

TEST_CASE("parse/print round trip") {
    std::mt19937 rng(99);
    for (int round = 0; round < 100; ++round) {
        const LaurentPoly p = random_poly(rng);
        CHECK(LaurentPoly::parse(p.to_string()) == p);
    }
    CHECK_THROWS_AS(LaurentPoly::parse("2*q"), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("1 +"), std::invalid_argument);
}

TEST_CASE("negative z or t exponents are rejected") {
    CHECK_THROWS_AS(LaurentPoly::monomial(1, 0, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::monomial(1, 0, 0, -2), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("z^-1"), std::invalid_argument);
}
