#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qsc/laurent.hpp"
#include "qsc/poly_div.hpp"

using namespace qsc;

namespace {

// Random bivariate Laurent polynomial with small support, for property tests.
LaurentPoly random_lp(std::mt19937& rng, int max_terms = 6) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> ex(-4, 4);
    std::uniform_int_distribution<int> co(-9, 9);
    LaurentPoly p;
    int n = nt(rng);
    for (int i = 0; i < n; ++i) p += lp_monomial(Rational(co(rng)), ex(rng), ex(rng));
    return p;
}

}  // namespace

TEST_CASE("term normalization") {
    LaurentPoly p = lp_q() + lp_one() + lp_q().scale(Rational(-1));
    CHECK(p == lp_one());
    CHECK(p.size() == 1);
    CHECK((lp_q() - lp_q()).is_zero());
    CHECK(LaurentPoly::zero().degree(kVarQ) == -1);

    LaurentPoly m = lp_monomial(Rational(2), 3, -1);
    CHECK(m.coeff(qa_exp(3, -1)) == Rational(2));
    CHECK(m.coeff(qa_exp(0, 0)) == Rational(0));
    CHECK(m.min_exp(kVarA) == -1);
}

TEST_CASE("arithmetic basics") {
    CHECK((lp_q() + lp_one()) + lp_constant(Rational(-1)) == lp_q());
    CHECK((lp_one() - lp_q(-1)) * lp_q() == lp_q() - lp_one());

    LaurentPoly sq = (lp_one() + lp_q()) * (lp_one() + lp_q());
    CHECK(sq == lp_one() + lp_q().scale(Rational(2)) + lp_q(2));
    CHECK((lp_one() + lp_q()).pow(2) == sq);
    CHECK((lp_one() + lp_q()).pow(0) == lp_one());
    CHECK_THROWS_AS(lp_q().pow(-1), std::invalid_argument);
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(0x5eed);
    for (int it = 0; it < 40; ++it) {
        LaurentPoly x = random_lp(rng), y = random_lp(rng), z = random_lp(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == LaurentPoly::zero());
    }
}

TEST_CASE("substitutions") {
    LaurentPoly p = lp_q(2) + lp_monomial(Rational(1), -1, 1);  // q^2 + q^-1 a
    CHECK(p.substitute_power(kVarQ, 3) == lp_q(6) + lp_monomial(Rational(1), -3, 1));

    // a := 2 q^3 turns q^-1 a into 2 q^2
    LaurentPoly s = p.substitute_monomial(kVarA, Rational(2), qa_exp(3, 0));
    CHECK(s == lp_q(2).scale(Rational(3)));

    // a := 0 keeps only the a-free part; a := 0 under a^-1 is a pole
    CHECK(p.substitute_monomial(kVarA, Rational(0), qa_exp(0, 0)) == lp_q(2));
    LaurentPoly inv = lp_monomial(Rational(1), 0, -1);
    CHECK_THROWS_AS(inv.substitute_monomial(kVarA, Rational(0), qa_exp(0, 0)),
                    division_by_zero);
}

TEST_CASE("evaluation") {
    LaurentPoly p = lp_q(-1).scale(Rational(-1)) + lp_monomial(Rational(2), 0, 1);
    CHECK(p.eval({Rational(1, 2), Rational(3)}) == Rational(4));
    CHECK_THROWS_AS(p.eval({Rational(0), Rational(3)}), division_by_zero);
    CHECK(lp_q(2).eval({Rational(-1), Rational(0)}) == Rational(1));
}

TEST_CASE("canonical text form") {
    LaurentPoly p = lp_q(-1).scale(Rational(-1)) + lp_monomial(Rational(2), 0, 1);
    CHECK(lp_to_string(p) == "-1*q^-1 + 2*q^0*a^1");
    CHECK(lp_to_string(LaurentPoly::zero()) == "0");
    CHECK(lp_to_string(lp_constant(Rational(-7, 3))) == "-7/3*q^0");

    CHECK(lp_from_string("-1*q^-1 + 2*q^0*a^1") == p);
    CHECK(lp_from_string("0").is_zero());

    std::mt19937 rng(1234);
    for (int it = 0; it < 25; ++it) {
        LaurentPoly x = random_lp(rng);
        CHECK(lp_from_string(lp_to_string(x)) == x);
    }

    CHECK_THROWS_AS(lp_from_string("2*z^1"), parse_error);
    CHECK_THROWS_AS(lp_from_string("q^1 + "), parse_error);
    CHECK_THROWS_AS(lp_from_string(""), parse_error);
}

TEST_CASE("exact division") {
    LaurentPoly qm1 = lp_q() - lp_one();
    auto quot = lp_div_exact(lp_q(2) - lp_one(), qm1);
    REQUIRE(quot);
    CHECK(*quot == lp_q() + lp_one());

    // bivariate: (1 - a^2 q^2) / (1 - a q) = 1 + a q
    LaurentPoly num = lp_one() - lp_monomial(Rational(1), 2, 2);
    LaurentPoly den = lp_one() - lp_monomial(Rational(1), 1, 1);
    auto q2 = lp_div_exact(num, den);
    REQUIRE(q2);
    CHECK(*q2 == lp_one() + lp_monomial(Rational(1), 1, 1));

    // non-divisor is reported, not mangled
    CHECK_FALSE(lp_div_exact(lp_q(3) - lp_one(), lp_q() + lp_one()));
    CHECK_THROWS_AS(lp_div_exact(lp_one(), LaurentPoly::zero()), division_by_zero);

    // Laurent content: divisor with negative exponents still divides exactly
    auto q3 = lp_div_exact(lp_q(1) - lp_q(-1), lp_one() - lp_q(-1));
    REQUIRE(q3);
    CHECK(*q3 == lp_q() + lp_one());

    std::mt19937 rng(77);
    for (int it = 0; it < 30; ++it) {
        LaurentPoly p = random_lp(rng), d = random_lp(rng);
        if (d.is_zero()) continue;
        auto r = lp_div_exact(p * d, d);
        REQUIRE(r);
        CHECK(*r == p);
    }
}

TEST_CASE("univariate division with remainder") {
    auto [quot, rem] = lp_divmod_q(lp_q(3) - lp_one(), lp_q() - lp_one());
    CHECK(quot == lp_q(2) + lp_q() + lp_one());
    CHECK(rem.is_zero());

    auto dr = lp_divmod_q(lp_q(2) + lp_one(), lp_q() + lp_one());
    CHECK(dr.quot == lp_q() - lp_one());
    CHECK(dr.rem == lp_constant(Rational(2)));

    CHECK_THROWS_AS(lp_divmod_q(lp_a(), lp_q() - lp_one()), not_univariate);
}

TEST_CASE("univariate gcd") {
    LaurentPoly g = poly_gcd_q(lp_q(2) - lp_one(), lp_q(3) - lp_one());
    CHECK(g == lp_q() - lp_one());

    CHECK(poly_gcd_q(lp_q() + lp_one(), lp_q() - lp_one()) == lp_one());
    // monomials are units in the Laurent ring, so they normalize away
    CHECK(poly_gcd_q(LaurentPoly::zero(), lp_q(2).scale(Rational(3))) == lp_one());
    CHECK(poly_gcd_q(LaurentPoly::zero(), LaurentPoly::zero()).is_zero());
    CHECK_THROWS_AS(poly_gcd_q(lp_a() + lp_one(), lp_q()), not_univariate);

    // result is monic and divides both arguments
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> ex(0, 5);
    std::uniform_int_distribution<int> co(-4, 4);
    for (int it = 0; it < 25; ++it) {
        LaurentPoly x, y;
        for (int i = 0; i < 4; ++i) {
            x += lp_monomial(Rational(co(rng)), ex(rng));
            y += lp_monomial(Rational(co(rng)), ex(rng));
        }
        if (x.is_zero() || y.is_zero()) continue;
        LaurentPoly d = poly_gcd_q(x, y);
        REQUIRE_FALSE(d.is_zero());
        CHECK(d.terms().back().coeff == Rational(1));
        CHECK(lp_div_exact(x, d));
        CHECK(lp_div_exact(y, d));
    }
}

TEST_CASE("three-variable frame polynomials share the template") {
    FramePoly x = fp_monomial(Rational(1), 6, -2, 1);  // q^6 u^-2 v
    FramePoly y = fp_monomial(Rational(1), -1, 0, 2);  // q^-1 v^2
    FramePoly p = (fp_one() - x) * (fp_one() - y);
    CHECK(p.coeff(quv_exp(5, -2, 3)) == Rational(1));
    CHECK(fp_to_string(fp_one() - y) == "-1*q^-1*v^2 + 1*q^0");
    CHECK(FramePoly::from_string(fp_to_string(p), kQUVNames) == p);
}
