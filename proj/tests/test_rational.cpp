#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "qsc/rational.hpp"

using qsc::Rational;

TEST_CASE("construction canonicalizes sign and gcd") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(-5).is_integer());
    CHECK_FALSE(r.is_integer());
    CHECK_THROWS_AS(Rational(1, 0), qsc::division_by_zero);
}

TEST_CASE("string parsing") {
    CHECK(Rational("22/7") == Rational(22, 7));
    CHECK(Rational("-15") == Rational(-15));
    CHECK(Rational("-775/4096").denominator() == 4096);
    CHECK_THROWS_AS(Rational("3.14"), qsc::parse_error);
    CHECK_THROWS_AS(Rational("x"), qsc::parse_error);
    CHECK_THROWS_AS(Rational("1/0"), qsc::division_by_zero);
}

TEST_CASE("field arithmetic") {
    Rational a(3, 4), b(-2, 9);
    CHECK(a + b == Rational(19, 36));
    CHECK(a - b == Rational(35, 36));
    CHECK(a * b == Rational(-1, 6));
    CHECK(a / b == Rational(-27, 8));
    CHECK(-b == Rational(2, 9));
    CHECK(a + (-a) == Rational(0));
    CHECK(a * a.reciprocal() == Rational(1));
    CHECK_THROWS_AS(a / Rational(0), qsc::division_by_zero);
    CHECK_THROWS_AS(Rational(0).reciprocal(), qsc::division_by_zero);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7, 2) > Rational(3));
    CHECK(qsc::abs(Rational(-5, 3)) == Rational(5, 3));
    CHECK(Rational(-1, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("pow handles negative exponents and stays exact at scale") {
    Rational half(1, 2);
    CHECK(half.pow(10) == Rational(1, 1024));
    CHECK(half.pow(-3) == Rational(8));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(7).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), qsc::division_by_zero);

    // 256^-20 has ~48 digit denominator; must not overflow or round
    Rational big = Rational(256).pow(-20);
    CHECK(big * Rational(256).pow(20) == Rational(1));
}

TEST_CASE("printing") {
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK(Rational(4, 2).to_string() == "2");
    std::ostringstream os;
    os << Rational(5, 8);
    CHECK(os.str() == "5/8");
}
