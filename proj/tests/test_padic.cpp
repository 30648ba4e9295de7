#include <catch2/catch_amalgamated.hpp>

#include "qsc/padic.hpp"

using namespace qsc;

TEST_CASE("p-adic valuation of rationals") {
    CHECK(padic_val(Rational("567/64"), 3) == 4);  // 567 = 3^4 * 7
    CHECK(padic_val(Rational(1, 9), 3) == -2);
    CHECK(padic_val(Rational(22, 7), 7) == -1);
    CHECK(padic_val(Rational(-45), 3) == 2);
    CHECK(padic_val(Rational(14, 15), 3) == -1);
    CHECK_FALSE(padic_val(Rational(0), 5).has_value());  // infinity
    CHECK_THROWS_AS(padic_val(Rational(1), 1), std::invalid_argument);
}

TEST_CASE("corollary sums: hand-expanded anchors") {
    PadicClaim quartic{3, 1, PFamily::Cor42, Variant::Half};
    CHECK(quartic.upper() == 1);
    CHECK(corollary_sum(quartic) == Rational("775/4096"));
    CHECK(corollary_sum(quartic) == Rational(3, 16) + Rational(7, 4096));  // k=0,1 terms

    PadicClaim squared{3, 1, PFamily::Cor44, Variant::Half};
    CHECK(corollary_sum(squared) == Rational("55/64"));
    CHECK(corollary_sum(squared) == Rational(3, 4) + Rational(7, 64));

    // the two variants have different upper limits
    PadicClaim full = quartic;
    full.variant = Variant::Full;
    CHECK(full.upper() == 1);  // 3 - 2: coincides for p^r = 3
    PadicClaim p5{5, 1, PFamily::Cor42, Variant::Full};
    CHECK(p5.upper() == 3);
}

TEST_CASE("claim targets and modulus exponents") {
    PadicClaim c{3, 2, PFamily::Cor42, Variant::Full};
    CHECK(c.target() == Rational(1) - Rational(5) * Rational(6561));  // 5*3^8
    CHECK(c.required_valuation() == 9);

    PadicClaim d{3, 2, PFamily::Cor44, Variant::Full};
    CHECK(d.target() == Rational(1) - Rational(81));
    CHECK(d.required_valuation() == 5);
}

TEST_CASE("integer supercongruences hold with reported valuations") {
    PadicReport r1 = verify_padic({3, 1, PFamily::Cor44, Variant::Half});
    REQUIRE(r1.passed());
    CHECK(r1.sum == Rational("55/64"));
    CHECK(r1.valuation_found == 4);  // 55/64 + 8 = 567/64
    CHECK(r1.valuation_required == 3);

    PadicReport r2 = verify_padic({3, 1, PFamily::Cor42, Variant::Half});
    REQUIRE(r2.passed());
    CHECK(r2.sum == Rational("775/4096"));
    CHECK(r2.valuation_found == 7);  // 1655559/4096 = 3^7 * 757 / 4096
    CHECK(r2.valuation_required == 5);

    // r = 2: the found valuation meets the requirement exactly
    PadicReport r3 = verify_padic({3, 2, PFamily::Cor42, Variant::Full});
    REQUIRE(r3.passed());
    CHECK(r3.valuation_found == 9);
    CHECK(r3.valuation_required == 9);

    PadicReport r4 = verify_padic({3, 2, PFamily::Cor44, Variant::Full});
    REQUIRE(r4.passed());
    CHECK(r4.valuation_found == 5);
    CHECK(r4.valuation_required == 5);

    // tightening the exponent by one must flip those sharp cases
    PadicClaim sharp{3, 2, PFamily::Cor42, Variant::Full};
    auto v = padic_val(corollary_sum(sharp) - sharp.target(), 3);
    REQUIRE(v.has_value());
    CHECK(*v < sharp.required_valuation() + 1);
}

TEST_CASE("half and full variants agree modulo the target power") {
    for (PFamily fam : {PFamily::Cor42, PFamily::Cor44}) {
        for (long p : {3L, 5L}) {
            CAPTURE(p, fam == PFamily::Cor42 ? "cor42" : "cor44");
            PadicClaim half{p, 1, fam, Variant::Half};
            PadicClaim full{p, 1, fam, Variant::Full};
            auto v = padic_val(corollary_sum(half) - corollary_sum(full), p);
            CHECK((!v || *v >= half.required_valuation()));
        }
    }
}

TEST_CASE("first-prime grid passes for r = 1 and r = 2") {
    for (long p : {3L, 5L, 7L, 11L, 13L})
        for (PFamily fam : {PFamily::Cor42, PFamily::Cor44})
            for (Variant var : {Variant::Half, Variant::Full}) {
                CAPTURE(p, fam == PFamily::Cor42 ? "cor42" : "cor44", variant_name(var));
                CHECK(verify_padic({p, 1, fam, var}).passed());
            }
    // one r = 2 spot check here; the full r = 2 grid runs in the acceptance gate
    CHECK(verify_padic({5, 2, PFamily::Cor44, Variant::Half}).passed());
}

TEST_CASE("bad claims produce error verdicts") {
    CHECK(verify_padic({15, 1, PFamily::Cor42, Variant::Half}).verdict == Verdict::Error);
    CHECK(verify_padic({2, 1, PFamily::Cor44, Variant::Full}).verdict == Verdict::Error);
    PadicReport r = verify_padic({3, 0, PFamily::Cor42, Variant::Half});
    CHECK(r.verdict == Verdict::Error);
}
