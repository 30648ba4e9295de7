#include <catch2/catch_amalgamated.hpp>

#include "qsc/ratfun.hpp"
#include "qsc/qkit.hpp"

using namespace qsc;

namespace {

RatFun one_over(FactorList den) { return RatFun(lp_one(), std::move(den)); }

FactorList atoms(std::initializer_list<std::pair<int, int>> exps) {
    FactorList f;
    for (auto [eq, ea] : exps) f.push(Rational(1), eq, ea);
    return f;
}

}  // namespace

TEST_CASE("denominator units migrate into the numerator") {
    FactorList d;
    d.push(Rational(1), -1, 0);  // (1 - q^-1) = -q^-1 (1 - q)
    RatFun r(lp_one(), d);
    CHECK(r.den().has_trivial_unit());
    CHECK(r.num() == lp_q().scale(Rational(-1)));  // 1/(1-q^-1) = -q/(1-q)
    CHECK(r == RatFun(lp_q().scale(Rational(-1)), atoms({{1, 0}})));

    RatFun z(LaurentPoly::zero(), atoms({{1, 0}, {2, 0}}));
    CHECK(z.is_zero());
    CHECK(z.den().is_one());
}

TEST_CASE("field operations over factored denominators") {
    RatFun x = one_over(atoms({{1, 0}}));             // 1/(1-q)
    RatFun y = one_over(atoms({{2, 0}}));             // 1/(1-q^2)
    FactorList neg;
    neg.push(Rational(-1), 1, 0);                     // (1+q)
    RatFun w = one_over(neg);                         // 1/(1+q)

    // 1/(1-q) + 1/(1+q) = 2/(1-q^2)
    CHECK(x + w == RatFun(lp_constant(Rational(2)), atoms({{2, 0}})));
    // 1/(1-q) - 1/(1-q^2) = q/(1-q^2)
    CHECK(x - y == RatFun(lp_q(), atoms({{2, 0}})));
    CHECK((x - x).is_zero());
    CHECK(x * w == y);
    CHECK(-(-x) == x);

    // scalar and polynomial mixing via implicit conversions
    CHECK(x * RatFun(Rational(0)) == RatFun(Rational(0)));
    CHECK(x + RatFun(Rational(1)) ==
          RatFun(lp_constant(Rational(2)) - lp_q(), atoms({{1, 0}})));
    CHECK(x * (lp_one() - lp_q(2)) == RatFun(lp_one() + lp_q()));

    RatFun via_over = RatFun(lp_one()).over(atoms({{1, 0}}));
    CHECK(via_over == x);
}

TEST_CASE("equality cross-multiplies, no reduction required") {
    // q/(1-q) == -q^2 (1-q^-1) / (1-q)^2, written with unreduced factors
    RatFun lhs(lp_q(), atoms({{1, 0}}));
    FactorList d2;
    d2.push(Rational(1), 1, 0, 2);
    RatFun rhs((lp_one() - lp_q(-1)).scale(Rational(-1)).mul_monomial(Rational(1), qa_exp(2, 0)),
               d2);
    CHECK(lhs == rhs);
    CHECK(lhs != lhs + RatFun(Rational(1)));
    CHECK_FALSE(lhs == RatFun(Rational(0)));
}

TEST_CASE("specialization of the second variable") {
    // (1 - a q) / (1 - a q^2)
    RatFun r(lp_one() - lp_monomial(Rational(1), 1, 1), atoms({{2, 1}}));

    RatFun at1 = r.specialize_a(Rational(1));
    CHECK(at1 == RatFun(lp_one() - lp_q(), atoms({{2, 0}})));

    // a := 0 is rejected: factored denominators have no sensible image there
    CHECK_THROWS_AS(r.specialize_a(Rational(0)), std::invalid_argument);

    // a := q^-2 kills the denominator atom
    CHECK_THROWS_AS(r.specialize_a_monomial(Rational(1), -2), pole_error);

    // a := -q turns (1 - a q) into (1 + q^2)
    RatFun am = r.specialize_a_monomial(Rational(-1), 1);
    CHECK(am == RatFun(lp_one() + lp_q(2), atoms({{3, 1}}).substitute_a_monomial(Rational(-1), 0)));
}

TEST_CASE("base change q to a power") {
    RatFun x = one_over(atoms({{1, 0}}));
    CHECK(x.substitute_power_q(2) == one_over(atoms({{2, 0}})));
    RatFun r(lp_q(-1), atoms({{3, 0}}));
    CHECK(r.substitute_power_q(3) == RatFun(lp_q(-3), atoms({{9, 0}})));
}

TEST_CASE("evaluation with pole detection") {
    RatFun r(lp_one() + lp_q(), atoms({{1, 0}}));  // (1+q)/(1-q)
    CHECK(r.eval_q(Rational(1, 2)) == Rational(3));
    CHECK(r.eval_q(Rational(-1)) == Rational(0));
    CHECK_THROWS_AS(r.eval_q(Rational(1)), pole_error);

    RatFun s(lp_monomial(Rational(1), 0, 1), atoms({{1, 1}}));  // a/(1-aq)
    CHECK(s.eval(Rational(1, 3), Rational(2)) == Rational(6));
}

TEST_CASE("combining many terms over a common denominator") {
    // telescoping: sum_k q^k/((1-q^k)(1-q^{k+1})) = (1/(1-q)) (1/(1-q) - 1/(1-q^{n+1})) ... use n = 4
    std::vector<RatFun> terms;
    for (int k = 1; k <= 4; ++k)
        terms.emplace_back(lp_q(k), atoms({{k, 0}, {k + 1, 0}}));
    RatFun total = rf_combine(terms);

    RatFun expect = (one_over(atoms({{1, 0}})) - one_over(atoms({{5, 0}}))) *
                    one_over(atoms({{1, 0}}));
    CHECK(total == expect);

    CHECK(rf_combine(std::vector<RatFun>{RatFun(Rational(7))}) == RatFun(Rational(7)));
    CHECK_THROWS_AS(rf_combine(std::vector<RatFun>{}), std::invalid_argument);
}
