/**
 * @file poly_div.hpp
 * @brief Exact division and gcd on the (q, a) Laurent ring.
 *
 * Monomials are units here, so divisibility is decided on the ordinary-polynomial
 * parts after stripping monomial content; minimum exponents are additive under
 * multiplication, which makes that reduction lossless.
 */
#ifndef QSC_POLY_DIV_HPP
#define QSC_POLY_DIV_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qsc/laurent.hpp"

namespace qsc {

inline std::optional<LaurentPoly> lp_div_exact(const LaurentPoly& p, const LaurentPoly& d);

namespace detail {

// p with min exponent 0 in each variable; returns the stripped monomial's exponents.
inline ExpVec<2> strip_content(LaurentPoly& p) {
    ExpVec<2> m{{p.min_exp(kVarQ), p.min_exp(kVarA)}};
    p = p.mul_monomial(Rational(1), -m);
    return m;
}

// Dense coefficients of a q-univariate ordinary polynomial, ascending from q^0.
inline std::vector<Rational> to_dense_q(const LaurentPoly& p) {
    std::vector<Rational> c(static_cast<size_t>(p.max_exp(kVarQ)) + 1, Rational(0));
    for (const auto& t : p.terms()) c[static_cast<size_t>(t.exp.e[kVarQ])] = t.coeff;
    return c;
}

inline LaurentPoly from_dense_q(const std::vector<Rational>& c) {
    LaurentPoly r;
    for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) r += lp_monomial(c[i], static_cast<int>(i));
    return r;
}

// Schoolbook division of dense univariate polynomials. Quotient plus remainder.
inline std::pair<std::vector<Rational>, std::vector<Rational>> dense_divmod(
    std::vector<Rational> rem, const std::vector<Rational>& d) {
    size_t dd = d.size() - 1;
    std::vector<Rational> quot;
    if (rem.size() < d.size()) return {quot, std::move(rem)};
    quot.assign(rem.size() - dd, Rational(0));
    const Rational& lead = d[dd];
    for (size_t i = rem.size() - dd; i-- > 0;) {
        if (rem[i + dd].is_zero()) continue;
        Rational c = rem[i + dd] / lead;
        quot[i] = c;
        for (size_t j = 0; j <= dd; ++j)
            if (!d[j].is_zero()) rem[i + j] -= c * d[j];
    }
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    return {std::move(quot), std::move(rem)};
}

// Decomposition of p by one variable: exponent -> coefficient polynomial (with that
// variable's exponent zeroed out).
inline std::map<int, LaurentPoly> decompose(const LaurentPoly& p, int var) {
    std::map<int, LaurentPoly> m;
    for (const auto& t : p.terms()) {
        ExpVec<2> e = t.exp;
        int d = e.e[var];
        e.e[var] = 0;
        m[d] += LaurentPoly::monomial(t.coeff, e);
    }
    return m;
}

// Long division in `var` over coefficient polynomials in the other variable.
// Coefficient divisions go through lp_div_exact: slots are Laurent polynomials
// (decompose keeps the other variable's negative exponents) and need their own
// content handling. Each successful step clears the leading slot, so the loop
// strictly descends in var-degree.
inline std::optional<LaurentPoly> div_exact_by_var(const LaurentPoly& p, const LaurentPoly& d,
                                                   int var) {
    std::map<int, LaurentPoly> rem = decompose(p, var);
    const std::map<int, LaurentPoly> dv = decompose(d, var);
    const int dd = dv.rbegin()->first;
    const LaurentPoly& dlead = dv.rbegin()->second;
    LaurentPoly quot;
    while (!rem.empty()) {
        const int rd = rem.rbegin()->first;
        if (rd < dd) return std::nullopt;
        std::optional<LaurentPoly> qc = lp_div_exact(rem.rbegin()->second, dlead);
        if (!qc) return std::nullopt;
        ExpVec<2> shift{};
        shift.e[var] = rd - dd;
        quot += qc->mul_monomial(Rational(1), shift);
        for (const auto& [j, dj] : dv) {
            LaurentPoly& slot = rem[rd - dd + j];
            slot -= *qc * dj;
            if (slot.is_zero()) rem.erase(rd - dd + j);
        }
    }
    return quot;
}

// Both arguments content-stripped ordinary polynomials; d nonzero.
inline std::optional<LaurentPoly> div_exact_stripped(const LaurentPoly& p, const LaurentPoly& d) {
    if (p.is_zero()) return LaurentPoly::zero();
    if (d.size() == 1) {  // constant after stripping
        return p.scale(d.terms()[0].coeff.reciprocal());
    }
    const bool d_has_a = d.max_exp(kVarA) > 0;
    if (!d_has_a && p.univariate_in(kVarQ)) {
        auto [quot, rem] = dense_divmod(to_dense_q(p), to_dense_q(d));
        if (!rem.empty()) return std::nullopt;
        return from_dense_q(quot);
    }
    // Divide in a when the divisor involves a, else in q.
    return div_exact_by_var(p, d, d_has_a ? kVarA : kVarQ);
}

}  // namespace detail

/// Exact division in the Laurent ring: returns p/d when d divides p, nullopt otherwise.
inline std::optional<LaurentPoly> lp_div_exact(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw division_by_zero("lp_div_exact: zero divisor");
    if (p.is_zero()) return LaurentPoly::zero();
    LaurentPoly ps = p, ds = d;
    ExpVec<2> mp = detail::strip_content(ps);
    ExpVec<2> md = detail::strip_content(ds);
    std::optional<LaurentPoly> q = detail::div_exact_stripped(ps, ds);
    if (!q) return std::nullopt;
    return q->mul_monomial(Rational(1), mp + (-md));
}

/// Quotient and remainder for q-univariate polynomials (monomial content stripped
/// first, so the remainder is reported on the ordinary parts). Diagnostic helper.
struct DivRemQ {
    LaurentPoly quot, rem;
};
inline DivRemQ lp_divmod_q(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw division_by_zero("lp_divmod_q: zero divisor");
    if (!d.univariate_in(kVarQ) || !p.univariate_in(kVarQ))
        throw not_univariate("lp_divmod_q: arguments must be univariate in q");
    if (p.is_zero()) return {LaurentPoly::zero(), LaurentPoly::zero()};
    LaurentPoly ps = p, ds = d;
    detail::strip_content(ps);
    detail::strip_content(ds);
    auto [quot, rem] = detail::dense_divmod(detail::to_dense_q(ps), detail::to_dense_q(ds));
    return {detail::from_dense_q(quot), detail::from_dense_q(rem)};
}

/// Monic gcd of q-univariate Laurent polynomials; gcd(p, 0) = monic(p), gcd(0,0) = 0.
inline LaurentPoly poly_gcd_q(const LaurentPoly& p, const LaurentPoly& r) {
    auto check = [](const LaurentPoly& x) {
        if (!x.is_zero() && !x.univariate_in(kVarQ))
            throw not_univariate("poly_gcd_q: argument involves a");
    };
    check(p);
    check(r);
    auto normalize = [](LaurentPoly x) {
        if (x.is_zero()) return x;
        detail::strip_content(x);
        return x.scale(x.terms().back().coeff.reciprocal());  // monic (top term is lead)
    };
    std::vector<Rational> a, b;
    if (p.is_zero()) return normalize(r);
    if (r.is_zero()) return normalize(p);
    {
        LaurentPoly ps = p, rs = r;
        detail::strip_content(ps);
        detail::strip_content(rs);
        a = detail::to_dense_q(ps);
        b = detail::to_dense_q(rs);
    }
    while (!b.empty()) {
        auto [quot, rem] = detail::dense_divmod(std::move(a), b);
        (void)quot;
        a = std::move(b);
        b = std::move(rem);
        if (!b.empty()) {  // keep remainders monic to tame coefficient growth
            const Rational lead = b.back();
            for (Rational& c : b) c = c / lead;
        }
    }
    return normalize(detail::from_dense_q(a));
}

}  // namespace qsc

#endif
