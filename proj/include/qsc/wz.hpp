/**
 * @file wz.hpp
 * @brief The telescoping pair (F, G), its classical shadow (f, g), the three
 *        hypergeometric sums they certify, and the closed forms of those sums.
 *
 * Conventions: 1/(x)_m = 0 and 1/(q^2;q^2)_m = 0 for negative m, so terms
 * vanish outside the summation triangle. Negative k is rejected outright; the
 * shifted factorials are not extended below 0.
 */
#ifndef QSC_WZ_HPP
#define QSC_WZ_HPP

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsc/qkit.hpp"
#include "qsc/ratfun.hpp"

namespace qsc {

/// Rising factorial (x)_m = x(x+1)...(x+m-1); empty product for m = 0.
inline Rational rational_pochhammer(const Rational& x, long m) {
    if (m < 0) throw std::invalid_argument("rational_pochhammer: negative length");
    Rational r(1);
    for (long i = 0; i < m; ++i) r = r * (x + Rational(i));
    return r;
}

/// f(n,k) = (-1)^k (4n-1) (-1/2)_n^3 (-1/2)_{n+k} / [(1)_n^3 (1)_{n-k} (-1/2)_k^2]
inline Rational classical_f(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("classical_f: negative index");
    if (n - k < 0) return Rational(0);  // 1/(1)_{n-k} = 0
    const Rational mh(-1, 2);
    Rational num = Rational(4 * n - 1) * rational_pochhammer(mh, n).pow(3) *
                   rational_pochhammer(mh, n + k);
    Rational den = rational_pochhammer(Rational(1), n).pow(3) *
                   rational_pochhammer(Rational(1), n - k) *
                   rational_pochhammer(mh, k).pow(2);
    Rational r = num / den;
    return k % 2 == 0 ? r : -r;
}

/// g(n,k) = (-1)^{k-1} 4 (-1/2)_n^3 (-1/2)_{n+k-1} / [(1)_{n-1}^3 (1)_{n-k} (-1/2)_k^2]
inline Rational classical_g(long n, long k) {
    if (n < 0 || k < 0 || n + k < 1) throw std::invalid_argument("classical_g: index outside domain");
    if (n == 0 || n - k < 0) return Rational(0);  // 1/(1)_{-1} = 0 kills n = 0
    const Rational mh(-1, 2);
    Rational num = Rational(4) * rational_pochhammer(mh, n).pow(3) *
                   rational_pochhammer(mh, n + k - 1);
    Rational den = rational_pochhammer(Rational(1), n - 1).pow(3) *
                   rational_pochhammer(Rational(1), n - k) *
                   rational_pochhammer(mh, k).pow(2);
    Rational r = num / den;
    return k % 2 == 1 ? r : -r;
}

/// Outcome of a rectangular relation sweep; (n, k) is the first failing cell.
struct GridReport {
    bool ok = true;
    long n = -1;
    long k = -1;
};

/// Sweeps (2k-3) f(n,k-1) - (2k-4) f(n,k) = g(n+1,k) - g(n,k) over
/// 0 <= n <= n_max, 1 <= k <= k_max. The pair is injectable so a deliberately
/// perturbed g can be shown to trip the check.
template <typename Ff, typename Gf>
GridReport check_classical_relation(long n_max, long k_max, Ff&& f, Gf&& g) {
    if (n_max < 1 || k_max < 1)
        throw std::invalid_argument("check_classical_relation: bounds must be >= 1");
    for (long n = 0; n <= n_max; ++n)
        for (long k = 1; k <= k_max; ++k) {
            Rational lhs = Rational(2 * k - 3) * f(n, k - 1) - Rational(2 * k - 4) * f(n, k);
            Rational rhs = g(n + 1, k) - g(n, k);
            if (lhs != rhs) return {false, n, k};
        }
    return {};
}

inline GridReport check_classical_relation(long n_max, long k_max) {
    return check_classical_relation(n_max, k_max, classical_f, classical_g);
}

/// F(n,k) = (-1)^k q^{(k-2)(k-2n+1)} [4n-1] (q^{-1};q^2)_n^3 (q^{-1};q^2)_{n+k}
///          / [(q^2;q^2)_n^3 (q^2;q^2)_{n-k} (q^{-1};q^2)_k^2]
inline RatFun q_F(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("q_F: negative index");
    if (n - k < 0) return RatFun();  // 1/(q^2;q^2)_{n-k} = 0
    const long e = (k - 2) * (k - 2 * n + 1);
    LaurentPoly num = q_int(4 * n - 1).mul_monomial(Rational(k % 2 == 0 ? 1 : -1),
                                                    qa_exp(static_cast<int>(e), 0));
    q_pochhammer(Rational(1), -1, 0, 2, n).pow(3).multiply_into(num);
    q_pochhammer(Rational(1), -1, 0, 2, n + k).multiply_into(num);
    FactorList den = q_pochhammer(Rational(1), 2, 0, 2, n).pow(3);
    den *= q_pochhammer(Rational(1), 2, 0, 2, n - k);
    den *= q_pochhammer(Rational(1), -1, 0, 2, k).pow(2);
    return RatFun(std::move(num), std::move(den));
}

/// G(n,k) = (-1)^{k-1} q^{(k-2)(k-2n+3)} (q^{-1};q^2)_n^3 (q^{-1};q^2)_{n+k-1}
///          / [(1-q)^2 (q^2;q^2)_{n-1}^3 (q^2;q^2)_{n-k} (q^{-1};q^2)_k^2]
inline RatFun q_G(long n, long k) {
    if (n < 0 || k < 0 || n + k < 1) throw std::invalid_argument("q_G: index outside domain");
    if (n == 0 || n - k < 0) return RatFun();  // 1/(q^2;q^2)_{-1} = 0 kills n = 0
    const long e = (k - 2) * (k - 2 * n + 3);
    LaurentPoly num = lp_monomial(Rational(k % 2 == 1 ? 1 : -1), static_cast<int>(e), 0);
    q_pochhammer(Rational(1), -1, 0, 2, n).pow(3).multiply_into(num);
    q_pochhammer(Rational(1), -1, 0, 2, n + k - 1).multiply_into(num);
    FactorList den;
    den.push(Rational(1), 1, 0, 2);  // (1-q)^2
    den *= q_pochhammer(Rational(1), 2, 0, 2, n - 1).pow(3);
    den *= q_pochhammer(Rational(1), 2, 0, 2, n - k);
    den *= q_pochhammer(Rational(1), -1, 0, 2, k).pow(2);
    return RatFun(std::move(num), std::move(den));
}

/// [2k-3] F(n,k-1) - [2k-4] F(n,k) = G(n+1,k) - G(n,k), exactly, at one cell.
inline bool check_qwz_relation(long n, long k) {
    if (k < 1) throw std::invalid_argument("check_qwz_relation: k must be >= 1");
    RatFun lhs = q_F(n, k - 1) * q_int(2 * k - 3) - q_F(n, k) * q_int(2 * k - 4);
    RatFun rhs = q_G(n + 1, k) - q_G(n, k);
    return lhs == rhs;
}

inline GridReport check_qwz_grid(long n_max, long k_max) {
    if (n_max < 1 || k_max < 1)
        throw std::invalid_argument("check_qwz_grid: bounds must be >= 1");
    for (long n = 0; n <= n_max; ++n)
        for (long k = 1; k <= k_max; ++k)
            if (!check_qwz_relation(n, k)) return {false, n, k};
    return {};
}

/// Summand of the quartic sum: [4k-1] (q^{-1};q^2)_k^4 / (q^2;q^2)_k^4 q^{4k}.
inline RatFun sum_term_quartic(long k) {
    if (k < 0) throw std::invalid_argument("sum_term_quartic: negative index");
    LaurentPoly num =
        q_int(4 * k - 1).mul_monomial(Rational(1), qa_exp(static_cast<int>(4 * k), 0));
    q_pochhammer(Rational(1), -1, 0, 2, k).pow(4).multiply_into(num);
    return RatFun(std::move(num), q_pochhammer(Rational(1), 2, 0, 2, k).pow(4));
}

/// Summand of the parametric sum (bivariate in q, a):
/// [4k-1] (aq^{-1};q^2)_k (q^{-1}/a;q^2)_k (q^{-1};q^2)_k^2
///        / [(aq^2;q^2)_k (q^2/a;q^2)_k (q^2;q^2)_k^2] q^{4k}.
inline RatFun sum_term_param(long k) {
    if (k < 0) throw std::invalid_argument("sum_term_param: negative index");
    LaurentPoly num =
        q_int(4 * k - 1).mul_monomial(Rational(1), qa_exp(static_cast<int>(4 * k), 0));
    q_pochhammer(Rational(1), -1, 1, 2, k).multiply_into(num);
    q_pochhammer(Rational(1), -1, -1, 2, k).multiply_into(num);
    q_pochhammer(Rational(1), -1, 0, 2, k).pow(2).multiply_into(num);
    FactorList den = q_pochhammer(Rational(1), 2, 1, 2, k);
    den *= q_pochhammer(Rational(1), 2, -1, 2, k);
    den *= q_pochhammer(Rational(1), 2, 0, 2, k).pow(2);
    return RatFun(std::move(num), std::move(den));
}

/// Summand of the base-q^2 squared sum: [4k-1] (q^{-2};q^4)_k^2 / (q^4;q^4)_k^2 q^{4k}.
inline RatFun sum_term_squared(long k) {
    if (k < 0) throw std::invalid_argument("sum_term_squared: negative index");
    LaurentPoly num =
        q_int(4 * k - 1).mul_monomial(Rational(1), qa_exp(static_cast<int>(4 * k), 0));
    q_pochhammer(Rational(1), -2, 0, 4, k).pow(2).multiply_into(num);
    return RatFun(std::move(num), q_pochhammer(Rational(1), 4, 0, 4, k).pow(2));
}

/// sum_{k=0}^{upper} term(k) over the common factored denominator.
template <typename TermFn>
RatFun direct_sum(long upper, TermFn&& term) {
    if (upper < 0) throw std::invalid_argument("direct_sum: negative upper bound");
    std::vector<RatFun> terms;
    terms.reserve(static_cast<size_t>(upper) + 1);
    for (long k = 0; k <= upper; ++k) terms.push_back(term(k));
    return rf_combine(terms);
}

inline void require_odd_(long m, const char* who) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": requires odd argument >= 3");
}

/// Closed form of sum_{k=0}^{(m+1)/2} of the quartic summand, m odd:
/// -((1+q)[m]^4[m+1][m+2] + q^{m+1}[m]^4) / (q [m+1]^4 (-q;q)_{(m-1)/2}^8)
/// times the central Gaussian binomial of order m-1 to the fourth power.
/// [m+1]^4 is cleared to the atom (1-q^{m+1})^4 by scaling with (1-q)^4.
inline RatFun closed_form_half(long m) {
    require_odd_(m, "closed_form_half");
    const long h = (m - 1) / 2;
    const LaurentPoly brm4 = q_int(m).pow(4);
    LaurentPoly num = (lp_one() + lp_q()) * brm4 * q_int(m + 1) * q_int(m + 2) +
                      brm4.mul_monomial(Rational(1), qa_exp(static_cast<int>(m + 1), 0));
    num = -num;
    num *= (lp_one() - lp_q()).pow(4);
    num *= q_binom(m - 1, h).pow(4);
    FactorList den;
    den.push_unit(Rational(1), 1, 0);                       // q
    den.push(Rational(1), static_cast<int>(m + 1), 0, 4);   // (1-q^{m+1})^4
    den *= q_pochhammer(Rational(-1), 1, 0, 1, h).pow(8);   // (-q;q)_{(m-1)/2}^8
    return RatFun(std::move(num), std::move(den));
}

/// Closed form of sum_{k=0}^{m-1} of the quartic summand, m odd:
/// -((1+q)[2m-2][2m-1] + q^{2m-2}) / (q (-q;q)_{m-1}^8) times the central
/// Gaussian binomial of order 2m-2 to the fourth power.
inline RatFun closed_form_full(long m) {
    require_odd_(m, "closed_form_full");
    LaurentPoly num = (lp_one() + lp_q()) * q_int(2 * m - 2) * q_int(2 * m - 1) +
                      lp_q(static_cast<int>(2 * m - 2));
    num = -num;
    num *= q_binom(2 * m - 2, m - 1).pow(4);
    FactorList den;
    den.push_unit(Rational(1), 1, 0);                          // q
    den *= q_pochhammer(Rational(-1), 1, 0, 1, m - 1).pow(8);  // (-q;q)_{m-1}^8
    return RatFun(std::move(num), std::move(den));
}

/// Closed form of sum_{k=0}^{N} of the parametric summand (bivariate):
/// (aq;q^2)_N (q/a;q^2)_N ((a+1)^2 q^{2N+1} - a(1+q)(1+q^{4N+1}))
///   / (q (a-q)(1-aq) (aq^2;q^2)_N (q^2/a;q^2)_N (-q;q)_N^4)
/// times the square of the central Gaussian binomial of order 2N.
/// (a - q) enters the factored denominator as a * (1 - q a^{-1}).
inline RatFun closed_form_param(long N) {
    if (N < 0) throw std::invalid_argument("closed_form_param: negative upper bound");
    const LaurentPoly ap1 = lp_a() + lp_one();
    LaurentPoly num =
        (ap1 * ap1).mul_monomial(Rational(1), qa_exp(static_cast<int>(2 * N + 1), 0)) -
        lp_a() * (lp_one() + lp_q()) * (lp_one() + lp_q(static_cast<int>(4 * N + 1)));
    num *= q_binom(2 * N, N).pow(2);
    q_pochhammer(Rational(1), 1, 1, 2, N).multiply_into(num);   // (aq;q^2)_N
    q_pochhammer(Rational(1), 1, -1, 2, N).multiply_into(num);  // (q/a;q^2)_N
    FactorList den;
    den.push_unit(Rational(1), 1, 1);  // q * a, the unit part of q(a-q)...
    den.push(Rational(1), 1, -1);      // (1 - q/a)
    den.push(Rational(1), 1, 1);       // (1 - aq)
    den *= q_pochhammer(Rational(1), 2, 1, 2, N);
    den *= q_pochhammer(Rational(1), 2, -1, 2, N);
    den *= q_pochhammer(Rational(-1), 1, 0, 1, N).pow(4);
    return RatFun(std::move(num), std::move(den));
}

/// Closed form of sum_{k=0}^{N} of the base-q^2 squared summand:
/// -(1+q^{4N+1}) / (q (1+q) (-q^2;q^2)_N^4) times the square of the central
/// Gaussian binomial of order 2N in base q^2.
inline RatFun closed_form_aneg1(long N) {
    if (N < 0) throw std::invalid_argument("closed_form_aneg1: negative upper bound");
    LaurentPoly num = -(lp_one() + lp_q(static_cast<int>(4 * N + 1)));
    num *= q_binom(2 * N, N).substitute_power(kVarQ, 2).pow(2);
    FactorList den;
    den.push_unit(Rational(1), 1, 0);                          // q
    den.push(Rational(-1), 1, 0);                              // (1+q)
    den *= q_pochhammer(Rational(-1), 2, 0, 2, N).pow(4);      // (-q^2;q^2)_N^4
    return RatFun(std::move(num), std::move(den));
}

/// The two boundary values G((m+3)/2, k), k = 1, 2, in their reduced shapes:
/// k=1:  q^{m-3} [m]^4 / ([m+1]^4 (-q;q)_{(m-1)/2}^8) * C^4
/// k=2: -q^{-2} [m]^4 [m+2] / ([m+1]^3 (-q;q)_{(m-1)/2}^8) * C^4
/// with C the central Gaussian binomial of order m-1.
inline RatFun boundary_term(long m, int k) {
    require_odd_(m, "boundary_term");
    if (k != 1 && k != 2) throw std::invalid_argument("boundary_term: k must be 1 or 2");
    const long h = (m - 1) / 2;
    LaurentPoly num = q_int(m).pow(4) * q_binom(m - 1, h).pow(4);
    FactorList den = q_pochhammer(Rational(-1), 1, 0, 1, h).pow(8);
    if (k == 1) {
        num = num.mul_monomial(Rational(1), qa_exp(static_cast<int>(m - 3), 0));
        num *= (lp_one() - lp_q()).pow(4);
        den.push(Rational(1), static_cast<int>(m + 1), 0, 4);
    } else {
        num = num.mul_monomial(Rational(-1), qa_exp(-2, 0)) * q_int(m + 2);
        num *= (lp_one() - lp_q()).pow(3);
        den.push(Rational(1), static_cast<int>(m + 1), 0, 3);
    }
    return RatFun(std::move(num), std::move(den));
}

}  // namespace qsc

#endif
