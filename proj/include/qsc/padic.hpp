/**
 * @file padic.hpp
 * @brief Integer supercongruences at q = 1, verified through p-adic valuation
 *        of exact rational sums.
 *
 * x == y (mod p^e) for rationals means v_p(x - y) >= e; the valuation is taken
 * on the reduced fraction, which makes it authoritative even when individual
 * summand denominators contain p (they can, since k+1 runs past p within the
 * summation range).
 */
#ifndef QSC_PADIC_HPP
#define QSC_PADIC_HPP

#include <chrono>
#include <optional>
#include <sstream>
#include <string>

#include "qsc/congruence.hpp"
#include "qsc/rational.hpp"

namespace qsc {

/// v_p(x) of the reduced fraction; nullopt encodes +infinity (x = 0).
inline std::optional<long> padic_val(const Rational& x, long p) {
    if (p < 2) throw std::invalid_argument("padic_val: p must be >= 2");
    if (x.is_zero()) return std::nullopt;
    const mpz_class pp(static_cast<unsigned long>(p));
    long v = 0;
    mpz_class num = x.numerator();
    while (mpz_divisible_p(num.get_mpz_t(), pp.get_mpz_t())) {
        num /= pp;
        ++v;
    }
    if (v == 0) {
        mpz_class den = x.denominator();
        while (mpz_divisible_p(den.get_mpz_t(), pp.get_mpz_t())) {
            den /= pp;
            --v;
        }
    }
    return v;
}

enum class PFamily { Cor42, Cor44 };

inline const char* pfamily_name(PFamily f) { return f == PFamily::Cor42 ? "cor42" : "cor44"; }

/// One integer supercongruence instance; target and modulus exponent are
/// functions of (family, r) only.
struct PadicClaim {
    long p = 3;
    long r = 1;
    PFamily family = PFamily::Cor42;
    Variant variant = Variant::Half;

    long upper() const {
        const long n = pow_long(p, r);
        return variant == Variant::Half ? (n - 1) / 2 : n - 2;
    }
    Rational target() const {
        return family == PFamily::Cor42 ? Rational(1) - Rational(5) * Rational(p).pow(4 * r)
                                        : Rational(1) - Rational(p).pow(2 * r);
    }
    long required_valuation() const { return family == PFamily::Cor42 ? 4 * r + 1 : 2 * r + 1; }
};

/// sum_{k=0}^{upper} (4k+3)/(16 (k+1)^4 256^k) C(2k,k)^4   (quartic family)
/// sum_{k=0}^{upper} (4k+3)/(4 (k+1)^2 16^k) C(2k,k)^2     (squared family)
/// The central binomial advances incrementally: C(2k+2,k+1) = C(2k,k)*2(2k+1)/(k+1).
inline Rational corollary_sum(const PadicClaim& c) {
    const long upper = c.upper();
    const bool quartic = c.family == PFamily::Cor42;
    const Rational base(quartic ? 256 : 16);
    Rational sum(0), binom(1), weight(1);  // weight = base^k
    for (long k = 0; k <= upper; ++k) {
        if (k > 0) {
            binom *= Rational(2 * (2 * k - 1), k);
            weight *= base;
        }
        const Rational kp1(k + 1);
        sum += quartic ? Rational(4 * k + 3) * binom.pow(4) /
                             (Rational(16) * kp1.pow(4) * weight)
                       : Rational(4 * k + 3) * binom.pow(2) /
                             (Rational(4) * kp1.pow(2) * weight);
    }
    return sum;
}

struct PadicReport {
    std::string claim;
    long p = 0, r = 0;
    std::string family, variant;
    Verdict verdict = Verdict::Error;
    std::string detail;
    Rational sum;
    bool valuation_infinite = false;  ///< difference was exactly zero
    long valuation_found = 0;         ///< meaningful unless valuation_infinite
    long valuation_required = 0;
    double elapsed_ms = 0.0;

    bool passed() const { return verdict == Verdict::Pass; }
};

/// Pass iff v_p(sum - target) >= modulus exponent. The found valuation is
/// always reported; exceeding the requirement is informative sharpness data,
/// not a different verdict.
inline PadicReport verify_padic(const PadicClaim& c) {
    const auto t0 = std::chrono::steady_clock::now();
    PadicReport rep;
    rep.p = c.p;
    rep.r = c.r;
    rep.family = pfamily_name(c.family);
    rep.variant = variant_name(c.variant);
    {
        std::ostringstream s;
        s << "corollary-padic/" << rep.family << "/" << rep.variant << " p=" << c.p
          << " r=" << c.r;
        rep.claim = s.str();
    }
    if (c.r < 1) {
        rep.detail = "r must be >= 1";
        return rep;
    }
    if (!is_odd_prime(c.p)) {
        rep.detail = "NotPrime: p is not an odd prime";
        return rep;
    }

    rep.sum = corollary_sum(c);
    rep.valuation_required = c.required_valuation();
    const auto v = padic_val(rep.sum - c.target(), c.p);
    if (!v) {
        rep.valuation_infinite = true;
        rep.verdict = Verdict::Pass;
        rep.detail = "difference is exactly zero";
    } else {
        rep.valuation_found = *v;
        rep.verdict = *v >= rep.valuation_required ? Verdict::Pass : Verdict::Fail;
        std::ostringstream d;
        d << "v_" << c.p << "(sum - target) = " << *v << ", required >= "
          << rep.valuation_required;
        rep.detail = d.str();
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

}  // namespace qsc

#endif
