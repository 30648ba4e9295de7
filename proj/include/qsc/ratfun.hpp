/**
 * @file ratfun.hpp
 * @brief Rational functions: expanded numerator over a factored denominator.
 *
 * The denominator's monomial unit is always folded into the numerator (monomials
 * are invertible in the Laurent ring), so denominators consist of atoms only.
 * No gcd reduction is attempted; equality cross-multiplies over the atom lcm.
 */
#ifndef QSC_RATFUN_HPP
#define QSC_RATFUN_HPP

#include <span>
#include <string>
#include <vector>

#include "qsc/factor_list.hpp"
#include "qsc/laurent.hpp"

namespace qsc {

class RatFun {
  public:
    RatFun() = default;
    RatFun(const Rational& c) : num_(lp_constant(c)) {}  // NOLINT: implicit by design
    RatFun(LaurentPoly num) : num_(std::move(num)) {}    // NOLINT: implicit by design
    RatFun(LaurentPoly num, FactorList den) : num_(std::move(num)), den_(std::move(den)) {
        normalize_();
    }

    const LaurentPoly& num() const { return num_; }
    const FactorList& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.factors().empty(); }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& x, const RatFun& y) {
        FactorList l = FactorList::lcm(x.den_, y.den_);
        LaurentPoly nx = x.num_, ny = y.num_;
        FactorList::divide(l, x.den_).multiply_into(nx);
        FactorList::divide(l, y.den_).multiply_into(ny);
        return RatFun(nx + ny, std::move(l));
    }
    friend RatFun operator-(const RatFun& x, const RatFun& y) { return x + (-y); }

    friend RatFun operator*(const RatFun& x, const RatFun& y) {
        return RatFun(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend RatFun operator*(const RatFun& x, const LaurentPoly& p) {
        return RatFun(x.num_ * p, x.den_);
    }
    friend RatFun operator*(const LaurentPoly& p, const RatFun& x) { return x * p; }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    // this / extra, keeping the factored shape.
    RatFun over(const FactorList& extra) const { return RatFun(num_, den_ * extra); }

    friend bool operator==(const RatFun& x, const RatFun& y) {
        if (x.is_zero()) return y.is_zero();
        if (y.is_zero()) return false;
        FactorList l = FactorList::lcm(x.den_, y.den_);
        LaurentPoly nx = x.num_, ny = y.num_;
        FactorList::divide(l, x.den_).multiply_into(nx);
        FactorList::divide(l, y.den_).multiply_into(ny);
        return nx == ny;
    }
    friend bool operator!=(const RatFun& x, const RatFun& y) { return !(x == y); }

    // a := v (rational constant). Throws pole_error if a denominator factor vanishes.
    RatFun specialize_a(const Rational& v) const { return specialize_a_monomial(v, 0); }

    // a := c * q^g. Throws pole_error if a denominator factor vanishes.
    RatFun specialize_a_monomial(const Rational& c, int g) const {
        FactorList d = den_.substitute_a_monomial(c, g);
        LaurentPoly n = num_.substitute_monomial(kVarA, c, qa_exp(g, 0));
        return RatFun(std::move(n), std::move(d));
    }

    // q := q^s, s >= 1.
    RatFun substitute_power_q(int s) const {
        return RatFun(num_.substitute_power(kVarQ, s), den_.substitute_power_q(s));
    }

    // Numeric evaluation; q == 0 is rejected by the Laurent eval when negative
    // exponents are present, vanishing denominator factors raise pole_error.
    Rational eval(const Rational& q, const Rational& a) const {
        return num_.eval({q, a}) / den_.eval(q, a);
    }
    Rational eval_q(const Rational& q) const { return eval(q, Rational(1)); }

    std::string to_string() const {
        std::string s = "(" + lp_to_string(num_) + ")";
        if (!den_.is_one()) s += " / (" + den_.to_string() + ")";
        return s;
    }

  private:
    void normalize_() {
        if (!den_.has_trivial_unit()) {
            num_ = num_.mul_monomial(den_.unit_coeff().reciprocal(), -den_.unit_exp());
            den_.clear_unit();
        }
        if (num_.is_zero()) den_ = FactorList::one();
    }

    LaurentPoly num_;
    FactorList den_;  // atoms only; unit folded into num_
};

/// Sum of terms over the lcm of their factored denominators. Left fold keeps the
/// result deterministic; requires at least one term.
inline RatFun rf_combine(std::span<const RatFun> terms) {
    if (terms.empty()) throw std::invalid_argument("rf_combine: no terms");
    RatFun acc = terms[0];
    for (size_t i = 1; i < terms.size(); ++i) acc += terms[i];
    return acc;
}
inline RatFun rf_combine(const std::vector<RatFun>& terms) {
    return rf_combine(std::span<const RatFun>(terms));
}

}  // namespace qsc

#endif
