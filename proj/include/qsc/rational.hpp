/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers on top of GMP.
 */
#ifndef QSC_RATIONAL_HPP
#define QSC_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "qsc/errors.hpp"

namespace qsc {

// Invariants: denominator > 0, gcd(num, den) == 1, zero is 0/1.
// mpq arithmetic preserves canonical form; constructors establish it.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rational(long num, long den) {
        if (den == 0) throw division_by_zero("Rational: zero denominator");
        v_ = mpq_class(mpz_class(num), mpz_class(den));
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw division_by_zero("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& num) : v_(num) {}
    // Accepts "num" or "num/den", base 10.
    explicit Rational(const std::string& s) {
        if (v_.set_str(s, 10) != 0) throw parse_error("Rational: bad literal '" + s + "'");
        if (v_.get_den() == 0) throw division_by_zero("Rational: zero denominator");
        v_.canonicalize();
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.v_ + y.v_));
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.v_ - y.v_));
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.v_ * y.v_));
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero()) throw division_by_zero("Rational: divide by zero");
        return Rational(mpq_class(x.v_ / y.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
    friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
    friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
    friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

    Rational reciprocal() const {
        if (is_zero()) throw division_by_zero("Rational: reciprocal of zero");
        return Rational(mpz_class(v_.get_den()), mpz_class(v_.get_num()));
    }

    // x^e with integer e; negative e inverts first.
    Rational pow(long e) const {
        if (e < 0) return reciprocal().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        Rational r;
        r.v_ = mpq_class(n, d);  // already canonical: gcd(n,d)=1, d>0
        return r;
    }

    std::string to_string() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
        return os << x.to_string();
    }

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace qsc

#endif
