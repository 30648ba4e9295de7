/**
 * @file laurent.hpp
 * @brief Sparse Laurent polynomials in N variables with exact rational coefficients.
 *
 * Terms are kept sorted by exponent vector, lexicographic with variable 0 (q) major,
 * ascending, and never hold a zero coefficient. That order is the canonical form used
 * by the text serialization, so equal polynomials serialize identically.
 */
#ifndef QSC_LAURENT_HPP
#define QSC_LAURENT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/rational.hpp"

namespace qsc {

template <int N>
struct ExpVec {
    std::array<int, N> e{};

    friend bool operator==(const ExpVec& x, const ExpVec& y) { return x.e == y.e; }
    friend bool operator!=(const ExpVec& x, const ExpVec& y) { return x.e != y.e; }
    friend bool operator<(const ExpVec& x, const ExpVec& y) { return x.e < y.e; }

    ExpVec operator+(const ExpVec& o) const {
        ExpVec r;
        for (int i = 0; i < N; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    ExpVec operator-() const {
        ExpVec r;
        for (int i = 0; i < N; ++i) r.e[i] = -e[i];
        return r;
    }
    ExpVec operator*(int s) const {
        ExpVec r;
        for (int i = 0; i < N; ++i) r.e[i] = e[i] * s;
        return r;
    }
};

template <int N>
struct ExpVecHash {
    size_t operator()(const ExpVec<N>& x) const {
        size_t h = 0xcbf29ce484222325ull;
        for (int v : x.e) {
            h ^= static_cast<size_t>(static_cast<uint32_t>(v));
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

template <int N>
class Laurent {
  public:
    struct Term {
        ExpVec<N> exp;
        Rational coeff;
    };

    Laurent() = default;

    static Laurent zero() { return {}; }
    static Laurent constant(const Rational& c) { return monomial(c, ExpVec<N>{}); }
    static Laurent monomial(const Rational& c, const ExpVec<N>& e) {
        Laurent r;
        if (!c.is_zero()) r.t_.push_back({e, c});
        return r;
    }

    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].exp == ExpVec<N>{}); }
    Rational constant_value() const {  // requires is_constant()
        return t_.empty() ? Rational(0) : t_[0].coeff;
    }

    // Coefficient of an exact exponent vector (0 if absent).
    Rational coeff(const ExpVec<N>& e) const {
        auto it = std::lower_bound(t_.begin(), t_.end(), e,
                                   [](const Term& t, const ExpVec<N>& k) { return t.exp < k; });
        return (it != t_.end() && it->exp == e) ? it->coeff : Rational(0);
    }

    int min_exp(int var) const {  // requires !is_zero()
        int m = t_[0].exp.e[var];
        for (const Term& t : t_) m = std::min(m, t.exp.e[var]);
        return m;
    }
    int max_exp(int var) const {  // requires !is_zero()
        int m = t_[0].exp.e[var];
        for (const Term& t : t_) m = std::max(m, t.exp.e[var]);
        return m;
    }
    // Degree span convenience; zero polynomial reports -1.
    long degree(int var) const { return is_zero() ? -1 : max_exp(var); }

    bool univariate_in(int var) const {
        for (const Term& t : t_)
            for (int i = 0; i < N; ++i)
                if (i != var && t.exp.e[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Laurent& x, const Laurent& y) {
        if (x.t_.size() != y.t_.size()) return false;
        for (size_t i = 0; i < x.t_.size(); ++i)
            if (x.t_[i].exp != y.t_[i].exp || x.t_[i].coeff != y.t_[i].coeff) return false;
        return true;
    }
    friend bool operator!=(const Laurent& x, const Laurent& y) { return !(x == y); }

    friend Laurent operator+(const Laurent& x, const Laurent& y) { return merge_(x, y, false); }
    friend Laurent operator-(const Laurent& x, const Laurent& y) { return merge_(x, y, true); }

    Laurent operator-() const {
        Laurent r = *this;
        for (Term& t : r.t_) t.coeff = -t.coeff;
        return r;
    }

    Laurent scale(const Rational& c) const {
        if (c.is_zero()) return {};
        Laurent r = *this;
        for (Term& t : r.t_) t.coeff = t.coeff * c;
        return r;
    }

    // this * (c * x^e); preserves term order.
    Laurent mul_monomial(const Rational& c, const ExpVec<N>& e) const {
        if (c.is_zero()) return {};
        Laurent r;
        r.t_.reserve(t_.size());
        for (const Term& t : t_) r.t_.push_back({t.exp + e, t.coeff * c});
        return r;
    }

    friend Laurent operator*(const Laurent& x, const Laurent& y) {
        if (x.is_zero() || y.is_zero()) return {};
        const Laurent& a = x.t_.size() <= y.t_.size() ? x : y;
        const Laurent& b = x.t_.size() <= y.t_.size() ? y : x;
        if (a.t_.size() <= 8) {
            Laurent acc;
            for (const Term& t : a.t_) acc = acc + b.mul_monomial(t.coeff, t.exp);
            return acc;
        }
        std::unordered_map<ExpVec<N>, Rational, ExpVecHash<N>> m;
        m.reserve(a.t_.size() + b.t_.size());
        for (const Term& ta : a.t_)
            for (const Term& tb : b.t_) {
                auto [it, fresh] = m.try_emplace(ta.exp + tb.exp, Rational(0));
                it->second += ta.coeff * tb.coeff;
            }
        Laurent r;
        r.t_.reserve(m.size());
        for (auto& [e, c] : m)
            if (!c.is_zero()) r.t_.push_back({e, std::move(c)});
        std::sort(r.t_.begin(), r.t_.end(),
                  [](const Term& u, const Term& v) { return u.exp < v.exp; });
        return r;
    }

    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent pow(long k) const {
        if (k < 0) throw std::invalid_argument("Laurent::pow: negative exponent");
        Laurent r = constant(Rational(1));
        Laurent b = *this;
        while (k > 0) {
            if (k & 1) r = r * b;
            b = (k >>= 1) > 0 ? b * b : b;
        }
        return r;
    }

    // var := var^s (e.g. q := q^2). Requires s >= 1 so the map stays injective.
    Laurent substitute_power(int var, int s) const {
        if (s < 1) throw std::invalid_argument("substitute_power: step must be >= 1");
        Laurent r = *this;
        for (Term& t : r.t_) t.exp.e[var] *= s;
        std::sort(r.t_.begin(), r.t_.end(),
                  [](const Term& u, const Term& v) { return u.exp < v.exp; });
        return r;
    }

    // var := c * x^m where m does not involve var. Exponents of var may be negative,
    // in which case c must be nonzero.
    Laurent substitute_monomial(int var, const Rational& c, const ExpVec<N>& m) const {
        std::unordered_map<ExpVec<N>, Rational, ExpVecHash<N>> acc;
        for (const Term& t : t_) {
            int ev = t.exp.e[var];
            if (c.is_zero() && ev != 0) {
                if (ev < 0) throw division_by_zero("substitute_monomial: zero to negative power");
                continue;
            }
            ExpVec<N> e = t.exp;
            e.e[var] = 0;
            e = e + m * ev;
            Rational co = t.coeff * (ev == 0 ? Rational(1) : c.pow(ev));
            auto [it, fresh] = acc.try_emplace(e, Rational(0));
            it->second += co;
        }
        Laurent r;
        r.t_.reserve(acc.size());
        for (auto& [e, co] : acc)
            if (!co.is_zero()) r.t_.push_back({e, std::move(co)});
        std::sort(r.t_.begin(), r.t_.end(),
                  [](const Term& u, const Term& v) { return u.exp < v.exp; });
        return r;
    }

    Rational eval(const std::array<Rational, N>& x) const {
        Rational s(0);
        for (const Term& t : t_) {
            Rational v = t.coeff;
            for (int i = 0; i < N; ++i) {
                if (t.exp.e[i] == 0) continue;
                if (x[i].is_zero() && t.exp.e[i] < 0)
                    throw division_by_zero("Laurent::eval: zero raised to negative power");
                v *= x[i].pow(t.exp.e[i]);
            }
            s += v;
        }
        return s;
    }

    // Canonical text form, e.g. "-1*q^-1 + 2*q^0*a^1". Variable 0 is always shown;
    // later variables only when their exponent is nonzero.
    std::string to_string(const std::array<const char*, N>& names) const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const Term& t : t_) {
            if (!first) s += " + ";
            first = false;
            s += t.coeff.to_string();
            s += "*";
            s += names[0];
            s += "^" + std::to_string(t.exp.e[0]);
            for (int i = 1; i < N; ++i) {
                if (t.exp.e[i] == 0) continue;
                s += "*";
                s += names[i];
                s += "^" + std::to_string(t.exp.e[i]);
            }
        }
        return s;
    }

    // Inverse of to_string for the same name table.
    static Laurent from_string(const std::string& s, const std::array<const char*, N>& names) {
        Laurent r;
        if (s.empty()) throw parse_error("Laurent: empty input");
        if (s == "0") return r;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find(" + ", pos);
            std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
            pos = next == std::string::npos ? s.size() : next + 3;
            if (pos >= s.size() && next != std::string::npos)
                throw parse_error("Laurent: dangling separator in '" + s + "'");

            std::vector<std::string> parts;
            size_t p = 0;
            while (p < term.size()) {
                size_t star = term.find('*', p);
                parts.push_back(term.substr(p, star == std::string::npos ? star : star - p));
                p = star == std::string::npos ? term.size() : star + 1;
            }
            if (parts.empty()) throw parse_error("Laurent: empty term in '" + s + "'");
            Rational c(parts[0]);
            ExpVec<N> e{};
            for (size_t i = 1; i < parts.size(); ++i) {
                size_t caret = parts[i].find('^');
                if (caret == std::string::npos)
                    throw parse_error("Laurent: bad factor '" + parts[i] + "'");
                std::string nm = parts[i].substr(0, caret);
                int var = -1;
                for (int j = 0; j < N; ++j)
                    if (nm == names[j]) var = j;
                if (var < 0) throw parse_error("Laurent: unknown variable '" + nm + "'");
                e.e[var] = std::stoi(parts[i].substr(caret + 1));
            }
            r = r + monomial(c, e);
        }
        return r;
    }

  private:
    static Laurent merge_(const Laurent& x, const Laurent& y, bool subtract) {
        Laurent r;
        r.t_.reserve(x.t_.size() + y.t_.size());
        size_t i = 0, j = 0;
        while (i < x.t_.size() || j < y.t_.size()) {
            bool takex;
            if (i == x.t_.size()) takex = false;
            else if (j == y.t_.size()) takex = true;
            else if (x.t_[i].exp == y.t_[j].exp) {
                Rational c = subtract ? x.t_[i].coeff - y.t_[j].coeff
                                      : x.t_[i].coeff + y.t_[j].coeff;
                if (!c.is_zero()) r.t_.push_back({x.t_[i].exp, std::move(c)});
                ++i, ++j;
                continue;
            } else takex = x.t_[i].exp < y.t_[j].exp;
            if (takex) r.t_.push_back(x.t_[i++]);
            else {
                Term t = y.t_[j++];
                if (subtract) t.coeff = -t.coeff;
                r.t_.push_back(std::move(t));
            }
        }
        return r;
    }

    std::vector<Term> t_;  // sorted ascending by exp, no zero coefficients
};

// ---- bivariate (q, a) instantiation: the library's main coefficient ring ----

using LaurentPoly = Laurent<2>;
inline constexpr int kVarQ = 0;
inline constexpr int kVarA = 1;
inline constexpr std::array<const char*, 2> kQANames{"q", "a"};

inline ExpVec<2> qa_exp(int eq, int ea) { return ExpVec<2>{{eq, ea}}; }

inline LaurentPoly lp_monomial(const Rational& c, int eq, int ea = 0) {
    return LaurentPoly::monomial(c, qa_exp(eq, ea));
}
inline LaurentPoly lp_constant(const Rational& c) { return LaurentPoly::constant(c); }
inline LaurentPoly lp_one() { return lp_constant(Rational(1)); }
inline LaurentPoly lp_q(int e = 1) { return lp_monomial(Rational(1), e, 0); }
inline LaurentPoly lp_a(int e = 1) { return lp_monomial(Rational(1), 0, e); }

inline std::string lp_to_string(const LaurentPoly& p) { return p.to_string(kQANames); }
inline LaurentPoly lp_from_string(const std::string& s) {
    return LaurentPoly::from_string(s, kQANames);
}

// ---- trivariate (q, u, v) frame for symbolic-in-(n,k) checks ----

using FramePoly = Laurent<3>;
inline constexpr std::array<const char*, 3> kQUVNames{"q", "u", "v"};

inline ExpVec<3> quv_exp(int eq, int eu, int ev) { return ExpVec<3>{{eq, eu, ev}}; }
inline FramePoly fp_monomial(const Rational& c, int eq, int eu = 0, int ev = 0) {
    return FramePoly::monomial(c, quv_exp(eq, eu, ev));
}
inline FramePoly fp_one() { return FramePoly::constant(Rational(1)); }
inline std::string fp_to_string(const FramePoly& p) { return p.to_string(kQUVNames); }

}  // namespace qsc

#endif
