/**
 * @file factor_list.hpp
 * @brief Products kept in factored form: a monomial unit times atoms (1 - c*q^e*a^d).
 *
 * Denominators are never expanded wholesale; they are multiplied, compared and
 * lcm'd factor by factor. Atoms are canonicalized so that the exponent pair (e, d)
 * is lexicographically positive: the flip (1 - c x) = (-c x)(1 - x^-1 / c) moves
 * the stray monomial into the unit, which makes atom equality structural.
 */
#ifndef QSC_FACTOR_LIST_HPP
#define QSC_FACTOR_LIST_HPP

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "qsc/laurent.hpp"

namespace qsc {

struct FactorAtom {
    Rational c;  // nonzero
    int eq = 0;
    int ea = 0;

    // (e, d) lexicographically positive.
    bool is_canonical() const { return eq > 0 || (eq == 0 && ea > 0); }

    LaurentPoly expand() const { return lp_one() - lp_monomial(c, eq, ea); }

    auto key() const { return std::tuple<int, int, const Rational&>(eq, ea, c); }
    friend bool operator==(const FactorAtom& x, const FactorAtom& y) {
        return x.eq == y.eq && x.ea == y.ea && x.c == y.c;
    }
    friend bool operator<(const FactorAtom& x, const FactorAtom& y) { return x.key() < y.key(); }

    std::string to_string() const {
        std::string s = "(1 - " + c.to_string() + "*q^" + std::to_string(eq);
        if (ea != 0) s += "*a^" + std::to_string(ea);
        return s + ")";
    }
};

class FactorList {
  public:
    FactorList() = default;
    static FactorList one() { return {}; }

    // Multiply by (1 - c*q^eq*a^ea)^mult, canonicalizing. A vanishing factor (c == 1
    // with zero exponents) cannot be represented and is rejected.
    void push(Rational c, int eq, int ea, int mult = 1) {
        if (mult == 0 || c.is_zero()) return;  // factor is 1
        if (mult < 0) throw std::invalid_argument("FactorList: negative multiplicity");
        if (eq == 0 && ea == 0) {
            if (c.is_one()) throw division_by_zero("FactorList: vanishing factor");
            unit_c_ = unit_c_ * (Rational(1) - c).pow(mult);
            return;
        }
        if (eq < 0 || (eq == 0 && ea < 0)) {
            // (1 - c q^e a^d) = (-c q^e a^d) * (1 - (1/c) q^-e a^-d)
            unit_c_ = unit_c_ * (-c).pow(mult);
            unit_e_ = unit_e_ + ExpVec<2>{{eq, ea}} * mult;
            c = c.reciprocal();
            eq = -eq;
            ea = -ea;
        }
        FactorAtom atom{std::move(c), eq, ea};
        auto it = std::lower_bound(f_.begin(), f_.end(), atom,
                                   [](const auto& p, const FactorAtom& x) { return p.first < x; });
        if (it != f_.end() && it->first == atom) it->second += mult;
        else f_.insert(it, {std::move(atom), mult});
    }

    void push_unit(const Rational& c, int eq, int ea = 0) {
        if (c.is_zero()) throw division_by_zero("FactorList: zero unit");
        unit_c_ = unit_c_ * c;
        unit_e_ = unit_e_ + qa_exp(eq, ea);
    }

    const std::vector<std::pair<FactorAtom, int>>& factors() const { return f_; }
    const Rational& unit_coeff() const { return unit_c_; }
    const ExpVec<2>& unit_exp() const { return unit_e_; }
    bool is_one() const { return f_.empty() && unit_c_.is_one() && unit_e_ == ExpVec<2>{}; }
    bool has_trivial_unit() const { return unit_c_.is_one() && unit_e_ == ExpVec<2>{}; }
    void clear_unit() {
        unit_c_ = Rational(1);
        unit_e_ = ExpVec<2>{};
    }

    FactorList& operator*=(const FactorList& o) {
        unit_c_ = unit_c_ * o.unit_c_;
        unit_e_ = unit_e_ + o.unit_e_;
        for (const auto& [atom, mult] : o.f_) {
            auto it = std::lower_bound(
                f_.begin(), f_.end(), atom,
                [](const auto& p, const FactorAtom& x) { return p.first < x; });
            if (it != f_.end() && it->first == atom) it->second += mult;
            else f_.insert(it, {atom, mult});
        }
        return *this;
    }
    friend FactorList operator*(FactorList x, const FactorList& y) { return x *= y; }

    FactorList pow(int k) const {
        if (k < 0) throw std::invalid_argument("FactorList::pow: negative exponent");
        FactorList r;
        if (k == 0) return r;
        r.unit_c_ = unit_c_.pow(k);
        r.unit_e_ = unit_e_ * k;
        r.f_ = f_;
        for (auto& [atom, mult] : r.f_) mult *= k;
        return r;
    }

    // Per-atom max multiplicity; units are dropped (they are invertible anyway).
    static FactorList lcm(const FactorList& x, const FactorList& y) {
        FactorList r;
        size_t i = 0, j = 0;
        while (i < x.f_.size() || j < y.f_.size()) {
            if (j == y.f_.size() || (i < x.f_.size() && x.f_[i].first < y.f_[j].first))
                r.f_.push_back(x.f_[i++]);
            else if (i == x.f_.size() || y.f_[j].first < x.f_[i].first)
                r.f_.push_back(y.f_[j++]);
            else {
                r.f_.push_back({x.f_[i].first, std::max(x.f_[i].second, y.f_[j].second)});
                ++i, ++j;
            }
        }
        return r;
    }

    // x / y at the atom level; y must divide x structurally. Units divide exactly.
    static FactorList divide(const FactorList& x, const FactorList& y) {
        FactorList r;
        r.unit_c_ = x.unit_c_ / y.unit_c_;
        r.unit_e_ = x.unit_e_ + (-y.unit_e_);
        size_t j = 0;
        for (const auto& [atom, mult] : x.f_) {
            int m = mult;
            if (j < y.f_.size() && y.f_[j].first == atom) m -= y.f_[j++].second;
            if (m < 0) throw std::invalid_argument("FactorList::divide: not a subproduct");
            if (m > 0) r.f_.push_back({atom, m});
        }
        if (j != y.f_.size()) throw std::invalid_argument("FactorList::divide: not a subproduct");
        return r;
    }

    // p *= this, one binomial merge per factor power; never expands the product.
    void multiply_into(LaurentPoly& p) const {
        p = p.mul_monomial(unit_c_, unit_e_);
        for (const auto& [atom, mult] : f_)
            for (int i = 0; i < mult; ++i) p = p - p.mul_monomial(atom.c, qa_exp(atom.eq, atom.ea));
    }

    LaurentPoly expand() const {
        LaurentPoly p = lp_one();
        multiply_into(p);
        return p;
    }

    // q := q^s on every factor and the unit.
    FactorList substitute_power_q(int s) const {
        FactorList r;
        r.unit_c_ = unit_c_;
        r.unit_e_ = qa_exp(unit_e_.e[kVarQ] * s, unit_e_.e[kVarA]);
        for (const auto& [atom, mult] : f_) r.push(atom.c, atom.eq * s, atom.ea, mult);
        return r;
    }

    // a := c0 * q^g. Throws pole_error if some factor vanishes identically.
    FactorList substitute_a_monomial(const Rational& c0, int g) const {
        if (c0.is_zero()) throw std::invalid_argument("FactorList: a := 0 not supported");
        FactorList r;
        r.unit_c_ = unit_c_ * c0.pow(unit_e_.e[kVarA]);
        r.unit_e_ = qa_exp(unit_e_.e[kVarQ] + unit_e_.e[kVarA] * g, 0);
        for (const auto& [atom, mult] : f_) {
            Rational c = atom.c * c0.pow(atom.ea);
            int eq = atom.eq + atom.ea * g;
            if (eq == 0 && c.is_one())
                throw pole_error("FactorList: factor " + atom.to_string() +
                                 " vanishes under a := " + c0.to_string() + "*q^" +
                                 std::to_string(g));
            r.push(std::move(c), eq, 0, mult);
        }
        return r;
    }

    // Evaluate at numeric q (and a). Throws pole_error on a vanishing factor.
    Rational eval(const Rational& q, const Rational& a) const {
        std::array<Rational, 2> pt{q, a};
        Rational r = unit_c_;
        if (unit_e_.e[kVarQ] != 0) r *= q.pow(unit_e_.e[kVarQ]);
        if (unit_e_.e[kVarA] != 0) r *= a.pow(unit_e_.e[kVarA]);
        for (const auto& [atom, mult] : f_) {
            Rational v = Rational(1) - atom.c * q.pow(atom.eq) * a.pow(atom.ea);
            if (v.is_zero()) throw pole_error("FactorList: factor vanishes at the sample point");
            r *= v.pow(mult);
        }
        return r;
    }

    std::string to_string() const {
        std::string s;
        if (!has_trivial_unit() || f_.empty()) {
            s = unit_c_.to_string();
            if (unit_e_.e[kVarQ] != 0) s += "*q^" + std::to_string(unit_e_.e[kVarQ]);
            if (unit_e_.e[kVarA] != 0) s += "*a^" + std::to_string(unit_e_.e[kVarA]);
        }
        for (const auto& [atom, mult] : f_) {
            if (!s.empty()) s += "*";
            s += atom.to_string();
            if (mult != 1) s += "^" + std::to_string(mult);
        }
        return s;
    }

    friend bool operator==(const FactorList& x, const FactorList& y) {
        return x.unit_c_ == y.unit_c_ && x.unit_e_ == y.unit_e_ && x.f_ == y.f_;
    }

  private:
    std::vector<std::pair<FactorAtom, int>> f_;  // sorted by atom key, mult >= 1
    Rational unit_c_{1};
    ExpVec<2> unit_e_{};
};

}  // namespace qsc

#endif
