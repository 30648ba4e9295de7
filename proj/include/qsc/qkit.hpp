/**
 * @file qkit.hpp
 * @brief q-combinatorial primitives: q-integers, q-shifted factorials,
 *        Gaussian binomials, cyclotomic polynomials.
 */
#ifndef QSC_QKIT_HPP
#define QSC_QKIT_HPP

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsc/laurent.hpp"
#include "qsc/factor_list.hpp"
#include "qsc/poly_div.hpp"

namespace qsc {

/// [n] = (1 - q^n)/(1 - q) for any signed n; [0] = 0, [-n] = -q^{-n}[n].
inline LaurentPoly q_int(long n) {
    LaurentPoly p;
    if (n > 0) {
        for (long j = 0; j < n; ++j) p += lp_q(static_cast<int>(j));
    } else if (n < 0) {
        for (long j = n; j < 0; ++j) p -= lp_q(static_cast<int>(j));
    }
    return p;
}

/// (x; q^step)_k with x = c*q^{e_q}*a^{e_a}: the factor list
/// prod_{j=0}^{k-1} (1 - c*q^{e_q + j*step}*a^{e_a}). Empty product for k = 0.
inline FactorList q_pochhammer(const Rational& c, int e_q, int e_a, int step, long k) {
    if (step < 1) throw std::invalid_argument("q_pochhammer: step must be positive");
    if (k < 0) throw std::invalid_argument("q_pochhammer: negative length");
    FactorList f;
    for (long j = 0; j < k; ++j) f.push(c, e_q + static_cast<int>(j) * step, e_a);
    return f;
}

/// Gaussian binomial as a polynomial in q; zero when k < 0 or k > n.
/// Built by the product formula with interleaved exact division, so every
/// intermediate is itself a Gaussian binomial (hence a polynomial).
inline LaurentPoly q_binom(long n, long k) {
    if (n < 0) throw std::invalid_argument("q_binom: negative n");
    if (k < 0 || k > n) return LaurentPoly::zero();
    if (2 * k > n) k = n - k;
    LaurentPoly p = lp_one();
    for (long j = 1; j <= k; ++j) {
        p -= p.mul_monomial(Rational(1), qa_exp(static_cast<int>(n - k + j), 0));
        LaurentPoly d = lp_one() - lp_q(static_cast<int>(j));
        auto quot = lp_div_exact(p, d);
        if (!quot) throw std::logic_error("q_binom: interleaved division failed");
        p = std::move(*quot);
    }
    return p;
}

/**
 * Memoized table of cyclotomic polynomials Phi_n(q), populated by the exact
 * division Phi_n = (q^n - 1) / prod_{d|n, d<n} Phi_d. All access goes through
 * one mutex; entries are never mutated after insertion, so returned copies are
 * always coherent.
 */
class CyclotomicCache {
  public:
    LaurentPoly get(long n) {
        if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
        std::lock_guard<std::mutex> lock(mu_);
        return get_locked_(n);
    }

    /// Text snapshot, one "n<TAB>polynomial" line per entry.
    void save(std::ostream& os) {
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [n, p] : table_) os << n << '\t' << lp_to_string(p) << '\n';
    }

    /// Merge a snapshot produced by save(). Entries failing the defining
    /// product identity are rejected wholesale (corrupt or stale file).
    bool load(std::istream& is) {
        std::map<long, LaurentPoly> incoming;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            auto tab = line.find('\t');
            if (tab == std::string::npos) return false;
            long n = 0;
            try {
                n = std::stol(line.substr(0, tab));
                if (n < 1) return false;
                incoming.emplace(n, lp_from_string(line.substr(tab + 1)));
            } catch (const std::exception&) {
                return false;
            }
        }
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [n, p] : incoming) {
            LaurentPoly prod = p;
            for (long d = 1; d <= n / 2; ++d)
                if (n % d == 0) prod *= get_locked_(d);
            if (prod != lp_q(static_cast<int>(n)) - lp_one()) return false;
        }
        for (auto& [n, p] : incoming) table_.insert_or_assign(n, std::move(p));
        return true;
    }

    bool save_file(const std::string& path) {
        std::ofstream os(path);
        if (!os) return false;
        save(os);
        return bool(os);
    }
    bool load_file(const std::string& path) {
        std::ifstream is(path);
        if (!is) return false;
        return load(is);
    }

  private:
    LaurentPoly get_locked_(long n) {
        auto it = table_.find(n);
        if (it != table_.end()) return it->second;
        LaurentPoly p = lp_q(static_cast<int>(n)) - lp_one();  // q^n - 1
        for (long d = 1; d <= n / 2; ++d) {
            if (n % d != 0) continue;
            auto quot = lp_div_exact(p, get_locked_(d));
            if (!quot) throw std::logic_error("cyclotomic: exact division failed");
            p = std::move(*quot);
        }
        table_.emplace(n, p);
        return p;
    }

    std::mutex mu_;
    std::map<long, LaurentPoly> table_;
};

inline CyclotomicCache& cyclotomic_cache() {
    static CyclotomicCache cache;
    return cache;
}

/// Phi_n(q), memoized process-wide.
inline LaurentPoly cyclotomic(long n) { return cyclotomic_cache().get(n); }

}  // namespace qsc

#endif
