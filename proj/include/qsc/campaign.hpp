/**
 * @file campaign.hpp
 * @brief Verification campaigns: suite selection, claim generation, parallel
 *        execution with deterministic aggregation, and JSON reporting.
 *
 * Tasks are generated in a fixed order and results land in slots indexed by
 * that order, so the report is byte-identical across runs regardless of the
 * number of worker threads. Timings are zeroed unless explicitly requested,
 * for the same reason.
 */
#ifndef QSC_CAMPAIGN_HPP
#define QSC_CAMPAIGN_HPP

#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "qsc/congruence.hpp"
#include "qsc/padic.hpp"
#include "qsc/wz.hpp"
#include "qsc/wz_symbolic.hpp"

namespace qsc {

enum class Suite { WZ, Identities, Lemmas, Theorem1, Theorem2, Theorem3, CorollaryQ, CorollaryPadic, All };

inline std::optional<Suite> suite_from_string(const std::string& s) {
    if (s == "wz") return Suite::WZ;
    if (s == "identities") return Suite::Identities;
    if (s == "lemmas") return Suite::Lemmas;
    if (s == "theorem1") return Suite::Theorem1;
    if (s == "theorem2") return Suite::Theorem2;
    if (s == "theorem3") return Suite::Theorem3;
    if (s == "corollary-q") return Suite::CorollaryQ;
    if (s == "corollary-padic") return Suite::CorollaryPadic;
    if (s == "all") return Suite::All;
    return std::nullopt;
}

struct Campaign {
    Suite suite = Suite::All;
    long n_lo = 3, n_hi = 15;
    std::vector<long> primes{3, 5, 7};
    std::vector<long> rs{1};
    bool run_half = true, run_full = true;
    bool symbolic = true, pointwise = true;
    long grid_n = 12, grid_k = 12;
    int jobs = 1;
    bool timings = false;
};

struct ClaimResult {
    std::vector<nlohmann::ordered_json> reports;
    Verdict worst = Verdict::Pass;
};

struct ClaimTask {
    std::string label;
    std::function<ClaimResult()> run;
};

namespace detail {

inline void raise_verdict(Verdict& worst, Verdict v) {
    if (static_cast<int>(v) > static_cast<int>(worst)) worst = v;
}

inline nlohmann::ordered_json congruence_json(const char* suite, nlohmann::ordered_json params,
                                              const CongruenceReport& r, bool timings) {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["params"] = std::move(params);
    j["claim"] = r.claim;
    j["verdict"] = verdict_name(r.verdict);
    std::string ws;
    if (r.verdict == Verdict::Pass)
        ws = !r.detail.empty()     ? r.detail
             : r.witness.is_zero() ? std::string("zero difference")
                                   : "quotient degree " + std::to_string(r.witness_degree);
    else if (r.verdict == Verdict::Fail)
        ws = "residue degree " + std::to_string(r.witness_degree);
    else
        ws = r.detail;
    j["witness_summary"] = ws;
    j["modulus_degree"] = r.modulus_degree;
    j["witness_degree"] = r.witness_degree;
    j["elapsed_ms"] = timings ? r.elapsed_ms : 0.0;
    return j;
}

inline nlohmann::ordered_json padic_json(const PadicReport& r, bool timings) {
    nlohmann::ordered_json j;
    j["suite"] = "corollary-padic";
    j["params"] = {{"p", r.p}, {"r", r.r}, {"family", r.family}, {"variant", r.variant}};
    j["claim"] = r.claim;
    j["verdict"] = verdict_name(r.verdict);
    j["witness_summary"] = r.detail;
    if (r.valuation_infinite)
        j["valuation_found"] = nullptr;
    else
        j["valuation_found"] = r.valuation_found;
    j["valuation_required"] = r.valuation_required;
    j["elapsed_ms"] = timings ? r.elapsed_ms : 0.0;
    return j;
}

/// plain pass/fail claims (grids, equalities) with no polynomial witness
inline nlohmann::ordered_json flat_json(const char* suite, nlohmann::ordered_json params,
                                        const std::string& claim, bool ok,
                                        const std::string& note = "") {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["params"] = std::move(params);
    j["claim"] = claim;
    j["verdict"] = ok ? "pass" : "fail";
    j["witness_summary"] = note;
    j["elapsed_ms"] = 0.0;
    return j;
}

inline ClaimResult single(nlohmann::ordered_json j) {
    ClaimResult res;
    res.worst = j["verdict"] == "pass" ? Verdict::Pass
                : j["verdict"] == "fail" ? Verdict::Fail
                                         : Verdict::Error;
    res.reports.push_back(std::move(j));
    return res;
}

}  // namespace detail

inline std::vector<long> odd_values(long lo, long hi) {
    std::vector<long> out;
    for (long n = lo; n <= hi; ++n)
        if (n % 2 == 1 && n >= 3) out.push_back(n);
    return out;
}

inline std::vector<Variant> chosen_variants(const Campaign& c) {
    std::vector<Variant> v;
    if (c.run_half) v.push_back(Variant::Half);
    if (c.run_full) v.push_back(Variant::Full);
    return v;
}

inline void append_wz_tasks(const Campaign& c, std::vector<ClaimTask>& tasks) {
    if (c.symbolic)
        tasks.push_back({"wz symbolic certificate", [c] {
            bool ok = check_ratio_identity_symbolic();
            return detail::single(detail::flat_json(
                "wz", {{"mode", "symbolic"}},
                "pair ratios, displayed identity, and telescoped relation hold in the (q,u,v) frame",
                ok));
        }});
    if (c.pointwise) {
        tasks.push_back({"wz pair relation grid", [c] {
            GridReport g = check_qwz_grid(c.grid_n, c.grid_k);
            std::string note;
            if (!g.ok)
                note = "first failure at n=" + std::to_string(g.n) + " k=" + std::to_string(g.k);
            return detail::single(detail::flat_json(
                "wz", {{"mode", "pointwise"}, {"n_max", c.grid_n}, {"k_max", c.grid_k}},
                "q-pair telescoping relation holds on the grid", g.ok, note));
        }});
        tasks.push_back({"wz classical relation grid", [c] {
            GridReport g = check_classical_relation(c.grid_n, c.grid_k);
            std::string note;
            if (!g.ok)
                note = "first failure at n=" + std::to_string(g.n) + " k=" + std::to_string(g.k);
            return detail::single(detail::flat_json(
                "wz", {{"mode", "classical"}, {"n_max", c.grid_n}, {"k_max", c.grid_k}},
                "classical pair relation holds on the grid", g.ok, note));
        }});
    }
}

inline void append_identity_tasks(const Campaign& c, std::vector<ClaimTask>& tasks) {
    for (long m : odd_values(c.n_lo, c.n_hi)) {
        tasks.push_back({"closed forms m=" + std::to_string(m), [m] {
            bool half = closed_form_half(m) == direct_sum((m + 1) / 2, sum_term_quartic);
            bool full = closed_form_full(m) == direct_sum(m - 1, sum_term_quartic);
            ClaimResult res;
            res.reports.push_back(detail::flat_json(
                "identities", {{"m", m}, {"variant", "half"}},
                "half-range closed form equals the direct sum", half));
            res.reports.push_back(detail::flat_json(
                "identities", {{"m", m}, {"variant", "full"}},
                "full-range closed form equals the direct sum", full));
            if (!half || !full) res.worst = Verdict::Fail;
            return res;
        }});
    }
    for (long N = 0; N <= 8; ++N) {
        tasks.push_back({"parametric closed form N=" + std::to_string(N), [N] {
            bool direct = closed_form_param(N) == direct_sum(N, sum_term_param);
            bool step =
                N == 0 ||
                closed_form_param(N) - closed_form_param(N - 1) == sum_term_param(N);
            RatFun aneg = closed_form_aneg1(N);
            bool spec_ok = aneg == closed_form_param(N).specialize_a(Rational(-1));
            bool sq_ok = aneg == direct_sum(N, sum_term_squared);
            ClaimResult res;
            res.reports.push_back(detail::flat_json(
                "identities", {{"N", N}, {"form", "param"}},
                "bivariate closed form equals the direct sum and satisfies the induction step",
                direct && step));
            res.reports.push_back(detail::flat_json(
                "identities", {{"N", N}, {"form", "aneg1"}},
                "a=-1 closed form matches both the specialization and the squared direct sum",
                spec_ok && sq_ok));
            if (!(direct && step && spec_ok && sq_ok)) res.worst = Verdict::Fail;
            return res;
        }});
    }
}

inline void append_lemma_tasks(const Campaign& c, std::vector<ClaimTask>& tasks) {
    for (long m : odd_values(c.n_lo, c.n_hi)) {
        tasks.push_back({"lemmas m=" + std::to_string(m), [m, t = c.timings] {
            ClaimResult res;
            for (const auto& r : verify_lemma_congruences(m)) {
                detail::raise_verdict(res.worst, r.verdict);
                res.reports.push_back(detail::congruence_json("lemmas", {{"m", m}}, r, t));
            }
            for (const auto& r : verify_divisibility_facts(m)) {
                detail::raise_verdict(res.worst, r.verdict);
                res.reports.push_back(detail::congruence_json("lemmas", {{"m", m}}, r, t));
            }
            return res;
        }});
    }
}

inline void append_congruence_tasks(const Campaign& c, std::vector<ClaimTask>& tasks,
                                    const char* suite,
                                    CongruenceReport (*verify)(long, Variant)) {
    for (long n : odd_values(c.n_lo, c.n_hi))
        for (Variant v : chosen_variants(c)) {
            std::string label =
                std::string(suite) + "/" + variant_name(v) + " n=" + std::to_string(n);
            tasks.push_back({label, [n, v, suite, verify, t = c.timings] {
                CongruenceReport r = verify(n, v);
                return detail::single(detail::congruence_json(
                    suite, {{"n", n}, {"variant", variant_name(v)}}, r, t));
            }});
        }
}

inline void append_theorem1_tasks(const Campaign& c, std::vector<ClaimTask>& tasks) {
    append_congruence_tasks(c, tasks, "theorem1", &verify_theorem1);
}

inline void append_corollary_q_tasks(const Campaign& c, std::vector<ClaimTask>& tasks) {
    for (long p : c.primes)
        for (long r : c.rs)
            for (QFamily fam : {QFamily::Cor41, QFamily::Cor43})
                for (Variant v : chosen_variants(c)) {
                    std::string label = std::string("corollary-q/") + qfamily_name(fam) + "/" +
                                        variant_name(v) + " p=" + std::to_string(p) +
                                        " r=" + std::to_string(r);
                    tasks.push_back({label, [p, r, fam, v, t = c.timings] {
                        CongruenceReport rep = verify_corollary_q(p, r, fam, v);
                        return detail::single(detail::congruence_json(
                            "corollary-q",
                            {{"p", p}, {"r", r}, {"family", qfamily_name(fam)},
                             {"variant", variant_name(v)}},
                            rep, t));
                    }});
                }
}

inline void append_padic_tasks(const Campaign& c, std::vector<ClaimTask>& tasks) {
    for (long p : c.primes)
        for (long r : c.rs)
            for (PFamily fam : {PFamily::Cor42, PFamily::Cor44})
                for (Variant v : chosen_variants(c)) {
                    std::string label = std::string("corollary-padic/") + pfamily_name(fam) +
                                        "/" + variant_name(v) + " p=" + std::to_string(p) +
                                        " r=" + std::to_string(r);
                    tasks.push_back({label, [p, r, fam, v, t = c.timings] {
                        PadicReport rep = verify_padic({p, r, fam, v});
                        return detail::single(detail::padic_json(rep, t));
                    }});
                }
}

inline std::vector<ClaimTask> build_tasks(const Campaign& c) {
    std::vector<ClaimTask> tasks;
    const bool all = c.suite == Suite::All;
    if (all || c.suite == Suite::WZ) append_wz_tasks(c, tasks);
    if (all || c.suite == Suite::Identities) append_identity_tasks(c, tasks);
    if (all || c.suite == Suite::Lemmas) append_lemma_tasks(c, tasks);
    if (all || c.suite == Suite::Theorem1) append_theorem1_tasks(c, tasks);
    if (all || c.suite == Suite::Theorem2)
        append_congruence_tasks(c, tasks, "theorem2", &verify_theorem2);
    if (all || c.suite == Suite::Theorem3)
        append_congruence_tasks(c, tasks, "theorem3", &verify_theorem3);
    if (all || c.suite == Suite::CorollaryQ) append_corollary_q_tasks(c, tasks);
    if (all || c.suite == Suite::CorollaryPadic) append_padic_tasks(c, tasks);
    return tasks;
}

/// Executes tasks with work stealing; result slots preserve task order, so the
/// aggregated report does not depend on scheduling. Progress goes to `progress`
/// when non-null (one line per finished task, completion-ordered).
inline std::vector<ClaimResult> run_tasks(const std::vector<ClaimTask>& tasks, int jobs,
                                          std::ostream* progress) {
    std::vector<ClaimResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                results[i] = tasks[i].run();
            } catch (const std::exception& e) {
                nlohmann::ordered_json j;
                j["suite"] = "internal";
                j["params"] = nlohmann::ordered_json::object();
                j["claim"] = tasks[i].label;
                j["verdict"] = "error";
                j["witness_summary"] = e.what();
                j["elapsed_ms"] = 0.0;
                results[i] = detail::single(std::move(j));
            }
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                *progress << "[" << done.fetch_add(1) + 1 << "/" << tasks.size() << "] "
                          << tasks[i].label << ": " << verdict_name(results[i].worst) << "\n";
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

struct CampaignOutcome {
    nlohmann::ordered_json json;  ///< {"schema":"qsc/1","reports":[...]}
    long passed = 0, failed = 0, errored = 0;

    int exit_code() const { return errored ? 2 : failed ? 1 : 0; }
};

inline CampaignOutcome run_campaign(const Campaign& c, std::ostream* progress) {
    const auto tasks = build_tasks(c);
    const auto results = run_tasks(tasks, c.jobs, progress);
    CampaignOutcome out;
    out.json["schema"] = "qsc/1";
    auto& reports = out.json["reports"] = nlohmann::ordered_json::array();
    for (const auto& res : results)
        for (const auto& j : res.reports) {
            const std::string v = j["verdict"];
            if (v == "pass")
                ++out.passed;
            else if (v == "fail")
                ++out.failed;
            else
                ++out.errored;
            reports.push_back(j);
        }
    return out;
}

/// Fixed-width human-readable table, deterministic like the JSON.
inline void write_summary(const CampaignOutcome& out, std::ostream& os) {
    for (const auto& j : out.json["reports"]) {
        const std::string v = j["verdict"];
        os << (v == "pass" ? "PASS " : v == "fail" ? "FAIL " : "ERROR") << "  "
           << j["claim"].get<std::string>();
        const std::string ws = j["witness_summary"];
        if (!ws.empty() && v != "pass") os << "  [" << ws << "]";
        os << "\n";
    }
    os << out.passed << " passed, " << out.failed << " failed, " << out.errored
       << " errored\n";
}

}  // namespace qsc

#endif
