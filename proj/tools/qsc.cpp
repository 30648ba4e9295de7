/**
 * qsc: command-line driver for the verification campaigns.
 *
 * Usage: qsc SUITE [options]. Exit code 0 when every claim passes, 1 when any
 * claim fails, 2 on usage errors or error verdicts (bad primes, internal
 * faults). Reports are byte-identical across runs with the same inputs; pass
 * --timings to trade that for real elapsed-time measurements.
 */
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsc/campaign.hpp"
#include "qsc/qkit.hpp"

namespace {

bool parse_range(const std::string& s, long& lo, long& hi) {
    try {
        const auto dots = s.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            lo = hi = std::stol(s, &used);
            return used == s.size();
        }
        std::size_t u1 = 0, u2 = 0;
        const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        if (a.empty() || b.empty()) return false;
        lo = std::stol(a, &u1);
        hi = std::stol(b, &u2);
        return u1 == a.size() && u2 == b.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_long(const std::string& s, long& v) {
    try {
        std::size_t used = 0;
        v = std::stol(s, &used);
        return used == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_grid(const std::string& s, long& n, long& k) {
    const auto x = s.find('x');
    if (x == std::string::npos) return false;
    return parse_long(s.substr(0, x), n) && parse_long(s.substr(x + 1), k) && n >= 0 && k >= 1;
}

std::string cache_file_path() {
    const char* dir = std::getenv("QSC_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/cyclotomics.tsv";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact verification campaigns: telescoping certificates, summation identities,\n"
        "q-congruences mod cyclotomic powers, and p-adic specializations"};
    app.get_formatter()->column_width(26);

    std::string suite_arg;
    app.add_option("suite", suite_arg, "campaign to run")
        ->required()
        ->check(CLI::IsMember({"wz", "identities", "lemmas", "theorem1", "theorem2", "theorem3",
                               "corollary-q", "corollary-padic", "all"}));

    std::string n_arg = "3..15";
    app.add_option("--n", n_arg, "order range A..B or single value; even values are skipped");
    std::vector<long> primes;
    app.add_option("--p", primes, "primes for the corollary suites (comma separated)")
        ->delimiter(',');
    std::vector<long> rs;
    app.add_option("--r", rs, "prime-power exponents for the corollary suites (comma separated)")
        ->delimiter(',');
    std::string variant_arg = "both";
    app.add_option("--variant", variant_arg, "summation range to check")
        ->check(CLI::IsMember({"half", "full", "both"}));
    bool want_symbolic = false, want_pointwise = false;
    app.add_flag("--symbolic", want_symbolic, "wz: only the symbolic certificate");
    app.add_flag("--pointwise", want_pointwise, "wz: only the rational grid checks");
    std::string grid_arg = "12x12";
    app.add_option("--grid", grid_arg, "wz: grid bounds NxK for the pointwise checks");
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads (default 1); output is identical either way")
        ->check(CLI::PositiveNumber);
    std::string json_path;
    app.add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");
    bool timings = false;
    app.add_flag("--timings", timings, "record real elapsed_ms (breaks byte-identical output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    qsc::Campaign c;
    c.suite = *qsc::suite_from_string(suite_arg);
    if (!parse_range(n_arg, c.n_lo, c.n_hi) || c.n_lo > c.n_hi) {
        std::fprintf(stderr, "qsc: bad --n range '%s'\n", n_arg.c_str());
        return 2;
    }
    if (!parse_grid(grid_arg, c.grid_n, c.grid_k)) {
        std::fprintf(stderr, "qsc: bad --grid '%s' (expected NxK)\n", grid_arg.c_str());
        return 2;
    }
    if (!primes.empty()) c.primes = primes;
    else if (c.suite == qsc::Suite::CorollaryPadic) c.primes = {3, 5, 7, 11, 13};
    if (!rs.empty()) c.rs = rs;
    else if (c.suite == qsc::Suite::CorollaryPadic) c.rs = {1, 2};
    c.run_half = variant_arg != "full";
    c.run_full = variant_arg != "half";
    if (want_symbolic != want_pointwise) {  // exactly one mode requested
        c.symbolic = want_symbolic;
        c.pointwise = want_pointwise;
    }
    c.jobs = jobs;
    c.timings = timings;

    const bool uses_n = c.suite != qsc::Suite::WZ && c.suite != qsc::Suite::CorollaryQ &&
                        c.suite != qsc::Suite::CorollaryPadic;
    if (uses_n) {
        for (long n = c.n_lo; n <= c.n_hi; ++n)
            if (n % 2 == 0 || n < 3) {
                std::fprintf(stderr,
                             "qsc: note: skipping even values and values below 3 in --n %s; "
                             "the claims are stated for odd orders\n",
                             n_arg.c_str());
                break;
            }
        if (qsc::odd_values(c.n_lo, c.n_hi).empty()) {
            std::fprintf(stderr, "qsc: --n %s leaves no odd value >= 3\n", n_arg.c_str());
            return 2;
        }
    }

    const std::string cache_path = cache_file_path();
    if (!cache_path.empty() && std::filesystem::exists(cache_path) &&
        !qsc::cyclotomic_cache().load_file(cache_path))
        std::fprintf(stderr, "qsc: ignoring stale cyclotomic cache at %s\n", cache_path.c_str());

    int exit_code = 2;
    try {
        const qsc::CampaignOutcome out = qsc::run_campaign(c, &std::cerr);
        const std::string payload = out.json.dump(2) + "\n";
        if (json_path == "-") {
            std::cout << payload;
            qsc::write_summary(out, std::cerr);
        } else {
            if (!json_path.empty()) {
                std::ofstream os(json_path, std::ios::binary);
                os << payload;
                if (!os) {
                    std::fprintf(stderr, "qsc: cannot write %s\n", json_path.c_str());
                    return 2;
                }
            }
            qsc::write_summary(out, std::cout);
        }
        exit_code = out.exit_code();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "qsc: internal error: %s\n", e.what());
        return 2;
    }

    if (!cache_path.empty() && !qsc::cyclotomic_cache().save_file(cache_path))
        std::fprintf(stderr, "qsc: could not save cyclotomic cache to %s\n", cache_path.c_str());
    return exit_code;
}
