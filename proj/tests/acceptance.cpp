// Acceptance suite: reproduces the published survey counts and density
// results and runs the cross-module property suites at full scale. Prints
// one PASS/FAIL line per criterion; exits nonzero if any fails.

#include <array>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "k2/arith.hpp"
#include "k2/survey.hpp"
#include "k2/verify.hpp"

namespace {

using k2::survey::FamilyKind;
using k2::survey::SurveyTally;

int g_criterion = 0;
int g_failures = 0;

void report(bool pass, const std::string& what) {
    ++g_criterion;
    if (!pass) ++g_failures;
    std::printf("[%d/7] %s  %s\n", g_criterion, pass ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
}

struct Golden {
    const char* name;
    FamilyKind kind;
    int64_t min_abs;
    std::array<uint64_t, 4> counts;
};

std::string counts_str(const SurveyTally& t) {
    std::string s = "{";
    for (int r = 0; r < 4; ++r) {
        if (r) s += ", ";
        s += std::to_string(r) + ": " + std::to_string(t.counts[static_cast<size_t>(r)]);
    }
    return s + "}";
}

// absolute count differences against a published table
uint64_t table_distance(const SurveyTally& t, const std::array<uint64_t, 4>& want,
                        int* off_rank = nullptr) {
    uint64_t diff = 0;
    for (size_t r = 0; r < t.counts.size(); ++r) {
        uint64_t w = r < want.size() ? want[r] : 0;
        uint64_t have = t.counts[r];
        uint64_t d = have > w ? have - w : w - have;
        if (d && off_rank) *off_rank = static_cast<int>(r);
        diff += d;
    }
    return diff;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    std::printf("building factor sieve up to 10^6...\n");
    k2::arith::FactorSieve sieve(1000000);

    // ---- criteria 1 and 2: golden survey counts --------------------------
    {
        auto tx = k2::survey::tally({FamilyKind::X, 15, 999999, std::nullopt}, sieve);
        auto ty = k2::survey::tally({FamilyKind::Y, 15, 999999, std::nullopt}, sieve);

        const std::array<uint64_t, 4> paper_x{35787, 128468, 4076, 0};
        const std::array<uint64_t, 4> paper_y{104056, 63054, 1220, 0};
        const uint64_t paper_total_x = 168331, paper_total_y = 168330;

        int off_x = -1, off_y = -1;
        uint64_t dx = table_distance(tx, paper_x, &off_x);
        uint64_t dy = table_distance(ty, paper_y, &off_y);

        // The published X and Y totals disagree although both families run
        // over the same |d|; computed totals are necessarily equal. Accept a
        // single off-by-one bucket in one family, flag it, and require the
        // other family to match exactly.
        bool totals_ok = tx.total == ty.total &&
                         (tx.total + 1 >= paper_total_x && tx.total <= paper_total_x + 1) &&
                         (ty.total + 1 >= paper_total_y && ty.total <= paper_total_y + 1);
        bool counts_ok = (dx == 0 && dy <= 1) || (dy == 0 && dx <= 1);

        std::printf("  X computed %s total=%" PRIu64 " (published {0: 35787, 1: 128468, 2: 4076} total=168331)\n",
                    counts_str(tx).c_str(), tx.total);
        std::printf("  Y computed %s total=%" PRIu64 " (published {0: 104056, 1: 63054, 2: 1220} total=168330)\n",
                    counts_str(ty).c_str(), ty.total);
        if (dx || dy)
            std::printf("  flagged: published %s count for 4-rank %d differs by one from the computed value;\n"
                        "           the published totals 168331/168330 are mutually inconsistent, computed totals agree\n",
                        dx ? "X" : "Y", dx ? off_x : off_y);
        report(totals_ok && counts_ok, "golden counts for X and Y (one published figure flagged)");

        // informational: observed proportions against the limiting densities
        // (convergence is logarithmic; reported, not asserted)
        for (bool positive : {true, false}) {
            const auto base_kind = positive ? FamilyKind::X : FamilyKind::Y;
            const auto& whole = positive ? tx : ty;
            std::vector<SurveyTally> subs;
            for (int i : {1, 3, 5, 7})
                subs.push_back(k2::survey::tally({base_kind, 15, 999999, std::pair{i, 0}}, sieve));
            auto cor = k2::survey::corollary_check(whole, subs);
            for (const auto& line : cor.lines)
                if (line.set_name == (positive ? "X" : "Y") || line.rank == 0)
                    std::printf("  density in %-3s rank %d: observed %.4f vs %d/%d = %.4f\n",
                                line.set_name.c_str(), line.rank, line.observed, line.theo_num,
                                line.theo_den,
                                static_cast<double>(line.theo_num) / line.theo_den);
        }

        const Golden tables[] = {
            {"PLR (Table 5)", FamilyKind::PLR, 105, {8247, 92544, 20000, 16}},
            {"NPLR (Table 6)", FamilyKind::NPLR, 105, {67970, 50147, 2688, 2}},
            {"ODD (Table 7)", FamilyKind::ODD, 3, {93736, 278138, 33148, 263}},
            {"NODD (Table 8)", FamilyKind::NODD, 3, {251884, 148669, 4730, 2}},
        };
        bool all_exact = true;
        std::string detail;
        for (const Golden& g : tables) {
            auto t = k2::survey::tally({g.kind, g.min_abs, 999999, std::nullopt}, sieve);
            uint64_t diff = table_distance(t, g.counts);
            std::printf("  %-14s computed %s\n", g.name, counts_str(t).c_str());
            if (diff != 0) {
                all_exact = false;
                detail += std::string(" ") + g.name + " off by " + std::to_string(diff);
            }
        }
        report(all_exact, "appendix tables 5-8 reproduced exactly" + detail);
    }

    // ---- criteria 3 and 4: density experiments ---------------------------
    {
        bool ok_a = true, ok_b = true;
        std::string detail_a, detail_b;
        for (int64_t p : {17, 113}) {
            auto a = k2::survey::density_experiment(p, 'A', 999999, sieve);
            struct Side {
                const std::vector<k2::survey::DensityLine>* lines;
                const char* label;
            };
            for (auto [lines, label] : {Side{&a.positive, "pl "}, Side{&a.negative, "-pl"}})
                for (const auto& ln : *lines) {
                    std::printf("  p=%" PRId64 " A %s rank %d: observed %.4f vs %d/%d (z=%+.2f, n=%" PRIu64 ")\n",
                                p, label, ln.rank, ln.observed,
                                ln.theo_num, ln.theo_den, ln.z, a.n_primes);
                    if (std::abs(ln.z) > 3.0) {
                        ok_a = false;
                        detail_a += " p=" + std::to_string(p) + " rank " + std::to_string(ln.rank);
                    }
                }
            auto b = k2::survey::density_experiment(p, 'B', 999999, sieve);
            for (const auto& ln : b.positive) {
                std::printf("  p=%" PRId64 " B pl  rank %d: observed %.4f vs %d/%d (z=%+.2f, n=%" PRIu64 ")\n",
                            p, ln.rank, ln.observed, ln.theo_num, ln.theo_den, ln.z, b.n_primes);
                if (std::abs(ln.z) > 3.0) {
                    ok_b = false;
                    detail_b += " p=" + std::to_string(p) + " rank " + std::to_string(ln.rank);
                }
            }
        }
        report(ok_a, "family A densities within 3 standard errors (p = 17, 113)" + detail_a);
        report(ok_b, "family B densities within 3 standard errors (p = 17, 113)" + detail_b);
    }

    // ---- criterion 5: classifier vs matrix over all pairs below 10^6 -----
    {
        auto res = k2::verify::classifier_matrix_suite(1000000, sieve);
        std::printf("  classifier vs matrix: %" PRIu64 " pairs, %" PRIu64 " mismatches\n",
                    res.checked, res.failures);
        for (const auto& c : res.counterexamples) std::printf("    %s\n", c.c_str());
        report(res.ok(), "symbol classifier equals matrix engine for all p*l < 10^6");
    }

    // ---- criterion 6: congruence tables as theorems below 10^5 -----------
    {
        auto res = k2::verify::tables_suite(100000, sieve);
        std::printf("  congruence tables: %" PRIu64 " pairs, %" PRIu64 " violations\n",
                    res.checked, res.failures);
        for (const auto& c : res.counterexamples) std::printf("    %s\n", c.c_str());
        report(res.ok(), "congruence tables hold for all |d| = p*l < 10^5");
    }

    // ---- criterion 7: property suites -------------------------------------
    {
        std::vector<k2::verify::SuiteResult> suites;
        suites.push_back(k2::verify::symbols_suite(10000, 0xacce97));
        suites.push_back(k2::verify::gf2_oracle_suite(10000, 0xacce98));
        suites.push_back(k2::verify::rankinv_suite(100000, sieve));
        suites.push_back(k2::verify::forms_suite(1000000, sieve));
        bool ok = true;
        std::string detail;
        for (const auto& s : suites) {
            std::printf("  suite %-10s checked=%" PRIu64 " failures=%" PRIu64 "\n", s.suite.c_str(),
                        s.checked, s.failures);
            for (const auto& c : s.counterexamples) std::printf("    %s\n", c.c_str());
            if (!s.ok()) {
                ok = false;
                detail += " " + s.suite;
            }
        }
        report(ok, "property suites (symbols, gf2 oracle, pell choice, dual-route, h+)" + detail);
    }

    auto secs = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0).count();
    std::printf("ACCEPTANCE: %d/7 criteria passed in %llds%s\n", 7 - g_failures,
                static_cast<long long>(secs), g_failures ? "" : " -- all green");
    return g_failures ? 1 : 0;
}
