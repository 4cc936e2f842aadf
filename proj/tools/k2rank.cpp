// k2rank: 4-ranks of tame kernels of quadratic fields Q(sqrt(d)).
//
// Subcommands:
//   rank4    single-field query, JSON record on stdout
//   survey   exhaustive family tally (JSON) or per-field records (CSV)
//   density  observed vs predicted 4-rank densities over prime families
//   verify   cross-module property suites
//
// Exit codes: 0 success, 2 usage or input error, 3 violated invariant.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "k2/arith.hpp"
#include "k2/fourrank.hpp"
#include "k2/records.hpp"
#include "k2/survey.hpp"
#include "k2/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int64_t kDefaultLimit = 1000000;

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("K2_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot open %s\n", out_path.c_str());
        return 2;
    }
    f << text;
    return f.good() ? 0 : 2;
}

ordered_json tally_json(const k2::survey::SurveyTally& t) {
    ordered_json counts;
    for (int r = 0; r < 4; ++r) counts[std::to_string(r)] = t.counts[static_cast<size_t>(r)];
    for (size_t r = 4; r < t.counts.size(); ++r)
        if (t.counts[r]) counts[std::to_string(r)] = t.counts[r];
    ordered_json j;
    j["family"] = k2::survey::family_name(t.family.kind);
    j["min"] = t.family.min_abs;
    j["max"] = t.family.max_abs;
    j["total"] = t.total;
    j["counts"] = counts;
    return j;
}

std::string fraction(int num, int den) {
    return std::to_string(num) + "/" + std::to_string(den);
}

ordered_json density_side_json(const std::vector<k2::survey::DensityLine>& lines) {
    ordered_json observed, theoretical, z, counts;
    for (const auto& ln : lines) {
        std::string key = std::to_string(ln.rank);
        counts[key] = ln.count;
        observed[key] = ln.observed;
        theoretical[key] = fraction(ln.theo_num, ln.theo_den);
        z[key] = ln.z;
    }
    ordered_json j;
    j["counts"] = counts;
    j["observed"] = observed;
    j["theoretical"] = theoretical;
    j["z_scores"] = z;
    return j;
}

int cmd_rank4(int64_t d, int64_t limit, const std::string& out_path) {
    int64_t ad = d < 0 ? -d : d;
    if (ad <= 1 || ad > limit) {
        std::fprintf(stderr, "error: d must satisfy 1 < |d| <= %lld\n",
                     static_cast<long long>(limit));
        return 2;
    }
    k2::arith::FactorSieve sieve(static_cast<uint32_t>(ad < 100 ? 100 : ad));
    auto spec = k2::fourrank::make_field_spec(d, sieve);
    auto report = k2::fourrank::four_rank(d, sieve);
    if (!spec || !report) {
        std::fprintf(stderr, "error: d=%lld is not odd squarefree\n", static_cast<long long>(d));
        return 2;
    }
    auto record = k2::records::make_record(*spec, *report);
    return write_output(k2::records::to_json(record) + "\n", out_path);
}

int cmd_survey(const std::string& family_name, int64_t min_abs, int64_t max_abs,
               const std::string& format, const std::string& out_path, int threads,
               bool min_set) {
    auto kind = k2::survey::family_from_name(family_name);
    if (!kind) {
        std::fprintf(stderr, "error: unknown family %s\n", family_name.c_str());
        return 2;
    }
    k2::survey::Family family = k2::survey::default_family(*kind, max_abs);
    if (min_set) family.min_abs = min_abs;
    if (family.min_abs < 3 || family.min_abs > family.max_abs) {
        std::fprintf(stderr, "error: need 3 <= min <= max\n");
        return 2;
    }
    if (format != "json" && format != "csv") {
        std::fprintf(stderr, "error: format must be csv or json\n");
        return 2;
    }
    k2::arith::FactorSieve sieve(static_cast<uint32_t>(family.max_abs));

    if (format == "json") {
        auto t = k2::survey::tally(family, sieve, threads);
        return write_output(tally_json(t).dump(2) + "\n", out_path);
    }

    // CSV: one record per field, ascending |d|
    std::string text = k2::records::csv_header() + "\n";
    bool negative = k2::survey::family_is_negative(family.kind);
    for (int64_t n = family.min_abs | 1; n <= family.max_abs; n += 2) {
        auto primes = sieve.factor_odd_squarefree(n);
        if (!primes || !k2::survey::family_accepts(family, *primes)) continue;
        int64_t d = negative ? -n : n;
        auto spec = k2::fourrank::make_field_spec(d, sieve);
        auto report = k2::fourrank::four_rank(d, sieve);
        text += k2::records::to_csv_row(k2::records::make_record(*spec, *report));
        text += '\n';
    }
    return write_output(text, out_path);
}

int cmd_density(int64_t p, const std::string& family, int64_t l_max,
                const std::string& out_path) {
    if (p <= 0 || p % 8 != 1 || !k2::arith::is_prime(static_cast<uint64_t>(p))) {
        std::fprintf(stderr, "error: p must be a prime = 1 mod 8\n");
        return 2;
    }
    if (family != "A" && family != "B") {
        std::fprintf(stderr, "error: family must be A or B\n");
        return 2;
    }
    k2::arith::FactorSieve sieve(static_cast<uint32_t>(l_max < 100 ? 100 : l_max));
    auto rep = k2::survey::density_experiment(p, family[0], l_max, sieve);

    ordered_json j;
    j["p"] = rep.p;
    j["family"] = std::string(1, rep.family);
    j["lmax"] = rep.l_max;
    j["n_primes"] = rep.n_primes;
    j["positive"] = density_side_json(rep.positive);
    if (!rep.negative.empty()) j["negative"] = density_side_json(rep.negative);
    return write_output(j.dump(2) + "\n", out_path);
}

int cmd_verify(const std::string& suite, int64_t max, bool max_set) {
    auto run = [&](int64_t def_max) {
        int64_t bound = max_set ? max : def_max;
        k2::arith::FactorSieve sieve(static_cast<uint32_t>(bound < 100 ? 100 : bound));
        if (suite == "prop34") return k2::verify::prop34_suite(bound, sieve);
        if (suite == "prop44") return k2::verify::prop44_suite(bound, sieve);
        if (suite == "tables") return k2::verify::tables_suite(bound, sieve);
        if (suite == "rankinv") return k2::verify::rankinv_suite(bound, sieve);
        return k2::verify::forms_suite(bound, sieve);
    };

    k2::verify::SuiteResult res;
    if (suite == "symbols") {
        uint64_t samples = max_set ? static_cast<uint64_t>(max) : 10000;
        res = k2::verify::symbols_suite(samples, 0x5eed);
        auto gf2 = k2::verify::gf2_oracle_suite(samples, 0x5eed + 1);
        res.checked += gf2.checked;
        res.failures += gf2.failures;
        for (auto& c : gf2.counterexamples) res.counterexamples.push_back(c);
    } else if (suite == "prop34" || suite == "prop44" || suite == "tables" ||
               suite == "rankinv" || suite == "forms") {
        res = run(suite == "forms" ? 1000000 : 100000);
    } else {
        std::fprintf(stderr,
                     "error: suite must be one of symbols, prop34, prop44, tables, rankinv, forms\n");
        return 2;
    }

    std::printf("suite %-8s checked=%llu failures=%llu %s\n", res.suite.c_str(),
                static_cast<unsigned long long>(res.checked),
                static_cast<unsigned long long>(res.failures), res.ok() ? "PASS" : "FAIL");
    for (const auto& c : res.counterexamples) std::printf("  counterexample: %s\n", c.c_str());
    return res.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"4-ranks of tame kernels of quadratic fields"};
    app.require_subcommand(1);

    // rank4
    auto* rank4 = app.add_subcommand("rank4", "4-rank of K2 of the ring of integers of Q(sqrt(d))");
    int64_t d = 0, limit = kDefaultLimit;
    std::string out_path;
    rank4->add_option("--d", d, "odd squarefree d, |d| > 1")->required();
    rank4->add_option("--limit", limit, "largest |d| accepted");
    rank4->add_option("--out", out_path, "write to file instead of stdout");

    // survey
    auto* survey = app.add_subcommand("survey", "tally 4-ranks over a family of fields");
    std::string family_name, format = "json", survey_out;
    int64_t min_abs = 0, max_abs = kDefaultLimit - 1;
    int threads_flag = 0;
    auto* min_opt = survey->add_option("--min", min_abs, "smallest |d|");
    survey->add_option("--family", family_name, "X, Y, PLR, NPLR, ODD or NODD")->required();
    survey->add_option("--max", max_abs, "largest |d|");
    survey->add_option("--format", format, "json (tally) or csv (per-field records)");
    survey->add_option("--out", survey_out, "write to file instead of stdout");
    survey->add_option("--threads", threads_flag, "worker threads (default: K2_THREADS or all cores)");

    // density
    auto* density = app.add_subcommand("density", "observed vs predicted 4-rank densities");
    int64_t p = 0, l_max = kDefaultLimit - 1;
    std::string density_family, density_out;
    density->add_option("--p", p, "fixed prime, p = 1 mod 8")->required();
    density->add_option("--family", density_family, "A ((l/p)=+1) or B ((l/p)=-1)")->required();
    density->add_option("--lmax", l_max, "largest prime l");
    density->add_option("--out", density_out, "write to file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "run a cross-module property suite");
    std::string suite;
    int64_t verify_max = 0;
    verify->add_option("--suite", suite, "symbols, prop34, prop44, tables, rankinv or forms")
        ->required();
    auto* max_opt = verify->add_option("--max", verify_max, "bound or sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rank4->parsed()) return cmd_rank4(d, limit, out_path);
        if (survey->parsed())
            return cmd_survey(family_name, min_abs, max_abs, format, survey_out,
                              resolve_threads(threads_flag), min_opt->count() > 0);
        if (density->parsed()) return cmd_density(p, density_family, l_max, density_out);
        if (verify->parsed()) return cmd_verify(suite, verify_max, max_opt->count() > 0);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "invariant violation: %s\n", e.what());
        return 3;
    }
    return 2;
}
