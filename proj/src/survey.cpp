#include "k2/survey.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "k2/forms.hpp"
#include "k2/fourrank.hpp"

namespace k2::survey {

const char* family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::X: return "X";
        case FamilyKind::Y: return "Y";
        case FamilyKind::PLR: return "PLR";
        case FamilyKind::NPLR: return "NPLR";
        case FamilyKind::ODD: return "ODD";
        case FamilyKind::NODD: return "NODD";
    }
    return "?";
}

std::optional<FamilyKind> family_from_name(const std::string& name) {
    if (name == "X") return FamilyKind::X;
    if (name == "Y") return FamilyKind::Y;
    if (name == "PLR") return FamilyKind::PLR;
    if (name == "NPLR") return FamilyKind::NPLR;
    if (name == "ODD") return FamilyKind::ODD;
    if (name == "NODD") return FamilyKind::NODD;
    return std::nullopt;
}

namespace {

int family_factor_count(FamilyKind k) {  // 0 = any
    switch (k) {
        case FamilyKind::X:
        case FamilyKind::Y: return 2;
        case FamilyKind::PLR:
        case FamilyKind::NPLR: return 3;
        default: return 0;
    }
}

}  // namespace

bool family_is_negative(FamilyKind k) {
    return k == FamilyKind::Y || k == FamilyKind::NPLR || k == FamilyKind::NODD;
}

bool family_accepts(const Family& family, const std::vector<int64_t>& primes) {
    int want_t = family_factor_count(family.kind);
    int t = static_cast<int>(primes.size());
    if (want_t && t != want_t) return false;
    if (family.congruence && t == 2) {
        auto [i, j] = *family.congruence;
        if (i && primes[0] % 8 != i) return false;
        if (j && primes[1] % 8 != j) return false;
    }
    return true;
}

Family default_family(FamilyKind kind, int64_t max_abs) {
    int64_t min_abs = 3;
    if (kind == FamilyKind::X || kind == FamilyKind::Y) min_abs = 15;
    if (kind == FamilyKind::PLR || kind == FamilyKind::NPLR) min_abs = 105;
    return Family{kind, min_abs, max_abs, std::nullopt};
}

void SurveyTally::merge(const SurveyTally& other) {
    total += other.total;
    for (size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

SurveyTally tally(const Family& family, const arith::FactorSieve& sieve, int threads) {
    if (family.min_abs < 3 || family.min_abs > family.max_abs)
        throw std::invalid_argument("family bounds must satisfy 3 <= min <= max");
    if (family.max_abs > static_cast<int64_t>(sieve.limit()))
        throw std::invalid_argument("family bound exceeds sieve limit");
    if (threads < 1) threads = 1;

    const bool negative = family_is_negative(family.kind);

    auto run_chunk = [&](int64_t lo, int64_t hi, SurveyTally& out) {
        for (int64_t n = lo | 1; n <= hi; n += 2) {
            auto primes = sieve.factor_odd_squarefree(n);
            if (!primes || !family_accepts(family, *primes)) continue;
            auto rep = fourrank::four_rank(negative ? -n : n, sieve);
            ++out.total;
            ++out.counts[static_cast<size_t>(rep->four_rank)];
        }
    };

    SurveyTally result;
    result.family = family;
    if (threads == 1) {
        run_chunk(family.min_abs, family.max_abs, result);
        return result;
    }

    int64_t span = family.max_abs - family.min_abs + 1;
    int nchunks = static_cast<int>(std::min<int64_t>(threads, std::max<int64_t>(1, span / 64)));
    std::vector<SurveyTally> parts(static_cast<size_t>(nchunks));
    std::vector<std::thread> pool;
    for (int c = 0; c < nchunks; ++c) {
        int64_t lo = family.min_abs + span * c / nchunks;
        int64_t hi = family.min_abs + span * (c + 1) / nchunks - 1;
        pool.emplace_back(run_chunk, lo, hi, std::ref(parts[static_cast<size_t>(c)]));
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts) result.merge(part);
    return result;
}

DensityReport density_experiment(int64_t p, char family, int64_t l_max,
                                 const arith::FactorSieve& sieve) {
    if (p <= 0 || p % 8 != 1 || !arith::is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("density experiment needs a prime p = 1 mod 8");
    if (family != 'A' && family != 'B') throw std::invalid_argument("family must be A or B");
    if (l_max > static_cast<int64_t>(sieve.limit()))
        throw std::invalid_argument("l_max exceeds sieve limit");

    int want = family == 'A' ? 1 : -1;
    std::array<uint64_t, 4> pos{}, neg{};
    uint64_t n_primes = 0;
    for (int64_t l = 17; l <= l_max; l += 8) {
        if (!sieve.is_prime(static_cast<uint32_t>(l)) || l == p) continue;
        if (arith::jacobi(l, static_cast<uint64_t>(p)) != want) continue;
        auto cls = forms::classify_pl(p, l);
        ++n_primes;
        ++pos[static_cast<size_t>(cls->predicted_rank_pos)];
        ++neg[static_cast<size_t>(cls->predicted_rank_neg)];
    }

    DensityReport rep;
    rep.p = p;
    rep.family = family;
    rep.l_max = l_max;
    rep.n_primes = n_primes;

    auto line = [&](const std::array<uint64_t, 4>& c, int rank, int num, int den) {
        double theo = static_cast<double>(num) / den;
        double obs = n_primes ? static_cast<double>(c[static_cast<size_t>(rank)]) / n_primes : 0.0;
        double se = n_primes ? std::sqrt(theo * (1.0 - theo) / static_cast<double>(n_primes)) : 0.0;
        double z = se > 0 ? (obs - theo) / se : 0.0;
        return DensityLine{rank, c[static_cast<size_t>(rank)], obs, num, den, z};
    };
    if (family == 'A') {
        rep.positive.push_back(line(pos, 1, 3, 4));
        rep.positive.push_back(line(pos, 2, 1, 4));
        rep.negative.push_back(line(neg, 1, 1, 2));
        rep.negative.push_back(line(neg, 2, 1, 2));
    } else {
        rep.positive.push_back(line(pos, 0, 1, 2));
        rep.positive.push_back(line(pos, 1, 1, 2));
    }
    return rep;
}

unsigned congruence_prediction(int64_t p, int64_t l, bool positive) {
    int pm = static_cast<int>(p % 8), lm = static_cast<int>(l % 8);
    if (pm > lm) {
        std::swap(pm, lm);
        std::swap(p, l);
    }
    auto one = [](int r) { return 1u << r; };
    if (pm != 1) {
        // no residue 1 involved: the 4-rank is pinned by the residues alone
        if (positive) {
            if (pm == 3 && lm == 3) return one(0);
            return one(1);  // (3,5), (3,7), (5,5), (5,7), (7,7)
        }
        if (pm == lm) return one(1);  // (3,3), (5,5), (7,7)
        return one(0);                // (3,5), (3,7), (5,7)
    }
    // pm == 1: a Legendre symbol splits the cell; (l/p) = (p/l) here
    int leg = arith::jacobi(l, static_cast<uint64_t>(p));
    if (positive) {
        if (lm == 3 || lm == 5) return leg < 0 ? one(0) : one(1);
        if (lm == 7) return leg < 0 ? one(1) : (one(1) | one(2));
        return leg < 0 ? (one(0) | one(1)) : (one(1) | one(2));  // (1,1)
    }
    if (lm == 3 || lm == 5) return leg < 0 ? one(0) : one(1);
    if (lm == 7) return leg < 0 ? one(0) : (one(0) | one(1));
    return leg < 0 ? one(1) : (one(1) | one(2));  // (1,1)
}

TableCheckReport congruence_table_check(int64_t bound, const arith::FactorSieve& sieve) {
    if (bound > static_cast<int64_t>(sieve.limit()) + 1)
        throw std::invalid_argument("bound exceeds sieve limit");
    TableCheckReport rep;
    rep.bound = bound;
    rep.splits = {
        {"X(1,1)(l/p)=+1", {}}, {"X(1,1)(l/p)=-1", {}}, {"X(1,7)(l/p)=+1", {}},
        {"Y(1,1)(l/p)=+1", {}}, {"Y(1,7)(l/p)=+1", {}},
    };
    auto split_add = [&](const std::string& name, int rank) {
        for (auto& cell : rep.splits)
            if (cell.name == name) ++cell.counts[static_cast<size_t>(rank)];
    };

    for (int64_t n = 15; n < bound; n += 2) {
        auto primes = sieve.factor_odd_squarefree(n);
        if (!primes || primes->size() != 2) continue;
        int64_t p = (*primes)[0], l = (*primes)[1];
        unsigned expect_pos = congruence_prediction(p, l, true);
        unsigned expect_neg = congruence_prediction(p, l, false);
        auto rp = fourrank::four_rank(n, sieve);
        auto rn = fourrank::four_rank(-n, sieve);
        ++rep.pairs_checked;
        auto check = [&](int rank, unsigned expect, int64_t d) {
            if (rank < 0 || rank > 31 || !((expect >> rank) & 1)) {
                ++rep.violation_count;
                if (rep.violations.size() < 16) rep.violations.push_back(d);
            }
        };
        check(rp->four_rank, expect_pos, n);
        check(rn->four_rank, expect_neg, -n);
        // split-cell bookkeeping
        int pm = static_cast<int>(p % 8), lm = static_cast<int>(l % 8);
        if (pm == 1 || lm == 1) {
            int hi = std::max(pm, lm);
            int leg = arith::jacobi(l, static_cast<uint64_t>(p));
            if (hi == 1) {
                if (leg > 0) {
                    split_add("X(1,1)(l/p)=+1", rp->four_rank);
                    split_add("Y(1,1)(l/p)=+1", rn->four_rank);
                } else {
                    split_add("X(1,1)(l/p)=-1", rp->four_rank);
                }
            } else if (hi == 7 && leg > 0) {
                split_add("X(1,7)(l/p)=+1", rp->four_rank);
                split_add("Y(1,7)(l/p)=+1", rn->four_rank);
            }
        }
    }
    return rep;
}

CorollaryReport corollary_check(const SurveyTally& whole,
                                const std::vector<SurveyTally>& subfamilies) {
    bool positive = !family_is_negative(whole.family.kind);
    CorollaryReport rep;
    rep.positive_family = positive;
    rep.total = whole.total;

    struct Theo {
        int subset;  // 0 = whole family, else residue of the smaller prime
        int rank;
        int num, den;
    };
    // limiting densities of each 4-rank value within the family and its
    // residue-class subfamilies
    static const Theo kX[] = {
        {0, 0, 13, 64}, {0, 1, 97, 128}, {0, 2, 5, 128},
        {1, 0, 5, 16},  {1, 1, 19, 32},  {1, 2, 3, 32},
        {3, 0, 3, 8},   {3, 1, 5, 8},
        {5, 0, 1, 8},   {5, 1, 7, 8},
        {7, 1, 15, 16}, {7, 2, 1, 16},
    };
    static const Theo kY[] = {
        {0, 0, 37, 64}, {0, 1, 13, 32}, {0, 2, 1, 64},
        {1, 0, 3, 8},   {1, 1, 9, 16},  {1, 2, 1, 16},
        {3, 0, 5, 8},   {3, 1, 3, 8},
        {5, 0, 5, 8},   {5, 1, 3, 8},
        {7, 0, 11, 16}, {7, 1, 5, 16},
    };

    auto emit = [&](const SurveyTally& t, int subset, const char* base) {
        std::string name = subset ? std::string(base) + "_" + std::to_string(subset) : base;
        for (const Theo& th : positive ? kX : kY) {
            if (th.subset != subset) continue;
            double obs = t.total ? static_cast<double>(t.counts[static_cast<size_t>(th.rank)]) /
                                       static_cast<double>(t.total)
                                 : 0.0;
            rep.lines.push_back(CorollaryLine{name, th.rank,
                                              t.counts[static_cast<size_t>(th.rank)], obs,
                                              th.num, th.den});
        }
    };

    const char* base = positive ? "X" : "Y";
    emit(whole, 0, base);
    for (const auto& sub : subfamilies) {
        int subset = sub.family.congruence ? sub.family.congruence->first : 0;
        if (subset) emit(sub, subset, base);
    }
    return rep;
}

}  // namespace k2::survey
