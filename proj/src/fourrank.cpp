#include "k2/fourrank.hpp"

#include <array>
#include <cassert>
#include <numeric>

#include "k2/gf2.hpp"
#include "k2/localsym.hpp"

namespace k2::fourrank {

namespace {

constexpr int kMaxFactors = 15;  // 3*5*7*...*47 overflows any sieve we build

// Second symbol arguments, one per row: p1..p_{t-1}, v, -1.
int64_t row_arg(const std::vector<int64_t>& primes, int64_t v, int row) {
    int t = static_cast<int>(primes.size());
    if (row < t - 1) return primes[row];
    return row == t - 1 ? v : -1;
}

// Row `row` of the symbol matrix as packed bits (-1 -> 1), columns at the
// places 2, p1, ..., pt. The last row pairs |d| with -1, all others -d.
uint64_t row_bits(int64_t d, const std::vector<int64_t>& primes, int64_t v, int row) {
    int t = static_cast<int>(primes.size());
    int64_t first = (row == t) ? (d < 0 ? -d : d) : -d;
    int64_t second = row_arg(primes, v, row);
    uint64_t bits = 0;
    if (localsym::hilbert_2(first, second) < 0) bits |= 1;
    for (int c = 0; c < t; ++c)
        if (localsym::hilbert_odd(first, second, primes[c]) < 0) bits |= uint64_t{1} << (c + 1);
    return bits;
}

RankReport assemble_report(int64_t d, const FieldSpec& spec, int64_t v, int rank) {
    RankReport rep;
    rep.d = d;
    rep.t = spec.t;
    rep.rank = rank;
    rep.v = v;
    rep.a = spec.two_is_norm ? 0 : 1;
    // Norms among {-1, 2, -2} form a subgroup of {±1, ±2} mod squares, so
    // the number of them that are norms is 0, 1 or 3.
    int norms = int(spec.minus_one_is_norm) + int(spec.two_is_norm) + int(spec.minus_two_is_norm);
    rep.a_prime = norms == 3 ? 0 : (norms == 1 ? 1 : 2);
    rep.four_rank = d < 0 ? spec.t - rank : spec.t - rank + rep.a_prime - rep.a;
    return rep;
}

}  // namespace

bool is_norm(int64_t n, int64_t d, const std::vector<int64_t>& primes) {
    if (localsym::hilbert_inf(n, d) < 0) return false;
    if (localsym::hilbert_2(n, d) < 0) return false;
    for (int64_t p : primes)
        if (localsym::hilbert_odd(n, d, p) < 0) return false;
    return true;
}

NormFlags norm_flags(int64_t d, const std::vector<int64_t>& primes) {
    return NormFlags{is_norm(-1, d, primes), is_norm(2, d, primes), is_norm(-2, d, primes)};
}

std::optional<FieldSpec> make_field_spec(int64_t d, const arith::FactorSieve& sieve) {
    auto primes = sieve.factor_odd_squarefree(d);
    if (!primes) return std::nullopt;
    FieldSpec spec;
    spec.d = d;
    spec.t = static_cast<int>(primes->size());
    spec.primes = std::move(*primes);
    NormFlags f = norm_flags(d, spec.primes);
    spec.two_is_norm = f.two;
    spec.minus_one_is_norm = f.minus_one;
    spec.minus_two_is_norm = f.minus_two;
    return spec;
}

int64_t choose_v(const FieldSpec& spec) {
    if (!spec.two_is_norm) return 2;
    auto sol = arith::solve_x2_minus_2y2(spec.d);
    if (!sol) throw PellFailure("no representation d = u^2 - 2w^2 within the search bound");
    int64_t v = sol->u + sol->w;
    int64_t ad = spec.d < 0 ? -spec.d : spec.d;
    if (std::gcd(v < 0 ? -v : v, ad) != 1)
        throw PellFailure("u + w shares a factor with squarefree d");
    return v;
}

std::optional<SymbolMatrix> build_matrix(int64_t d, const arith::FactorSieve& sieve) {
    auto spec = make_field_spec(d, sieve);
    if (!spec) return std::nullopt;
    int64_t v = choose_v(*spec);
    int t = spec->t;

    SymbolMatrix m;
    m.v = v;
    m.column_places.push_back(2);
    for (int64_t p : spec->primes) m.column_places.push_back(p);
    for (int r = 0; r <= t; ++r) m.row_args.push_back(row_arg(spec->primes, v, r));
    m.sign_grid.assign(t + 1, std::vector<int>(t + 1, 1));
    for (int r = 0; r <= t; ++r) {
        uint64_t bits = row_bits(d, spec->primes, v, r);
        for (int c = 0; c <= t; ++c)
            m.sign_grid[r][c] = (bits >> c) & 1 ? -1 : 1;
    }
    return m;
}

std::optional<RankReport> four_rank(int64_t d, const arith::FactorSieve& sieve) {
    auto spec = make_field_spec(d, sieve);
    if (!spec) return std::nullopt;
    int64_t v = choose_v(*spec);
    std::array<uint64_t, kMaxFactors + 1> rows;
    int t = spec->t;
    for (int r = 0; r <= t; ++r) rows[r] = row_bits(d, spec->primes, v, r);
    int rank = gf2::rank_rows64({rows.data(), static_cast<size_t>(t + 1)}, t + 1);
    return assemble_report(d, *spec, v, rank);
}

std::optional<RankReport> four_rank_with_pell(int64_t d, const arith::FactorSieve& sieve,
                                              const arith::PellSolution& pell) {
    auto spec = make_field_spec(d, sieve);
    if (!spec) return std::nullopt;
    if (pell.u * pell.u - 2 * pell.w * pell.w != d)
        throw std::invalid_argument("supplied solution does not represent d");
    int64_t v = pell.u + pell.w;
    int64_t ad = d < 0 ? -d : d;
    if (std::gcd(v < 0 ? -v : v, ad) != 1)
        throw std::invalid_argument("supplied solution gives v sharing a factor with d");
    std::array<uint64_t, kMaxFactors + 1> rows;
    int t = spec->t;
    for (int r = 0; r <= t; ++r) rows[r] = row_bits(d, spec->primes, v, r);
    int rank = gf2::rank_rows64({rows.data(), static_cast<size_t>(t + 1)}, t + 1);
    return assemble_report(d, *spec, v, rank);
}

}  // namespace k2::fourrank
