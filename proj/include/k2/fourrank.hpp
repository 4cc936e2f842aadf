#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "k2/arith.hpp"

namespace k2::fourrank {

/// Raised when a required x^2 - 2y^2 representation is missing. Indicates an
/// internal bug (the search bound is proven sufficient), never bad input.
struct PellFailure : std::logic_error {
    using std::logic_error::logic_error;
};

/// Norm status of -1, 2 and -2 in Q(sqrt(d)), decided locally at the places
/// 2, infinity and the odd primes dividing d. Norms form a group modulo
/// squares, so either all three hold, exactly one holds, or none does.
struct NormFlags {
    bool minus_one;
    bool two;
    bool minus_two;
};

struct FieldSpec {
    int64_t d;                    // odd squarefree, |d| > 1
    std::vector<int64_t> primes;  // odd prime factors of |d|, ascending
    int t;                        // primes.size()
    bool two_is_norm;
    bool minus_one_is_norm;
    bool minus_two_is_norm;
};

/// The (t+1) x (t+1) grid of local Hilbert symbols whose GF(2) rank drives
/// the 4-rank. Columns sit at the places 2, p1, ..., pt. Row i < t-1 pairs
/// -d with p_{i+1}; the next row pairs -d with v; the last row pairs |d|
/// with -1. v = 2 unless 2 is a norm, in which case v = u + w for the
/// canonical solution of d = u^2 - 2w^2.
struct SymbolMatrix {
    std::vector<std::vector<int>> sign_grid;
    std::vector<int64_t> column_places;
    std::vector<int64_t> row_args;
    int64_t v;
};

struct RankReport {
    int64_t d;
    int t;
    int rank;      // GF(2) rank of the symbol matrix
    int a;         // 0 when 2 is a norm, 1 otherwise (d > 0 only)
    int a_prime;   // 0 / 1 / 2 as all / one / none of {-1, 2, -2} are norms
    int four_rank; // d > 0: t - rank + a_prime - a ; d < 0: t - rank
    int64_t v;
};

/// n is a norm from Q(sqrt(d)) iff (n, d)_v = +1 at every relevant place.
bool is_norm(int64_t n, int64_t d, const std::vector<int64_t>& primes);

NormFlags norm_flags(int64_t d, const std::vector<int64_t>& primes);

std::optional<FieldSpec> make_field_spec(int64_t d, const arith::FactorSieve& sieve);

/// v used in the symbol matrix; throws PellFailure if 2 is a norm yet no
/// representation d = u^2 - 2w^2 is found.
int64_t choose_v(const FieldSpec& spec);

std::optional<SymbolMatrix> build_matrix(int64_t d, const arith::FactorSieve& sieve);

std::optional<RankReport> four_rank(int64_t d, const arith::FactorSieve& sieve);

/// four_rank with a caller-supplied solution of d = u^2 - 2w^2 in place of
/// the canonical one. The result must not depend on the choice; used by the
/// choice-independence checks. Throws std::invalid_argument if pell does not
/// solve d = u^2 - 2w^2.
std::optional<RankReport> four_rank_with_pell(int64_t d, const arith::FactorSieve& sieve,
                                              const arith::PellSolution& pell);

}  // namespace k2::fourrank
