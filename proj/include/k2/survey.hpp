#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k2/arith.hpp"

namespace k2::survey {

/// Families of odd squarefree d swept by the surveys.
///   X    d = p*l > 0        Y     d = -p*l
///   PLR  d = p*l*r > 0      NPLR  d = -p*l*r
///   ODD  all odd squarefree d > 0
///   NODD all odd squarefree d < 0
enum class FamilyKind { X, Y, PLR, NPLR, ODD, NODD };

const char* family_name(FamilyKind k);
std::optional<FamilyKind> family_from_name(const std::string& name);

/// |d| runs over [min_abs, max_abs], both inclusive. For the two-prime
/// families an optional residue filter (i, j) keeps only d = p*l with
/// p < l, p = i and l = j mod 8; a zero component matches anything.
struct Family {
    FamilyKind kind;
    int64_t min_abs;
    int64_t max_abs;
    std::optional<std::pair<int, int>> congruence;
};

Family default_family(FamilyKind kind, int64_t max_abs);

struct SurveyTally {
    Family family;
    uint64_t total = 0;
    std::array<uint64_t, 16> counts{};  // counts[r] = number of d with 4-rank r

    void merge(const SurveyTally& other);
};

/// Exhaustive tally of 4-ranks over the family. Deterministic for any
/// thread count; the sieve is shared read-only.
SurveyTally tally(const Family& family, const arith::FactorSieve& sieve, int threads = 1);

/// Membership test against the family's factor-count and residue filters;
/// primes must be the ascending odd factorization of |d|.
bool family_accepts(const Family& family, const std::vector<int64_t>& primes);

/// True for Y, NPLR and NODD (fields of negative d).
bool family_is_negative(FamilyKind kind);

struct DensityLine {
    int rank;
    uint64_t count;
    double observed;
    int theo_num;   // theoretical density as a fraction
    int theo_den;
    double z;       // (observed - theoretical) / standard error
};

/// Observed vs predicted 4-rank densities for the prime families
///   A: l = 1 mod 8, (l/p) = +1      B: l = 1 mod 8, (l/p) = -1
/// with p = 1 mod 8 fixed. Family A predicts ranks {1:3/4, 2:1/4} for
/// Q(sqrt(pl)) and {1:1/2, 2:1/2} for Q(sqrt(-pl)); family B predicts
/// {0:1/2, 1:1/2} for Q(sqrt(pl)).
struct DensityReport {
    int64_t p;
    char family;  // 'A' or 'B'
    int64_t l_max;
    uint64_t n_primes;
    std::vector<DensityLine> positive;
    std::vector<DensityLine> negative;  // family A only
};

DensityReport density_experiment(int64_t p, char family, int64_t l_max,
                                 const arith::FactorSieve& sieve);

/// Classification of d = +-p*l by residues mod 8 and a Legendre symbol.
/// Returns the set of admissible 4-ranks as a bitmask (bit r set iff rank r
/// can occur); 0 means the pair is outside the classification.
unsigned congruence_prediction(int64_t p, int64_t l, bool positive);

struct SplitCell {
    std::string name;
    std::array<uint64_t, 4> counts{};
};

struct TableCheckReport {
    int64_t bound = 0;
    uint64_t pairs_checked = 0;
    uint64_t violation_count = 0;
    std::vector<int64_t> violations;  // offending d, at most 16 retained
    std::vector<SplitCell> splits;    // tallies for the split cells
};

/// Checks every d = +-p*l with p*l < bound against congruence_prediction.
/// Any violation signals an implementation bug.
TableCheckReport congruence_table_check(int64_t bound, const arith::FactorSieve& sieve);

struct CorollaryLine {
    std::string set_name;
    int rank;
    uint64_t count;
    double observed;
    int theo_num;
    int theo_den;
};

/// Observed 4-rank proportions in X (or Y) and its congruence subfamilies
/// X_1, X_3, X_5, X_7 against their limiting densities. Reporting only; the
/// convergence is slow and is not asserted.
struct CorollaryReport {
    bool positive_family;
    uint64_t total;
    std::vector<CorollaryLine> lines;
};

CorollaryReport corollary_check(const SurveyTally& whole,
                                const std::vector<SurveyTally>& subfamilies);

}  // namespace k2::survey
