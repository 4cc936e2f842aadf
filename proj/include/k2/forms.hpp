#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "k2/arith.hpp"

namespace k2::forms {

/// Two independent routes to the same predicate disagreed.
struct ConsistencyViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct PellFailure : std::logic_error {
    using std::logic_error::logic_error;
};

/// Quadratic-form classification of a pair of primes p, l = 1 mod 8 and the
/// 4-ranks it predicts for Q(sqrt(pl)) and Q(sqrt(-pl)). Predictions use only
/// symbol evaluations, never the symbol matrix.
struct FormClassification {
    int64_t p;
    int64_t l;
    int legendre_lp;              // (l/p) = (p/l)
    bool p_sat_1_32;
    bool l_sat_1_32;
    std::optional<int> pi_symbol; // set when legendre_lp == +1
    int predicted_rank_pos;       // 4-rank of Q(sqrt(pl))
    int predicted_rank_neg;       // 4-rank of Q(sqrt(-pl)); constant 1 when legendre_lp == -1
};

/// l = x^2 + 32 y^2 for some integers x, y. Computed both by bounded search
/// and by the symbol (1 + sqrt(2) / l); throws ConsistencyViolation if the
/// routes disagree.
bool satisfies_1_32(int64_t l);

/// Canonical (a, b) with a^2 - 2b^2 = p, for p = 1 mod 8.
arith::PellSolution pell_pi(int64_t p);

/// (pi / l) where pi = a + b sqrt(2) has norm p. Requires p, l = 1 mod 8
/// and (l/p) = +1; throws std::invalid_argument otherwise.
int pi_symbol(int64_t p, int64_t l);

/// nullopt when p, l are not distinct primes = 1 mod 8.
std::optional<FormClassification> classify_pl(int64_t p, int64_t l);

/// Narrow class number of the real quadratic order of discriminant D,
/// counted as reduction cycles of reduced primitive indefinite forms.
struct ClassNumberReport {
    int64_t discriminant;
    int64_t h_plus;
    std::vector<int64_t> cycle_sizes;
};

/// nullopt unless D > 0, D = 0 or 1 mod 4, and D is not a square.
std::optional<ClassNumberReport> narrow_class_number(int64_t D);

/// Small-instance oracle for the two form predicates behind pi_symbol:
///   sat_p_minus2 : l^(h+/4) = p n^2 - 2 m^2 with m != 0 mod l
///   sat_1_minus2p: l^(h+/4) = n^2 - 2p m^2 with m != 0 mod l
/// `consistent` is true when exactly one holds and it matches pi_symbol.
/// nullopt (RangeExceeded) when l^(h+/4) or the search bound leaves the
/// oracle's 64-bit budget.
///
/// For p with p x^2 - 2 y^2 = 1 solvable (x1 - 1 = 4a^2, x1 + 1 = 2p b^2 at
/// the fundamental solution of x^2 - 2p y^2 = 1) the two forms lie in the
/// same narrow class, the predicates coincide, and their common value tracks
/// pi_symbol = +1; `degenerate` reports this and `consistent` is then false
/// by construction.
struct FormCheck {
    bool sat_p_minus2;
    bool sat_1_minus2p;
    bool degenerate;
    bool consistent;
};

std::optional<FormCheck> form_representation_check(int64_t p, int64_t l,
                                                   const ClassNumberReport& report);

}  // namespace k2::forms
