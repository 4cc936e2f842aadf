#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k2/arith.hpp"

namespace k2::verify {

struct SuiteResult {
    std::string suite;
    uint64_t checked = 0;
    uint64_t failures = 0;
    std::vector<std::string> counterexamples;  // at most 16 retained

    bool ok() const { return failures == 0; }
    void fail(std::string msg);
};

/// Hilbert symbol properties on seeded random inputs: symmetry, bilinearity,
/// the product formula over all places, and triviality at unramified places.
SuiteResult symbols_suite(uint64_t samples, uint64_t seed);

/// Exactly one of the two form predicates holds per pair, and the
/// small-instance representation oracle agrees with the symbol route.
SuiteResult prop34_suite(int64_t max_pl, const arith::FactorSieve& sieve);

/// (v/l) factors through the pi and 1+sqrt(2) symbols for d = +-p*l.
SuiteResult prop44_suite(int64_t max_pl, const arith::FactorSieve& sieve);

/// Congruence tables hold for every d = +-p*l below the bound.
SuiteResult tables_suite(int64_t bound, const arith::FactorSieve& sieve);

/// four_rank is independent of which solution of d = u^2 - 2w^2 feeds v.
SuiteResult rankinv_suite(int64_t bound, const arith::FactorSieve& sieve);

/// Dual-route <1,32> agreement over primes l = 1 mod 8 below the bound, and
/// h+(8p) = 0 mod 4 for primes p = 1 mod 8 below min(bound, 10^4).
SuiteResult forms_suite(int64_t bound, const arith::FactorSieve& sieve);

/// Bit-packed GF(2) rank against a naive eliminator on random small matrices.
SuiteResult gf2_oracle_suite(uint64_t samples, uint64_t seed);

/// Symbol-route classifier against the matrix engine for every pair
/// p, l = 1 mod 8 with p*l < bound, both signs.
SuiteResult classifier_matrix_suite(int64_t bound, const arith::FactorSieve& sieve);

}  // namespace k2::verify
