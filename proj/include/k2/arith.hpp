#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace k2::arith {

/// Deterministic Miller-Rabin, exact for all n < 2^63.
bool is_prime(uint64_t n);

/// floor(sqrt(n)) for n >= 0; -1 for negative n.
int64_t isqrt(int64_t n);

/// Smallest-prime-factor table for 2 <= n <= limit.
/// Immutable after construction; safe for shared concurrent reads.
class FactorSieve {
public:
    explicit FactorSieve(uint32_t limit);

    uint32_t limit() const { return limit_; }
    uint32_t smallest_factor(uint32_t n) const { return spf_[n]; }
    bool is_prime(uint32_t n) const { return n >= 2 && spf_[n] == n; }

    /// Odd prime factors p1 < ... < pt of |d|, or nullopt when |d| is even,
    /// not squarefree, or 1. Requires |d| <= limit.
    std::optional<std::vector<int64_t>> factor_odd_squarefree(int64_t d) const;

private:
    uint32_t limit_;
    std::vector<uint32_t> spf_;
};

/// Jacobi symbol (a/n) for odd n >= 1; 0 iff gcd(a,n) > 1.
int jacobi(int64_t a, uint64_t n);

/// Square root of a mod p (p an odd prime), the root in [0, (p-1)/2];
/// nullopt when a is a non-residue.
std::optional<uint64_t> sqrt_mod(int64_t a, uint64_t p);

/// Integer solution of u^2 - 2*w^2 = value.
/// Canonical form: w minimal >= 0, then u > 0.
struct PellSolution {
    int64_t u;
    int64_t w;
    int64_t value;
};

/// Canonical solution of x^2 - 2y^2 = n, or nullopt when n is not
/// represented by the form.
std::optional<PellSolution> solve_x2_minus_2y2(int64_t n);

/// Representation l = x^2 + 32y^2 with x, y >= 0 and y minimal, if any.
std::optional<std::pair<int64_t, int64_t>> solve_x2_plus_32y2(int64_t l);

/// Next solution with the same form value: (u, w) -> (3u+4w, 2u+3w).
PellSolution pell_unit_apply(const PellSolution& s);

}  // namespace k2::arith
