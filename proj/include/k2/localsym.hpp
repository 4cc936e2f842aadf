#pragma once

#include <cstdint>
#include <stdexcept>

namespace k2::localsym {

struct DegenerateSymbol : std::domain_error {
    using std::domain_error::domain_error;
};

/// Hilbert symbol (a,b)_p at an odd prime p; a, b nonzero.
int hilbert_odd(int64_t a, int64_t b, int64_t p);

/// Hilbert symbol (a,b)_2.
int hilbert_2(int64_t a, int64_t b);

/// Hilbert symbol at the real place: -1 iff a < 0 and b < 0.
int hilbert_inf(int64_t a, int64_t b);

/// (a,b)_p with p == 2 meaning the dyadic place, odd p the finite place.
int hilbert(int64_t a, int64_t b, int64_t p);

/// Quadratic residue symbol ((ac + bc*sqrt(2)) / l) for a prime l = 1 mod 8,
/// evaluated through a square root of 2 mod l. Requires l coprime to
/// ac^2 - 2*bc^2; throws DegenerateSymbol otherwise.
int quad_symbol_sqrt2(int64_t ac, int64_t bc, int64_t l);

}  // namespace k2::localsym
