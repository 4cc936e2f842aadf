#include "k2/localsym.hpp"

#include <cassert>

#include "k2/arith.hpp"

namespace k2::localsym {

namespace {

// (x-1)/2 mod 2 for odd x
int eps(int64_t x) {
    int64_t r = x % 4;
    if (r < 0) r += 4;
    return r == 3;
}

// (x^2-1)/8 mod 2 for odd x
int omega(int64_t x) {
    int64_t r = x % 8;
    if (r < 0) r += 8;
    return r == 3 || r == 5;
}

}  // namespace

int hilbert_odd(int64_t a, int64_t b, int64_t p) {
    assert(a != 0 && b != 0 && p > 2 && (p & 1));
    int alpha = 0, beta = 0;
    while (a % p == 0) {
        a /= p;
        ++alpha;
    }
    while (b % p == 0) {
        b /= p;
        ++beta;
    }
    int s = 1;
    if ((alpha & 1) && (beta & 1) && eps(p)) s = -s;
    if (beta & 1) s *= arith::jacobi(a, static_cast<uint64_t>(p));
    if (alpha & 1) s *= arith::jacobi(b, static_cast<uint64_t>(p));
    return s;
}

int hilbert_2(int64_t a, int64_t b) {
    assert(a != 0 && b != 0);
    int alpha = 0, beta = 0;
    while ((a & 1) == 0) {
        a >>= 1;
        ++alpha;
    }
    while ((b & 1) == 0) {
        b >>= 1;
        ++beta;
    }
    int e = (eps(a) & eps(b)) ^ ((alpha & 1) & omega(b)) ^ ((beta & 1) & omega(a));
    return e ? -1 : 1;
}

int hilbert_inf(int64_t a, int64_t b) {
    return (a < 0 && b < 0) ? -1 : 1;
}

int hilbert(int64_t a, int64_t b, int64_t p) {
    return p == 2 ? hilbert_2(a, b) : hilbert_odd(a, b, p);
}

int quad_symbol_sqrt2(int64_t ac, int64_t bc, int64_t l) {
    auto alpha = arith::sqrt_mod(2, static_cast<uint64_t>(l));
    assert(alpha.has_value());  // l = 1 mod 8
    int64_t am = ac % l, bm = bc % l;
    int64_t norm = (am * am - 2 * bm * bm) % l;
    if (norm == 0) throw DegenerateSymbol("quad_symbol_sqrt2: l divides ac^2 - 2 bc^2");
    int64_t x = (am + bm * static_cast<int64_t>(*alpha)) % l;
    return arith::jacobi(x, static_cast<uint64_t>(l));
}

}  // namespace k2::localsym
