#include "k2/arith.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace k2::arith {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t)a * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // The first twelve primes witness compositeness of every n < 3.3e24.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

int64_t isqrt(int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

FactorSieve::FactorSieve(uint32_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("sieve limit must be >= 2");
    if (limit > (1u << 31)) throw std::length_error("sieve limit exceeds memory budget");
    spf_.assign(static_cast<size_t>(limit) + 1, 0);
    std::vector<uint32_t> primes;
    for (uint32_t i = 2; i <= limit; ++i) {
        if (!spf_[i]) {
            spf_[i] = i;
            primes.push_back(i);
        }
        for (uint32_t p : primes) {
            if (p > spf_[i] || static_cast<uint64_t>(p) * i > limit) break;
            spf_[p * i] = p;
        }
    }
}

std::optional<std::vector<int64_t>> FactorSieve::factor_odd_squarefree(int64_t d) const {
    uint64_t ad = d < 0 ? static_cast<uint64_t>(-d) : static_cast<uint64_t>(d);
    if (ad <= 1 || ad > limit_ || (ad & 1) == 0) return std::nullopt;
    std::vector<int64_t> primes;
    uint32_t n = static_cast<uint32_t>(ad);
    while (n > 1) {
        uint32_t p = spf_[n];
        primes.push_back(p);
        n /= p;
        if (n % p == 0) return std::nullopt;
    }
    // smallest-factor peeling yields ascending primes
    return primes;
}

int jacobi(int64_t a, uint64_t n) {
    a %= static_cast<int64_t>(n);
    if (a < 0) a += static_cast<int64_t>(n);
    uint64_t u = static_cast<uint64_t>(a);
    uint64_t m = n;
    int s = 1;
    while (u != 0) {
        int z = __builtin_ctzll(u);
        u >>= z;
        if (z & 1) {
            uint64_t r = m & 7;
            if (r == 3 || r == 5) s = -s;
        }
        if ((u & 3) == 3 && (m & 3) == 3) s = -s;
        uint64_t t = m % u;
        m = u;
        u = t;
    }
    return m == 1 ? s : 0;
}

std::optional<uint64_t> sqrt_mod(int64_t a, uint64_t p) {
    int64_t ar = a % static_cast<int64_t>(p);
    if (ar < 0) ar += static_cast<int64_t>(p);
    uint64_t x = static_cast<uint64_t>(ar);
    if (x == 0) return 0;
    if (jacobi(static_cast<int64_t>(x), p) != 1) return std::nullopt;

    // Tonelli-Shanks
    uint64_t q = p - 1;
    uint64_t s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    uint64_t z = 2;
    while (jacobi(static_cast<int64_t>(z), p) != -1) ++z;
    uint64_t m = s;
    uint64_t c = powmod(z, q, p);
    uint64_t t = powmod(x, q, p);
    uint64_t r = powmod(x, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0;
        for (uint64_t t2 = t; t2 != 1; t2 = mulmod(t2, t2, p)) ++i;
        uint64_t b = powmod(c, uint64_t{1} << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return std::min(r, p - r);
}

std::optional<PellSolution> solve_x2_minus_2y2(int64_t n) {
    if (n == 0) return std::nullopt;
    // Descent through the automorph (u,w) -> (|3u-4w|, |3w-2u|): the minimal
    // u > 0 solution has w <= sqrt(n/2) for n > 0 and w <= sqrt(-n) for
    // n < 0, except when the descent lands on u = 0 (possible only for
    // n = -2k^2), whose unit step sits at w = 3*sqrt(-n/2) exactly.
    long double root = std::sqrt(static_cast<long double>(n < 0 ? -n : n) / 2.0L);
    int64_t wmax = static_cast<int64_t>(std::ceil(3.0L * root)) + 2;
    int64_t w0 = 0;
    if (n < 0) {
        w0 = isqrt((-n) / 2);  // below this, n + 2w^2 < 0
    }
    for (int64_t w = w0; w <= wmax; ++w) {
        int64_t s = n + 2 * w * w;
        if (s <= 0) continue;
        int64_t u = isqrt(s);
        if (u * u == s && u > 0) return PellSolution{u, w, n};
    }
    return std::nullopt;
}

std::optional<std::pair<int64_t, int64_t>> solve_x2_plus_32y2(int64_t l) {
    if (l < 1) return std::nullopt;
    for (int64_t y = 0; 32 * y * y <= l; ++y) {
        int64_t s = l - 32 * y * y;
        int64_t x = isqrt(s);
        if (x * x == s) return std::make_pair(x, y);
    }
    return std::nullopt;
}

PellSolution pell_unit_apply(const PellSolution& s) {
    return PellSolution{3 * s.u + 4 * s.w, 2 * s.u + 3 * s.w, s.value};
}

}  // namespace k2::arith
