#include "k2/forms.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "k2/localsym.hpp"

namespace k2::forms {

namespace {

bool is_1_mod_8_prime(int64_t p) {
    return p > 0 && p % 8 == 1 && arith::is_prime(static_cast<uint64_t>(p));
}

// ---- reduced indefinite forms -------------------------------------------

struct Form {
    int64_t a, b, c;
    bool operator<(const Form& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
    bool operator==(const Form& o) const = default;
};

// Reduction step: (a,b,c) -> (c, r, (r^2 - D)/(4c)) with r = -b mod 2|c|
// placed in the window (sqrt(D) - 2|c|, sqrt(D)). Maps reduced forms to
// reduced forms and walks each cycle.
Form rho(const Form& f, int64_t D, int64_t sq) {
    int64_t m = 2 * (f.c < 0 ? -f.c : f.c);
    int64_t r = sq - (((sq + f.b) % m) + m) % m;
    return Form{f.c, r, (r * r - D) / (4 * f.c)};
}

// All reduced primitive forms of discriminant D: 0 < b < sqrt(D), b = D mod 2,
// and sqrt(D) - b < 2|a| < sqrt(D) + b with ac = (b^2 - D)/4.
std::map<Form, bool> reduced_forms(int64_t D, int64_t sq) {
    std::map<Form, bool> forms;
    for (int64_t b = (D & 1) ? 1 : 2; b * b < D; b += 2) {
        int64_t N = (D - b * b) / 4;  // = -a*c
        for (int64_t g = 1; g * g <= N; ++g) {
            if (N % g) continue;
            for (int64_t a : {g, N / g}) {
                // with sq = floor(sqrt D) and D nonsquare:
                //   2a < sqrt(D) + b  <=>  2a - b <= sq
                //   sqrt(D) - b < 2a  <=>  sq + 1 <= 2a + b
                if (2 * a - b > sq || 2 * a + b < sq + 1) continue;
                int64_t c = -(N / a);
                if (std::gcd(std::gcd(a, b), -c) != 1) continue;
                forms.emplace(Form{a, b, c}, false);
                forms.emplace(Form{-a, b, -c}, false);
                if (g == N / g) break;
            }
        }
    }
    return forms;
}

// ---- fundamental solution of x^2 - D y^2 = 1 ----------------------------

using i128 = __int128;

constexpr i128 kPellCap = i128{1} << 100;

// Convergents of the continued fraction of sqrt(D); at the end of a period
// of length r the convergent solves x^2 - D y^2 = (-1)^r. nullopt when the
// fundamental solution leaves the working range.
std::optional<std::pair<i128, i128>> fundamental_pell(int64_t D) {
    int64_t a0 = arith::isqrt(D);
    if (a0 * a0 == D) return std::nullopt;
    int64_t P = 0, Q = 1, a = a0;
    i128 xp = 1, yp = 0;   // h_{k-2}, k_{k-2}
    i128 xc = a0, yc = 1;  // h_{k-1}, k_{k-1}
    while (true) {
        P = a * Q - P;
        Q = (D - P * P) / Q;
        a = (a0 + P) / Q;
        if (Q == 1) {
            i128 v = xc * xc - (i128)D * yc * yc;
            if (v == 1) return std::make_pair(xc, yc);
            // v == -1: square through the unit
            i128 x1 = 2 * xc * xc + 1;
            i128 y1 = 2 * xc * yc;
            if (x1 > kPellCap || y1 > kPellCap) return std::nullopt;
            return std::make_pair(x1, y1);
        }
        i128 xn = (i128)a * xc + xp;
        i128 yn = (i128)a * yc + yp;
        xp = xc;
        yp = yc;
        xc = xn;
        yc = yn;
        if (xc > kPellCap || yc > kPellCap) return std::nullopt;
    }
}

i128 isqrt_i128(i128 n) {
    if (n < 0) return -1;
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

bool satisfies_1_32(int64_t l) {
    if (!is_1_mod_8_prime(l)) throw std::invalid_argument("satisfies_1_32 needs a prime l = 1 mod 8");
    bool direct = arith::solve_x2_plus_32y2(l).has_value();
    bool symbol = localsym::quad_symbol_sqrt2(1, 1, l) == 1;
    if (direct != symbol)
        throw ConsistencyViolation("form search and 1+sqrt(2) symbol disagree at l=" + std::to_string(l));
    return direct;
}

arith::PellSolution pell_pi(int64_t p) {
    if (!is_1_mod_8_prime(p)) throw std::invalid_argument("pell_pi needs a prime p = 1 mod 8");
    auto s = arith::solve_x2_minus_2y2(p);
    if (!s) throw PellFailure("no a^2 - 2b^2 = p within the search bound");
    return *s;
}

int pi_symbol(int64_t p, int64_t l) {
    if (!is_1_mod_8_prime(p) || !is_1_mod_8_prime(l) || p == l)
        throw std::invalid_argument("pi_symbol needs distinct primes p, l = 1 mod 8");
    if (arith::jacobi(l, static_cast<uint64_t>(p)) != 1)
        throw std::invalid_argument("pi_symbol needs (l/p) = +1");
    auto pi = pell_pi(p);
    return localsym::quad_symbol_sqrt2(pi.u, pi.w, l);
}

std::optional<FormClassification> classify_pl(int64_t p, int64_t l) {
    if (!is_1_mod_8_prime(p) || !is_1_mod_8_prime(l) || p == l) return std::nullopt;
    FormClassification out;
    out.p = p;
    out.l = l;
    out.legendre_lp = arith::jacobi(l, static_cast<uint64_t>(p));
    out.p_sat_1_32 = satisfies_1_32(p);
    out.l_sat_1_32 = satisfies_1_32(l);
    if (out.legendre_lp == 1) {
        int pi = pi_symbol(p, l);
        int sq2 = localsym::quad_symbol_sqrt2(1, 1, l);
        out.pi_symbol = pi;
        // (v/l) = (pi/l)(1+sqrt2/l) for d = pl, and (pi/l) for d = -pl
        bool both_or_neither = out.p_sat_1_32 == out.l_sat_1_32;
        out.predicted_rank_pos = (both_or_neither && pi * sq2 == 1) ? 2 : 1;
        out.predicted_rank_neg = (pi == 1) ? 2 : 1;
    } else {
        out.predicted_rank_pos = (out.p_sat_1_32 == out.l_sat_1_32) ? 1 : 0;
        out.predicted_rank_neg = 1;
    }
    return out;
}

std::optional<ClassNumberReport> narrow_class_number(int64_t D) {
    if (D <= 0) return std::nullopt;
    int64_t r = D % 4;
    if (r != 0 && r != 1) return std::nullopt;
    int64_t sq = arith::isqrt(D);
    if (sq * sq == D) return std::nullopt;

    auto forms = reduced_forms(D, sq);
    ClassNumberReport rep;
    rep.discriminant = D;
    for (auto& [start, seen] : forms) {
        if (seen) continue;
        int64_t len = 0;
        Form f = start;
        do {
            auto it = forms.find(f);
            if (it == forms.end() || (it->second && len > 0))
                throw std::logic_error("reduction step left the reduced set");
            it->second = true;
            f = rho(f, D, sq);
            ++len;
        } while (!(f == start));
        rep.cycle_sizes.push_back(len);
    }
    rep.h_plus = static_cast<int64_t>(rep.cycle_sizes.size());
    return rep;
}

std::optional<FormCheck> form_representation_check(int64_t p, int64_t l,
                                                   const ClassNumberReport& report) {
    if (!is_1_mod_8_prime(p) || !is_1_mod_8_prime(l) || p == l)
        throw std::invalid_argument("form_representation_check needs primes p, l = 1 mod 8");
    if (report.discriminant != 8 * p || report.h_plus % 4 != 0)
        throw std::invalid_argument("report must be for discriminant 8p with 4 | h+");

    int64_t e = report.h_plus / 4;
    i128 L = 1;
    for (int64_t i = 0; i < e; ++i) {
        L *= l;
        if (L > (i128{1} << 62)) return std::nullopt;  // RangeExceeded
    }
    auto fund = fundamental_pell(2 * p);
    if (!fund) return std::nullopt;
    auto [x1, y1] = *fund;

    // If x^2 - 2p y^2 = N > 0 is solvable, some solution in each class has
    // y <= y1 * sqrt(N / (2(x1+1))).
    auto ybound = [&](i128 N) {
        return static_cast<long double>(y1) *
               std::sqrt(static_cast<long double>(N) /
                         (2.0L * (static_cast<long double>(x1) + 1.0L)));
    };
    if (ybound(L) > 5e7L || ybound(L * p) > 5e7L) return std::nullopt;  // RangeExceeded

    auto search = [&](i128 N, bool p_divides_x) -> bool {
        int64_t mmax = static_cast<int64_t>(ybound(N)) + 1;
        for (int64_t m = 1; m <= mmax; ++m) {
            if (m % l == 0) continue;  // side condition
            i128 s = N + (i128)2 * p * m * m;  // = x^2 when (x, m) solves it
            if (p_divides_x) {
                // p n^2 - 2 m^2 = L  via  x = p n: n^2 = (L + 2m^2)/p
                if (s % p != 0) continue;
                i128 q = s / p;
                if (q % p != 0) continue;
                i128 n2 = q / p;
                i128 n = isqrt_i128(n2);
                if (n * n == n2 && n > 0) return true;
            } else {
                i128 n = isqrt_i128(s);
                if (n * n == s && n > 0) return true;
            }
        }
        return false;
    };

    FormCheck out;
    out.sat_1_minus2p = search(L, false);
    out.sat_p_minus2 = search(L * p, true);

    // p n^2 - 2 m^2 = 1 is solvable exactly when x1 - 1 = 4a^2 and
    // x1 + 1 = 2p b^2; the form p x^2 - 2 y^2 is then narrowly principal
    // and the two predicates name the same class.
    out.degenerate = false;
    if ((x1 - 1) % 4 == 0 && (x1 + 1) % (2 * p) == 0) {
        i128 a2 = (x1 - 1) / 4, b2 = (x1 + 1) / (2 * p);
        i128 a = isqrt_i128(a2), b = isqrt_i128(b2);
        out.degenerate = (a * a == a2 && b * b == b2);
    }

    int pi = pi_symbol(p, l);
    bool exactly_one = out.sat_1_minus2p != out.sat_p_minus2;
    bool matches = (pi == 1) ? out.sat_1_minus2p : out.sat_p_minus2;
    out.consistent = exactly_one && matches;
    return out;
}

}  // namespace k2::forms
