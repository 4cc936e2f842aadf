#include "k2/fourrank.hpp"

#include "doctest.h"
#include "k2/verify.hpp"

using namespace k2;

namespace {

const arith::FactorSieve& shared_sieve() {
    static arith::FactorSieve sieve(1000000);
    return sieve;
}

}  // namespace

TEST_CASE("norm flags from local data") {
    const auto& sieve = shared_sieve();
    auto f15 = *fourrank::make_field_spec(15, sieve);
    CHECK_FALSE(f15.two_is_norm);
    CHECK_FALSE(f15.minus_one_is_norm);
    auto f7 = *fourrank::make_field_spec(7, sieve);
    CHECK(f7.two_is_norm);
    CHECK_FALSE(f7.minus_one_is_norm);
    auto f17 = *fourrank::make_field_spec(17, sieve);
    CHECK(f17.two_is_norm);
    CHECK(f17.minus_one_is_norm);

    // congruence characterizations over a range: 2 is a norm iff every
    // factor is +-1 mod 8; for d > 0, -1 iff all are 1 mod 4, -2 iff all
    // are 1 or 3 mod 8
    for (int64_t d = 3; d < 20000; d += 2) {
        auto spec = fourrank::make_field_spec(d, sieve);
        if (!spec) continue;
        bool all_pm1 = true, all_1mod4 = true, all_13 = true;
        for (int64_t p : spec->primes) {
            if (p % 8 != 1 && p % 8 != 7) all_pm1 = false;
            if (p % 4 != 1) all_1mod4 = false;
            if (p % 8 != 1 && p % 8 != 3) all_13 = false;
        }
        CHECK(spec->two_is_norm == all_pm1);
        CHECK(spec->minus_one_is_norm == all_1mod4);
        CHECK(spec->minus_two_is_norm == all_13);

        auto neg = fourrank::make_field_spec(-d, sieve);
        CHECK(neg->two_is_norm == all_pm1);
        CHECK_FALSE(neg->minus_one_is_norm);  // impossible in an imaginary field
        CHECK_FALSE(neg->minus_two_is_norm);
    }
}

TEST_CASE("choose_v") {
    const auto& sieve = shared_sieve();
    CHECK(fourrank::choose_v(*fourrank::make_field_spec(15, sieve)) == 2);
    CHECK(fourrank::choose_v(*fourrank::make_field_spec(7, sieve)) == 4);    // 7 = 3^2 - 2
    CHECK(fourrank::choose_v(*fourrank::make_field_spec(1513, sieve)) == 41);  // 39^2 - 2*4
}

TEST_CASE("symbol matrix for d = 15, -15 and prime d") {
    const auto& sieve = shared_sieve();
    auto m = *fourrank::build_matrix(15, sieve);
    CHECK(m.v == 2);
    CHECK(m.column_places == std::vector<int64_t>{2, 3, 5});
    CHECK(m.row_args == std::vector<int64_t>{3, 2, -1});
    CHECK(m.sign_grid == std::vector<std::vector<int>>{{1, -1, -1}, {1, -1, -1}, {-1, -1, 1}});

    auto n = *fourrank::build_matrix(-15, sieve);
    CHECK(n.sign_grid == std::vector<std::vector<int>>{{-1, 1, -1}, {1, -1, -1}, {-1, -1, 1}});

    auto pm = *fourrank::build_matrix(7, sieve);
    CHECK(pm.sign_grid.size() == 2);
    CHECK(pm.sign_grid[0].size() == 2);
    CHECK(pm.row_args == std::vector<int64_t>{4, -1});
}

TEST_CASE("four_rank on pinned fields") {
    const auto& sieve = shared_sieve();
    auto r15 = *fourrank::four_rank(15, sieve);
    CHECK(r15.four_rank == 1);
    CHECK(r15.rank == 2);
    CHECK(r15.a == 1);
    CHECK(r15.a_prime == 2);

    CHECK(fourrank::four_rank(-15, sieve)->four_rank == 0);
    CHECK(fourrank::four_rank(33, sieve)->four_rank == 0);
    CHECK(fourrank::four_rank(161, sieve)->four_rank == 1);
    CHECK(fourrank::four_rank(-161, sieve)->four_rank == 1);

    CHECK_FALSE(fourrank::four_rank(45, sieve).has_value());
    CHECK_FALSE(fourrank::four_rank(2, sieve).has_value());
}

TEST_CASE("four_rank stays in [0, t]") {
    const auto& sieve = shared_sieve();
    for (int64_t d = 3; d < 30000; d += 2) {
        for (int64_t sd : {d, -d}) {
            auto rep = fourrank::four_rank(sd, sieve);
            if (!rep) continue;
            CHECK(rep->four_rank >= 0);
            CHECK(rep->four_rank <= rep->t);
        }
    }
}

TEST_CASE("four_rank does not depend on the Pell representative") {
    auto res = verify::rankinv_suite(20000, shared_sieve());
    CHECK(res.failures == 0);
    CHECK(res.checked > 0);
}

TEST_CASE("two-prime family bounds") {
    const auto& sieve = shared_sieve();
    // p = l = 1 mod 8: (l/p) = 1 forces ranks {1,2}/{1,2}; (l/p) = -1 forces {0,1}
    for (int64_t p : {17, 41, 73, 89}) {
        for (int64_t l = p + 8; l < 2000; l += 8) {
            if (!sieve.is_prime(static_cast<uint32_t>(l))) continue;
            int pos = fourrank::four_rank(p * l, sieve)->four_rank;
            int neg = fourrank::four_rank(-p * l, sieve)->four_rank;
            if (arith::jacobi(l, static_cast<uint64_t>(p)) == 1) {
                CHECK((pos == 1 || pos == 2));
                CHECK((neg == 1 || neg == 2));
            } else {
                CHECK((pos == 0 || pos == 1));
            }
        }
    }
}
