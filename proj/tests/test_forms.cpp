#include "k2/forms.hpp"

#include "doctest.h"
#include "k2/arith.hpp"
#include "k2/fourrank.hpp"
#include "k2/verify.hpp"

using namespace k2;

TEST_CASE("satisfies_1_32") {
    CHECK(forms::satisfies_1_32(113));
    CHECK_FALSE(forms::satisfies_1_32(97));
    CHECK_FALSE(forms::satisfies_1_32(17));
    CHECK_THROWS_AS(forms::satisfies_1_32(19), std::invalid_argument);
}

TEST_CASE("pell_pi") {
    CHECK(forms::pell_pi(17).u == 5);
    CHECK(forms::pell_pi(17).w == 2);
    CHECK(forms::pell_pi(41).u == 7);
    CHECK(forms::pell_pi(41).w == 2);
    CHECK(forms::pell_pi(73).u == 9);
    CHECK(forms::pell_pi(73).w == 2);
}

TEST_CASE("pi_symbol") {
    CHECK(forms::pi_symbol(17, 89) == 1);
    CHECK_THROWS_AS(forms::pi_symbol(17, 3), std::invalid_argument);
    // agreement with the matrix route for the negative field
    arith::FactorSieve sieve(17 * 137 + 1);
    int pi = forms::pi_symbol(17, 137);
    int neg = fourrank::four_rank(-17 * 137, sieve)->four_rank;
    CHECK(neg == (pi == 1 ? 2 : 1));
}

TEST_CASE("classify_pl on the pinned pair (17, 89)") {
    auto cls = *forms::classify_pl(17, 89);
    CHECK(cls.legendre_lp == 1);
    CHECK_FALSE(cls.p_sat_1_32);
    CHECK_FALSE(cls.l_sat_1_32);
    REQUIRE(cls.pi_symbol.has_value());
    CHECK(*cls.pi_symbol == 1);
    CHECK(cls.predicted_rank_pos == 1);
    CHECK(cls.predicted_rank_neg == 2);

    arith::FactorSieve sieve(17 * 89 + 1);
    CHECK(fourrank::four_rank(17 * 89, sieve)->four_rank == 1);
    CHECK(fourrank::four_rank(-17 * 89, sieve)->four_rank == 2);

    CHECK_FALSE(forms::classify_pl(17, 17).has_value());
    CHECK_FALSE(forms::classify_pl(17, 19).has_value());
    CHECK_FALSE(forms::classify_pl(15, 89).has_value());
}

TEST_CASE("classifier equals matrix engine below 10^5") {
    arith::FactorSieve sieve(100000);
    auto res = verify::classifier_matrix_suite(100000, sieve);
    CHECK(res.failures == 0);
    CHECK(res.checked > 100);
}

TEST_CASE("narrow class number by cycle counting") {
    CHECK(forms::narrow_class_number(8)->h_plus == 1);
    CHECK(forms::narrow_class_number(5)->h_plus == 1);
    CHECK(forms::narrow_class_number(136)->h_plus == 4);
    CHECK(forms::narrow_class_number(40)->h_plus == 2);
    CHECK_FALSE(forms::narrow_class_number(7).has_value());   // 3 mod 4
    CHECK_FALSE(forms::narrow_class_number(36).has_value());  // square
    CHECK_FALSE(forms::narrow_class_number(-8).has_value());

    // total reduced forms = sum of cycle lengths
    auto rep = *forms::narrow_class_number(136);
    int64_t total = 0;
    for (int64_t len : rep.cycle_sizes) total += len;
    CHECK(total == 20);
    CHECK(rep.cycle_sizes.size() == 4);

    for (int64_t p : {17, 41, 73, 89, 97, 113, 137, 193, 233, 241})
        CHECK(forms::narrow_class_number(8 * p)->h_plus % 4 == 0);
}

TEST_CASE("form representation oracle") {
    auto rep17 = *forms::narrow_class_number(8 * 17);
    REQUIRE(rep17.h_plus == 4);

    auto chk = *forms::form_representation_check(17, 89, rep17);
    CHECK(chk.sat_1_minus2p);       // 89 = 15^2 - 34*2^2
    CHECK_FALSE(chk.sat_p_minus2);
    CHECK_FALSE(chk.degenerate);
    CHECK(chk.consistent);

    // 73*1^2 - 2*6^2 = 1: the two forms collapse into one narrow class and
    // jointly follow the symbol
    auto rep73 = *forms::narrow_class_number(8 * 73);
    auto deg = *forms::form_representation_check(73, 41, rep73);
    CHECK(deg.degenerate);
    CHECK(deg.sat_1_minus2p);
    CHECK(deg.sat_p_minus2);
    CHECK(forms::pi_symbol(73, 41) == 1);
    auto deg2 = *forms::form_representation_check(73, 89, rep73);
    CHECK(deg2.degenerate);
    CHECK_FALSE(deg2.sat_1_minus2p);
    CHECK_FALSE(deg2.sat_p_minus2);
    CHECK(forms::pi_symbol(73, 89) == -1);

    // a pair with pi symbol -1 must land in the other predicate
    bool found_negative_case = false;
    for (int64_t l = 17; l < 1000 && !found_negative_case; l += 8) {
        if (!arith::is_prime(static_cast<uint64_t>(l)) || l == 17) continue;
        if (arith::jacobi(l, 17) != 1) continue;
        if (forms::pi_symbol(17, l) != -1) continue;
        found_negative_case = true;
        auto chk2 = *forms::form_representation_check(17, l, rep17);
        CHECK(chk2.sat_p_minus2);
        CHECK_FALSE(chk2.sat_1_minus2p);
        CHECK(chk2.consistent);
    }
    CHECK(found_negative_case);

    // overflow guard: an exponent h+/4 = 4 with l near 10^6 pushes l^(h/4)
    // past the 64-bit budget
    int64_t big_l = 999999;
    while (big_l % 8 != 1 || !arith::is_prime(static_cast<uint64_t>(big_l))) --big_l;
    forms::ClassNumberReport wide{8 * 17, 16, {}};
    CHECK_FALSE(forms::form_representation_check(17, big_l, wide).has_value());
}

TEST_CASE("dual routes and class numbers at scale") {
    arith::FactorSieve sieve(20000);
    auto res = verify::forms_suite(20000, sieve);
    CHECK(res.failures == 0);
}

TEST_CASE("pi symbol choice-independence and form-oracle agreement") {
    arith::FactorSieve sieve(50000);
    auto p34 = verify::prop34_suite(50000, sieve);
    CHECK(p34.failures == 0);
    CHECK(p34.checked > 1000);
}

TEST_CASE("(v/l) factors through the pi and 1+sqrt2 symbols") {
    arith::FactorSieve sieve(100000);
    auto p44 = verify::prop44_suite(100000, sieve);
    CHECK(p44.failures == 0);
    CHECK(p44.checked > 100);
}
