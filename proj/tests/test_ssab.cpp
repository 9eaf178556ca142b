#include "doctest.h"
#include "quatrefine/ssab.hpp"

using namespace quatrefine;

TEST_CASE("census examples") {
    auto c7 = census(7);
    CHECK(c7.h_pi == 3);
    CHECK(c7.h.at(GroupTag::D4) == 1);
    CHECK(c7.h.at(GroupTag::S4) == 1);
    CHECK(c7.h.at(GroupTag::D3ddag) == 1);
    auto c5 = census(5);
    CHECK(c5.h_pi == 1);
    CHECK(c5.h.at(GroupTag::A5) == 1);
    CHECK(census(13).h.at(GroupTag::A4) == 1);
}

TEST_CASE("existence criterion agrees with the counts for p <= 200") {
    CHECK(exists_real_quadratic_endalgebra(7));
    CHECK_FALSE(exists_real_quadratic_endalgebra(73));
    CHECK(exists_real_quadratic_endalgebra(5));
    for (int p = 2; p <= 200; ++p) {
        if (!is_prime(p)) continue;
        CAPTURE(p);
        CHECK(exists_real_quadratic_endalgebra(p) == nonabelian_type_exists(p));
        auto c = census(p);
        CHECK(c.h_pi == counts_prime(p).h_total);
    }
}
