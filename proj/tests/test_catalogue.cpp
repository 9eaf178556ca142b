#include "doctest.h"
#include "quatrefine/catalogue.hpp"

using namespace quatrefine;

TEST_CASE("explicit orders at three admissible d each") {
    for (auto& cc : catalogue()) {
        auto ds = admissible_d(cc.id, 3);
        CAPTURE(cc.id);
        REQUIRE(ds.size() == 3);
        for (auto& d : ds) {
            CAPTURE(d);
            auto c = verify_case(cc.id, d);
            CHECK(c.is_order);
            CHECK(c.disc_ok);
            CHECK(c.contains_ok);
            CHECK(c.units_ok);
            CHECK(c.normalizers_ok);
        }
    }
}

TEST_CASE("prime representatives for D3") {
    CHECK(verify_case("d3dd-o", 7).units == "D3ddag");
    CHECK(verify_case("d3dd-o-prime", 19).units == "D3ddag");
    CHECK(verify_case("d3d-max", 11).units == "D3dag");
}

TEST_CASE("inadmissible d is rejected") {
    CHECK_THROWS_AS(verify_case("a4-d5mod8", 7), ValidationError);
    CHECK_THROWS_AS(verify_case("nosuch", 7), ValidationError);
}
