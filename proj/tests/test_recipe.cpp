#include "doctest.h"
#include "quatrefine/primecase.hpp"
#include "quatrefine/quadclass.hpp"

using namespace quatrefine;

namespace {

Int h_of(const RefinedCounts& c, GroupTag G) {
    auto it = c.per_group.find(G);
    return it == c.per_group.end() ? Int(0) : it->second.h;
}

// Rows of the aleph/beth tables for the minimal D2'' and D3'' orders.
std::pair<int, int> d2_row_expected(const FundUnitData& fu) {
    std::string row = residue_conditions(fu, Modulus::d2_row);
    if (row == "d=1 mod 8, a=1 mod 4") return {1, 1};
    if (row == "d=1 mod 8, a=3 mod 4") return {4, 2};
    if (row == "d=5 mod 8") return {2, 1};
    if (row == "d=3 mod 4, a even") return {2, 2};
    return {4, 3};
}

std::pair<int, int> d3_row_expected(const FundUnitData& fu) {
    std::string row = residue_conditions(fu, Modulus::d3_row);
    if (row == "d=0 mod 3, eps=1 mod q") return {1, 1};
    if (row == "d=0 mod 3, eps=-1 mod q") return {3, 2};
    if (row == "d=1 mod 3, eps=1 mod 3") return {1, 1};
    if (row == "d=1 mod 3, eps=-1 mod 3") return {4, 2};
    return {2, 1};
}

}  // namespace

TEST_CASE("refined counts at d = 7") {
    auto c = full_counts(7, AlgTag::Hinf);
    CHECK(c.h_total == 3);
    CHECK(c.t_total == Int(3));
    CHECK(h_of(c, GroupTag::S4) == 1);
    CHECK(h_of(c, GroupTag::D4) == 1);
    CHECK(h_of(c, GroupTag::D3ddag) == 1);
    for (GroupTag G : {GroupTag::C1, GroupTag::C2, GroupTag::C3, GroupTag::C4, GroupTag::C6}) CHECK(h_of(c, G) == 0);
    CHECK(c.mass_residual == 0);
    CHECK(c.eichler_residual == 0);
}

TEST_CASE("d = 6 carries no D2'' type") {
    auto c = full_counts(6, AlgTag::Hinf);
    CHECK(h_of(c, GroupTag::D2ddag) == 0);
    CHECK(h_of(c, GroupTag::S4) == 1);
    CHECK(h_of(c, GroupTag::D6) == 1);
    CHECK(c.h_total == 3);
}

TEST_CASE("A4 and D6 criteria") {
    // t(A4) = 1 iff H = A and 2 eps is not a square; t(D6) = 1 iff H = C and 3 eps is a square.
    for (int d : {10, 13, 21, 33}) {
        auto fu = fundamental_unit(d);
        auto A = full_counts(d, AlgTag::A);
        CHECK(A.per_group.at(GroupTag::A4).t == Int(fu.two_eps_square ? 0 : 1));
        auto C = full_counts(d, AlgTag::C);
        CHECK(C.per_group.at(GroupTag::D6).t == Int(fu.three_eps_square ? 1 : 0));
    }
}

TEST_CASE("mass and Eichler identities over small d and all table algebras") {
    for (int d = 6; d <= 30; ++d) {
        if (!is_squarefree(d)) continue;
        for (AlgTag tag : {AlgTag::Hinf, AlgTag::A, AlgTag::B, AlgTag::C, AlgTag::D}) {
            RefinedCounts c;
            try {
                c = full_counts(d, tag);
            } catch (const ValidationError&) {
                CHECK((tag == AlgTag::B || tag == AlgTag::D));
                continue;
            }
            CAPTURE(d);
            CHECK(c.mass_residual == 0);
            CHECK(c.eichler_residual == 0);
            Int sum = 0;
            for (auto& [G, gc] : c.per_group) sum += gc.h;
            CHECK(sum == c.h_total);
        }
    }
}

TEST_CASE("aleph and beth tables") {
    for (int d : {7, 11, 33, 6, 14, 15}) {
        auto fu = fundamental_unit(d);
        auto m = aleph_beth(GroupTag::D2ddag, fu);
        REQUIRE(m);
        CAPTURE(d);
        CHECK(std::make_pair(m->aleph, m->beth) == d2_row_expected(fu));
    }
    for (int d : {7, 13, 21, 33}) {
        auto fu = fundamental_unit(d);
        if (fu.norm_sign != 1) continue;
        auto m = aleph_beth(GroupTag::D3ddag, fu);
        REQUIRE(m);
        CAPTURE(d);
        CHECK(std::make_pair(m->aleph, m->beth) == d3_row_expected(fu));
    }
    CHECK_FALSE(aleph_beth(GroupTag::D2ddag, fundamental_unit(10)));
}

TEST_CASE("json round trip") {
    auto c = full_counts(15, AlgTag::Hinf);
    auto back = counts_from_json(counts_json(c));
    CHECK(back.per_group == c.per_group);
    CHECK(back.mass == c.mass);
    CHECK(back.h_total == c.h_total);
    CHECK(back.t_total == c.t_total);
}

TEST_CASE("recipe input validation") {
    CHECK_THROWS_AS(full_counts(12, AlgTag::Hinf), ValidationError);
    CHECK_THROWS_AS(full_counts(13, AlgTag::B), ValidationError);
}
