#include "doctest.h"
#include "quatrefine/catalogue.hpp"
#include "quatrefine/primecase.hpp"
#include "quatrefine/quadclass.hpp"

using namespace quatrefine;

namespace {

Int t_of(const RefinedCounts& c, GroupTag G) {
    auto it = c.per_group.find(G);
    return it == c.per_group.end() ? Int(0) : *it->second.t;
}

}  // namespace

TEST_CASE("closed forms at p = 7, 13") {
    auto c = counts_prime(7);
    for (GroupTag G : {GroupTag::C1, GroupTag::C2, GroupTag::C3, GroupTag::C4}) CHECK(t_of(c, G) == 0);
    CHECK(t_of(c, GroupTag::D3ddag) == 1);
    CHECK(t_of(c, GroupTag::D4) == 1);
    CHECK(t_of(c, GroupTag::S4) == 1);

    auto h = counts_prime(13);
    CHECK(t_of(h, GroupTag::D3dag) == 0);
    CHECK(t_of(h, GroupTag::A4) == 1);
}

TEST_CASE("small primes") {
    CHECK(t_of(counts_prime(2), GroupTag::S4) == 1);
    auto c3 = counts_prime(3);
    CHECK(t_of(c3, GroupTag::S4) == 1);
    CHECK(t_of(c3, GroupTag::D12) == 1);
    CHECK(c3.t_total == Int(2));
    CHECK(t_of(counts_prime(5), GroupTag::A5) == 1);
    CHECK(counts_prime(5).h_total == 1);
    for (int p : {2, 3, 5}) CHECK(counts_prime(p).mass_residual == 0);
}

TEST_CASE("D3 representative choice") {
    CHECK(choose_D3_representative(7) == D3Case::O);
    CHECK(choose_D3_representative(11) == D3Case::ODag);
    CHECK(choose_D3_representative(19) == D3Case::OPrime);
    CHECK_THROWS_AS(choose_D3_representative(13), ValidationError);
    for (int p : {7, 11, 19, 23, 31, 43}) {
        auto c = verify_case(d3_case_name(choose_D3_representative(p)), p);
        CHECK_MESSAGE(c.ok(), "p=" << p);
    }
}

TEST_CASE("mass and class number identities for p <= 200") {
    for (int p = 2; p <= 200; ++p) {
        if (!is_prime(p)) continue;
        CAPTURE(p);
        auto c = counts_prime(p);
        CHECK(c.mass_residual == 0);
        CHECK(c.eichler_residual == 0);
        CHECK(*c.t_total * class_number_real(p) == c.h_total);
    }
}

TEST_CASE("two paths agree on a few primes") {
    for (int p : {2, 7, 13, 23}) {
        CAPTURE(p);
        auto diff = crosscheck_prime(p);
        CHECK(diff.empty());
    }
}

TEST_CASE("non-prime input") { CHECK_THROWS_AS(counts_prime(15), ValidationError); }
