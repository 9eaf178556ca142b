#include "doctest.h"

#include "quatrefine/quadfield.hpp"

#include <random>

using namespace quatrefine;

TEST_CASE("fundamental unit values") {
    CHECK(fundamental_unit(323).eps == FElem(323, 18, 1));
    CHECK(fundamental_unit(66).eps == FElem(66, 65, 8));
    auto f5 = fundamental_unit(5);
    CHECK(f5.eps == FElem(5, Rat(1, 2), Rat(1, 2)));
    CHECK(f5.norm_sign == -1);
    auto f30 = fundamental_unit(30);
    CHECK(f30.eps == FElem(30, 11, 2));
    CHECK(f30.norm_sign == 1);
    CHECK(fundamental_unit(7).eps == FElem(7, 8, 3));
    CHECK(fundamental_unit(33).eps == FElem(33, 23, 4));
    CHECK(fundamental_unit(94).eps == FElem(94, 2143295, 221064));
    CHECK(fundamental_unit(61).eps == FElem(61, Rat(39, 2), Rat(5, 2)));
    CHECK(fundamental_unit(2).eps == FElem(2, 1, 1));
    CHECK(fundamental_unit(3).eps == FElem(3, 2, 1));
}

TEST_CASE("fundamental unit rejects bad input") {
    CHECK_THROWS_AS(fundamental_unit(12), ValidationError);
    CHECK_THROWS_AS(fundamental_unit(1), ValidationError);
}

TEST_CASE("unit norms are +-1 and derived flags are consistent") {
    for (int d = 2; d <= 500; ++d) {
        if (!is_squarefree(d)) continue;
        auto fu = fundamental_unit(d);
        CHECK(abs(fu.eps.norm()) == 1);
        CHECK(fu.eps.sign() > 0);
        CHECK(fu.eps.x() + fu.eps.y() * 0 > 0);
        CHECK(!is_square_in_F(fu.eps).has_value());
        if (fu.theta) CHECK(*fu.theta * *fu.theta * Rat(2) == fu.eps);
        if (fu.sigma) CHECK(*fu.sigma * *fu.sigma * Rat(3) == fu.eps);
        CHECK((fu.two_eps_square && fu.three_eps_square) == (d == 6));
        if (fu.norm_sign == -1) {
            CHECK(!fu.two_eps_square);
            CHECK(!fu.three_eps_square);
            CHECK(fu.S.size() == 1);
        }
    }
}

TEST_CASE("square roots in F") {
    auto fu7 = fundamental_unit(7);
    auto r = is_square_in_F(fu7.eps * Rat(2));
    REQUIRE(r.has_value());
    CHECK((*r == FElem(7, 3, 1) || *r == FElem(7, -3, -1)));
    auto fu21 = fundamental_unit(21);
    auto r3 = is_square_in_F(fu21.eps * Rat(3));
    REQUIRE(r3.has_value());
    CHECK(*r3 * *r3 == FElem(21, Rat(15, 2), Rat(3, 2)));
    CHECK(is_square_in_F(fu7.eps * fu7.eps).value() * is_square_in_F(fu7.eps * fu7.eps).value() == fu7.eps * fu7.eps);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-50, 50);
    for (int t = 0; t < 300; ++t) {
        FElem y(13, make_rat(dist(rng), 1 + (t % 3)), make_rat(dist(rng), 1 + (t % 2)));
        if (y.is_zero()) continue;
        auto s = is_square_in_F(y * y);
        REQUIRE(s.has_value());
        CHECK(*s * *s == y * y);
    }
}

TEST_CASE("artin symbol") {
    CHECK(artin_symbol(2, 7) == 0);
    CHECK(artin_symbol(2, 17) == 1);
    CHECK(artin_symbol(3, 7) == 1);
    for (int d = 2; d < 200; ++d) {
        if (!is_squarefree(d)) continue;
        for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
            auto ps = primes_above(d, p);
            int expect = ps.size() == 2 ? 1 : (ps[0].kind == PrimeKind::ramified ? 0 : -1);
            CHECK(artin_symbol(p, d) == expect);
        }
    }
}

TEST_CASE("valuations and principal ideals") {
    FElem x(7, 3, 1);  // norm 2
    auto I = IdealF::principal(x);
    CHECK(I.norm() == 2);
    auto P2 = primes_above(7, 2)[0];
    CHECK(valuation(FElem(7, 2), P2) == 2);
    auto ps = primes_above(17, 2);
    REQUIRE(ps.size() == 2);
    FElem w = FElem::omega(17);  // norm (1-17)/4 = -4
    CHECK(valuation(w, ps[0]) + valuation(w, ps[1]) == 2);
    CHECK(IdealF::principal(FElem(17, 2)).str() == "P2[0]*P2[1]");
    auto zb = IdealF::principal(FElem(7, 3)).zbasis();
    CHECK(zb.size() == 2);
}

TEST_CASE("residue conditions") {
    auto fu7 = fundamental_unit(7);
    CHECK(residue_conditions(fu7, Modulus::parity_a) == "a even");
    CHECK(residue_conditions(fu7, Modulus::d2_row) == "d=3 mod 4, a even");
    auto fu33 = fundamental_unit(33);
    CHECK(residue_conditions(fu33, Modulus::d2_row) == "d=1 mod 8, a=3 mod 4");
    CHECK_THROWS_AS(residue_conditions(fundamental_unit(5), Modulus::parity_a), ValidationError);
    // 65 + 8 sqrt 66: eps = 65 = 2 mod q
    CHECK(eps_sign_mod3(fundamental_unit(66)) == -1);
}
