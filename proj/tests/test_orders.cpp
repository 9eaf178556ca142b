#include "doctest.h"
#include "quatrefine/orders.hpp"

using namespace quatrefine;

namespace {

QElem q(const Int& d, FElem a, FElem b, FElem c, FElem e) { return QElem(a, b, c, e); }

struct Ctx {
    Int d;
    FundUnitData fu;
    FElem zero, one, half, sd;
    explicit Ctx(int dd)
        : d(dd), fu(fundamental_unit(dd)), zero(d), one(d, 1), half(d, Rat(1, 2)), sd(FElem::sqrt_d(d)) {}
};

}  // namespace

TEST_CASE("make_order discriminants") {
    Ctx c(7);
    QuatAlgebra A = standard_algebra(AlgTag::A, c.fu);
    QElem one = qone(c.d), i = qi(c.d), j = qj(c.d), k = qk(c.d);
    auto O2 = make_order(A, {one, i, j, k});
    CHECK(O2.disc == IdealF::principal(FElem(c.d, 4)));

    QuatAlgebra D = standard_algebra(AlgTag::D, c.fu);
    auto O3 = make_order(D, {one, i, (one + j) * Rat(1, 2), (i + k) * Rat(1, 2)});
    CHECK(O3.disc == IdealF::principal(FElem(c.d, 3)));

    CHECK_THROWS_AS(make_order(A, {one, i, j, k * Rat(1, 2)}), ConsistencyError);
}

TEST_CASE("dual lattice of O_F[i,j]") {
    Ctx c(7);
    QuatAlgebra A = standard_algebra(AlgTag::A, c.fu);
    QElem one = qone(c.d), i = qi(c.d), j = qj(c.d), k = qk(c.d);
    auto O = make_order(A, {one, i, j, k});
    Lattice D = dual_lattice(A, O.lat);
    CHECK(D == of_span({one * Rat(1, 2), i * Rat(1, 2), j * Rat(1, 2), k * Rat(1, 2)}));
    CHECK(dual_lattice(A, D) == O.lat);
}

TEST_CASE("d = 7 maximal orders and unit groups") {
    Ctx c(7);
    REQUIRE(c.fu.two_eps_square);
    FElem th = *c.fu.theta;
    QuatAlgebra A = standard_algebra(AlgTag::A, c.fu);
    QElem one = qone(c.d), i = qi(c.d), j = qj(c.d), k = qk(c.d);
    QElem xi = (one + i + j + k) * Rat(1, 2);
    auto O24 = make_order(A, {one, (one + i) * th, (one + j) * th, xi});
    CHECK(O24.disc.is_unit());
    CHECK(is_maximal(O24));
    auto U24 = unit_group(O24, c.fu);
    CHECK(U24.order == 24);
    CHECK(U24.tag == GroupTag::S4);

    auto O8 = make_order(A, {one, i, (one * c.sd + j) * Rat(1, 2), (i * c.sd + k) * Rat(1, 2)});
    CHECK(is_maximal(O8));
    auto U8 = unit_group(O8, c.fu);
    CHECK(U8.order == 8);
    CHECK(U8.tag == GroupTag::D4);

    CHECK(normalizer_membership(one + i, make_order(A, {one, i, j, k})));
    CHECK(normalizer_membership(i, O24));
}

TEST_CASE("d = 33 D6 order") {
    Ctx c(33);
    REQUIRE(c.fu.three_eps_square);
    FElem s = *c.fu.sigma;
    QuatAlgebra C = standard_algebra(AlgTag::C, c.fu);
    QElem one = qone(c.d), i = qi(c.d), j = qj(c.d);
    QElem e = (one * Rat(3) + j) * s * Rat(1, 2);
    auto O6 = make_order(C, {one, i, e, qmul(C, i, e)});
    CHECK(O6.disc.is_unit());
    auto U = unit_group(O6, c.fu);
    CHECK(U.tag == GroupTag::D6);
}

TEST_CASE("maximal overorders of the minimal D2 second-kind order") {
    for (auto [d, expect] : {std::pair{7, 2}, std::pair{33, 4}}) {
        Ctx c(d);
        QuatAlgebra B = standard_algebra(AlgTag::B, c.fu);
        QElem one = qone(c.d), i = qi(c.d), j = qj(c.d), k = qk(c.d);
        auto O = make_order(B, {one, i, j, k});
        auto R = ramification(B);
        auto S = maximal_overorders(O, R);
        CHECK_MESSAGE(int(S.size()) == expect, "d=" << d);
        for (auto& M : S) CHECK(M.lat.contains(O.lat));
    }
}
