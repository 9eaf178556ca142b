#include "doctest.h"
#include "quatrefine/quatalg.hpp"
#include "quatrefine/quadclass.hpp"

#include <random>
#include <set>

using namespace quatrefine;

namespace {

// Hilbert symbol over Q_p for nonzero integers.
int hilbert_q(Int a, Int b, const Int& p) {
    int al = valuation(a, p), be = valuation(b, p);
    Int u = a, w = b;
    for (int i = 0; i < al; ++i) u /= p;
    for (int i = 0; i < be; ++i) w /= p;
    if (p == 2) {
        auto e = [](const Int& x) { return int(mod((mod(x, 8) - 1) / 2, 2).get_si()); };
        auto o = [](const Int& x) { Int y = mod(x, 8); return int(mod((y * y - 1) / 8, 2).get_si()); };
        int s = e(u) * e(w) + al * o(w) + be * o(u);
        return s % 2 ? -1 : 1;
    }
    int s = ((al * be) % 2 && mod(p, 4) == 3) ? -1 : 1;
    if (be % 2) s *= kronecker(u, p);
    if (al % 2) s *= kronecker(w, p);
    return s;
}

std::vector<Int> squarefree_range(int lo, int hi) {
    std::vector<Int> out;
    for (int d = lo; d <= hi; ++d)
        if (is_squarefree(d) && !is_square(d)) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("quaternion multiplication and reduced norm") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (Int d : {Int(2), Int(5), Int(7), Int(33)}) {
        auto fu = fundamental_unit(d);
        QuatAlgebra H = standard_algebra(AlgTag::C, fu);
        auto rnd = [&] {
            QElem x(d);
            for (auto& c : x.c) c = FElem(d, dist(rng), make_rat(dist(rng), 2));
            return x;
        };
        QElem I = qi(d), J = qj(d), K = qk(d);
        CHECK(qmul(H, I, I) == qone(d) * H.a);
        CHECK(qmul(H, J, J) == qone(d) * H.b);
        CHECK(qmul(H, I, J) == K);
        CHECK(qmul(H, J, I) == -K);
        for (int t = 0; t < 30; ++t) {
            QElem x = rnd(), y = rnd(), z = rnd();
            CHECK(qnrd(H, qmul(H, x, y)) == qnrd(H, x) * qnrd(H, y));
            CHECK(qmul(H, qmul(H, x, y), z) == qmul(H, x, qmul(H, y, z)));
            CHECK(qmul(H, x, x.conj()) == qone(d) * qnrd(H, x));
            CHECK(from_qvec(d, to_qvec(x)) == x);
            if (!qnrd(H, x).is_zero()) CHECK(qmul(H, x, qinv(H, x)) == qone(d));
        }
    }
}

TEST_CASE("Hilbert symbols of rational pairs match Q_p to the local degree") {
    std::vector<std::pair<int, int>> pairs{{-1, -1}, {-1, -3}, {-2, -5}, {3, -7}, {-6, 10}, {-1, -2}, {5, 7}, {-3, -11}};
    for (const Int& d : squarefree_range(2, 120)) {
        for (auto [a, b] : pairs) {
            FElem A(d, a), B(d, b);
            std::set<Int> ps{2, 3, 5, 7, 11};
            for (auto& p : prime_divisors(d)) ps.insert(p);
            for (const Int& p : ps)
                for (auto& P : primes_above(d, p)) {
                    int deg = P.kind == PrimeKind::split ? 1 : 2;
                    int want = hilbert_q(a, b, p);
                    if (deg == 2) want = 1;
                    CHECK_MESSAGE(hilbert_symbol(A, B, P) == want, "d=" << d << " (" << a << "," << b << ") at " << P.name());
                }
        }
    }
}

TEST_CASE("ramification of the table algebras") {
    for (const Int& d : squarefree_range(2, 200)) {
        auto fu = fundamental_unit(d);
        auto RA = ramification(standard_algebra(AlgTag::A, fu));
        CHECK(RA.omega == (mod(d, 8) == 1 ? 2 : 0));
        CHECK(RA.real_ramified.size() == 2);
        auto RC = ramification(standard_algebra(AlgTag::C, fu));
        CHECK(RC.omega == (mod(d, 3) == 1 ? 2 : 0));
        if (fu.norm_sign == 1) {
            // parity is checked inside ramification()
            auto RB = ramification(standard_algebra(AlgTag::B, fu));
            auto RD = ramification(standard_algebra(AlgTag::D, fu));
            CHECK(RB.real_ramified.size() == 2);
            CHECK(RD.real_ramified.size() == 2);
        } else {
            CHECK_THROWS_AS(standard_algebra(AlgTag::B, fu), ValidationError);
            CHECK_THROWS_AS(standard_algebra(AlgTag::D, fu), ValidationError);
        }
        QuatAlgebra Hinf = standard_algebra(AlgTag::Hinf, fu);
        CHECK(Hinf.totally_definite());
        CHECK(ramification(Hinf).omega == 0);
    }
}

TEST_CASE("d = 17: (-1,-1) ramifies at both dyadic primes") {
    auto fu = fundamental_unit(17);
    auto R = ramification(standard_algebra(AlgTag::A, fu));
    REQUIRE(R.omega == 2);
    CHECK(R.finite_ramified[0].p == 2);
    CHECK(R.finite_ramified[1].p == 2);
}

TEST_CASE("isomorphism classes") {
    auto fu7 = fundamental_unit(7);
    CHECK(is_isomorphic(standard_algebra(AlgTag::A, fu7), standard_algebra(AlgTag::Hinf, fu7)));
    auto fu6 = fundamental_unit(6);
    CHECK(is_isomorphic(standard_algebra(AlgTag::A, fu6), standard_algebra(AlgTag::C, fu6)));
    CHECK(is_isomorphic(standard_algebra(AlgTag::A, fu6), standard_algebra(AlgTag::B, fu6)));
    auto fu73 = fundamental_unit(73);
    QuatAlgebra H = standard_algebra(AlgTag::Hinf, fu73);
    CHECK(ramification(H).omega == 0);
    CHECK_THROWS_AS(parse_alg_tag("E"), ValidationError);
}

TEST_CASE("random pairs satisfy the product formula at split dyadic fields") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (const Int& d : squarefree_range(2, 150)) {
        if (mod(d, 8) != 1) continue;
        for (int t = 0; t < 20; ++t) {
            FElem a(d, dist(rng), dist(rng)), b(d, dist(rng), dist(rng));
            if (a.is_zero() || b.is_zero()) continue;
            CHECK_NOTHROW(ramification(custom_algebra(a, b)));
        }
    }
}
