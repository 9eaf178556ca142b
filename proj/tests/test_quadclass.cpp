#include "doctest.h"

#include "quatrefine/quadclass.hpp"
#include "quatrefine/quadfield.hpp"

using namespace quatrefine;

TEST_CASE("imaginary class numbers") {
    CHECK(class_number_imaginary(-4) == 1);
    CHECK(class_number_imaginary(-23) == 3);
    CHECK(class_number_imaginary(-84) == 4);
    CHECK(class_number_imaginary(-7) == 1);
    CHECK(class_number_field(-14) == 4);
    CHECK(class_number_field(-21) == 4);
    CHECK(class_number_field(-5) == 2);
    CHECK_THROWS_AS(class_number_imaginary(-12), ValidationError);
    CHECK_THROWS_AS(class_number_imaginary(5), ValidationError);
}

TEST_CASE("real class numbers") {
    CHECK(class_number_real(7) == 1);
    CHECK(class_number_real(323) == 4);
    CHECK(class_number_real(799) == 8);
    CHECK(class_number_real(10) == 2);
    CHECK(class_number_real(79) == 3);
    CHECK(class_number_real(3) == 1);
    CHECK(class_number_real(229) == 3);
}

TEST_CASE("narrow class number is h or 2h") {
    for (int d = 2; d < 300; ++d) {
        if (!is_squarefree(d)) continue;
        auto fu = fundamental_unit(d);
        Int hp = narrow_class_number(field_disc(d));
        Int h = class_number_real(d);
        CHECK(hp == (fu.norm_sign == 1 ? 2 * h : h));
    }
}

TEST_CASE("h(Q(sqrt p)) is odd for primes below 200") {
    for (int p = 2; p < 200; ++p)
        if (is_prime(p)) CHECK(class_number_real(p) % 2 == 1);
}

TEST_CASE("zeta values") {
    CHECK(zeta_minus_one(5) == Rat(1, 30));
    CHECK(zeta_minus_one(2) == Rat(1, 12));
    CHECK(zeta_minus_one(7) == Rat(2, 3));
    for (int d = 2; d < 300; ++d)
        if (is_squarefree(d)) CHECK(zeta_minus_one(d) > 0);
}
