#pragma once

#include "quatrefine/arith.hpp"

#include <array>
#include <vector>

namespace quatrefine {

struct FormClassData {
    Int disc;
    std::vector<std::array<Int, 3>> reduced_forms;
    Int h;
};

// Reduced primitive positive definite forms of a negative fundamental discriminant.
FormClassData reduced_forms_imaginary(const Int& D);
Int class_number_imaginary(const Int& D);
// h(F) for F = Q(sqrt d), d square-free >= 2 (wide class number).
Int class_number_real(const Int& d);
Int narrow_class_number(const Int& D);
// Class number of Q(sqrt m) for any non-square m (square factors stripped).
Int class_number_field(const Int& m);
// zeta_F(-1) by Siegel's finite sum.
Rat zeta_minus_one(const Int& d);
bool is_fundamental_disc(const Int& D);

}  // namespace quatrefine
