#pragma once

#include "quatrefine/primecase.hpp"

#include <map>
#include <string>

namespace quatrefine {

struct Census {
    Int p;
    std::map<GroupTag, Int> h;  // h(pi, G)
    Int h_pi;                   // h(pi) = h(H)
    Int t_pi;                   // t(pi) = t(H)
};

// Superspecial abelian surfaces over F_p with Frobenius sqrt p, sorted by reduced automorphism group.
Census census(const Int& p);

// End^0 = Q(sqrt p) occurs for some member of the isogeny class.
bool exists_real_quadratic_endalgebra(const Int& p);
// Same question read off the closed-form counts: some non-abelian G has t(G) > 0.
bool nonabelian_type_exists(const Int& p);
bool is_nonabelian(GroupTag G);

std::string census_json(const Census& c);
std::string census_csv(const Census& c);

}  // namespace quatrefine
