#pragma once

#include "quatrefine/recipe.hpp"

#include <string>
#include <vector>

namespace quatrefine {

// Closed-form counts for F = Q(sqrt p) and the algebra unramified at all finite places.
RefinedCounts counts_prime(const Int& p);

enum class D3Case { O, ODag, OPrime };
// Catalogue id of the representative order.
std::string d3_case_name(D3Case c);
// p = 3 mod 4, p > 5.
D3Case choose_D3_representative(const Int& p);

// Per-group differences between counts_prime and full_counts; empty when they agree.
std::vector<std::string> crosscheck_prime(const Int& p);

}  // namespace quatrefine
