#pragma once

#include "quatrefine/orders.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace quatrefine {

enum class DiscKind { maximal, two };  // disc(H), or 2 O_F

struct CatalogueCase {
    std::string id;
    AlgTag alg;
    std::string row;  // condition on d and eps
    std::function<bool(const FundUnitData&)> admissible;
    std::function<std::vector<QElem>(const FundUnitData&)> gens;  // O_F-generators
    std::optional<GroupTag> contains;                             // minimal G-order inside
    DiscKind disc = DiscKind::maximal;
    std::function<std::optional<GroupTag>(const FundUnitData&)> units;
    std::function<std::vector<QElem>(const FundUnitData&)> normalizers;
};

const std::vector<CatalogueCase>& catalogue();
const CatalogueCase& catalogue_case(const std::string& id);

struct CatalogueCheck {
    std::string id;
    Int d;
    bool is_order = false;
    bool disc_ok = false;
    bool contains_ok = false;
    bool units_ok = true;
    bool normalizers_ok = true;
    std::string disc;
    std::string units;
    bool ok() const { return is_order && disc_ok && contains_ok && units_ok && normalizers_ok; }
};

// Throws ValidationError when d is not admissible for the case.
CatalogueCheck verify_case(const std::string& id, const Int& d);
// First count admissible square-free d in [6, dmax].
std::vector<Int> admissible_d(const std::string& id, int count, int dmax = 1000);

// O_F-generators of the integral closure of O_F[alpha], alpha^2 in F, when its conductor divides 2.
std::vector<QElem> integral_closure_2(const QuatAlgebra& H, const QElem& alpha);

std::string catalogue_json(const CatalogueCheck& c);

}  // namespace quatrefine
