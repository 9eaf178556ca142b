#pragma once

#include "quatrefine/cmorders.hpp"
#include "quatrefine/orders.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quatrefine {

// Representative of a type whose reduced unit group is noncyclic.
struct TpRep {
    GroupTag group;
    QuatOrder order;
    UnitGroup units;
    int normalizer_index = 1;  // |N(O') / F^x O'^x|
    std::string source;        // minimal order it was found over
};

// One minimal G-order and the orbit data of its maximal overorders.
struct MinimalOrderData {
    GroupTag group;
    int aleph = 0;
    int beth = 0;
    std::vector<GroupTag> orbit_groups;
};

struct NoncyclicData {
    std::map<GroupTag, Int> t;
    std::vector<TpRep> reps;
    std::vector<MinimalOrderData> minimal;
};

// Table algebra and explicit minimal G-order; nullopt when the condition on eps fails.
std::optional<QuatOrder> minimal_G_order(GroupTag G, const FundUnitData& fu);
// Normalizer generators of the minimal G-order beyond its units, and |N / F^x O^x|.
std::vector<QElem> minimal_order_normalizer(GroupTag G, const Int& d, int* index = nullptr);
const std::vector<GroupTag>& noncyclic_table_groups();

// aleph and beth of the minimal G-order in its own table algebra.
std::optional<MinimalOrderData> aleph_beth(GroupTag G, const FundUnitData& fu);

NoncyclicData t_noncyclic(const FundUnitData& fu, const QuatAlgebra& H);
std::map<GroupTag, Rat> h_noncyclic(const NoncyclicData& nc, const FundUnitData& fu, const RamificationData& R);

struct CyclicTerm {
    std::string B;
    int n;
    Rat rhs;         // h(B) prod (1 - (B/P))
    Rat correction;  // 2^omega h(F) sum m / N
    Rat h;           // h(C_n, B)
};

std::map<GroupTag, Rat> h_cyclic(const FundUnitData& fu, const RamificationData& R, const std::vector<CMOrderDescriptor>& Bs,
                                 const NoncyclicData& nc, std::vector<CyclicTerm>* terms = nullptr);

Rat mass_formula(const FundUnitData& fu, const RamificationData& R);
Rat eichler_h(const FundUnitData& fu, const RamificationData& R, const std::vector<CMOrderDescriptor>& Bs);

struct GroupCount {
    std::optional<Int> t;
    Int h;
    bool operator==(const GroupCount& o) const { return t == o.t && h == o.h; }
};

struct RefinedCounts {
    Int d;
    std::string alg_tag;
    FElem a, b;
    std::vector<std::string> ramified;
    int omega = 0;
    std::map<GroupTag, GroupCount> per_group;
    Rat mass;
    Int h_total;
    std::optional<Int> t_total;
    Rat mass_residual;
    Rat eichler_residual;
    std::vector<std::string> notes;
};

// strict: throw ConsistencyError on a nonzero residual.
RefinedCounts full_counts(const Int& d, const QuatAlgebra& H, bool strict = true);
RefinedCounts full_counts(const Int& d, AlgTag tag, bool strict = true);

std::string counts_json(const RefinedCounts& c);
RefinedCounts counts_from_json(const std::string& s);

}  // namespace quatrefine
