#pragma once

#include "quatrefine/lattice.hpp"
#include "quatrefine/quatalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quatrefine {

enum class GroupTag { C1, C2, C3, C4, C5, C6, C12, D2dag, D2ddag, D3dag, D3ddag, D4, D5, D6, D12, A4, S4, A5 };

std::string group_name(GroupTag g);
GroupTag parse_group(const std::string& s);
int group_order(GroupTag g);
bool group_cyclic(GroupTag g);
// Name without the first/second kind decoration ("D2dag" -> "D2").
std::string group_abstract_name(GroupTag g);
const std::vector<GroupTag>& all_groups();

// Z-lattice in H over the Q-basis (1, w, i, wi, j, wj, k, wk).
Lattice lattice_from_elems(const std::vector<QElem>& gens);
// O_F-span of the given elements.
Lattice of_span(const std::vector<QElem>& gens);
std::vector<QElem> lattice_elems(const Int& d, const Lattice& L);
QVec qmul_vec(const QuatAlgebra& H, const QVec& x, const QVec& y);

struct QuatOrder {
    QuatAlgebra alg;
    Lattice lat;
    IdealF disc;
};

// O_F-span of basis; throws ConsistencyError when it is not an order.
QuatOrder make_order(const QuatAlgebra& H, const std::vector<QElem>& basis);
QuatOrder order_from_lattice(const QuatAlgebra& H, const Lattice& L);
bool is_order(const QuatAlgebra& H, const Lattice& L);
// Smallest order containing L and O_F (throws when it escapes bound).
std::optional<Lattice> order_closure(const QuatAlgebra& H, const Lattice& L, const Lattice* bound);

// {x : Trd(x L) in O_F}.
Lattice dual_lattice(const QuatAlgebra& H, const Lattice& L);
IdealF discriminant(const QuatAlgebra& H, const Lattice& L);
bool is_maximal(const QuatOrder& O);

Lattice conjugate_lattice(const QuatAlgebra& H, const QElem& x, const Lattice& L);
bool normalizer_membership(const QElem& x, const QuatOrder& O);

struct UnitGroup {
    GroupTag tag = GroupTag::C1;
    int order = 1;
    std::vector<QElem> reps;   // one per class of O^x/O_F^x, Nr in {1, eps}
    std::vector<QElem> units;  // all units with Nr in {1, eps}, both signs
};

UnitGroup unit_group(const QuatOrder& O, const FundUnitData& fu);
UnitGroup unit_group(const QuatOrder& O, const FundUnitData& fu, std::uint64_t budget);

// All maximal orders containing O.
std::vector<QuatOrder> maximal_overorders(const QuatOrder& O, const RamificationData& R);
// Orbits of orders under conjugation by gens; returns an orbit id per order.
std::vector<int> conjugation_orbits(const QuatAlgebra& H, const std::vector<QuatOrder>& orders,
                                    const std::vector<QElem>& gens, int* orbit_count = nullptr);

// CM order data for embedding counts: B = Z-span of alpha + beta*s with s^2 = -m,
// u = ua + ub*s a unit of B generating B^x/O_F^x.
struct CMEmbeddingSpec {
    FElem m;
    std::vector<std::pair<FElem, FElem>> zbasis;
    FElem ua, ub;
};

// |Emb(B, O) / O^x|.
int optimal_embedding_count(const QuatOrder& O, const UnitGroup& U, const CMEmbeddingSpec& B);

// 8x8 HNF plus denominator plus algebra, for debugging.
std::string order_json(const QuatOrder& O);

}  // namespace quatrefine
