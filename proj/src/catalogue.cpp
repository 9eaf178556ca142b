#include "quatrefine/catalogue.hpp"

#include "quatrefine/recipe.hpp"

#include <json.hpp>

namespace quatrefine {

namespace {

FElem fe(const FundUnitData& fu, const Rat& x, const Rat& y = 0) { return FElem(fu.d, x, y); }

QElem q(const FElem& a, const FElem& b, const FElem& c, const FElem& e) { return QElem(a, b, c, e); }

Rat eps_b(const FundUnitData& fu) { return fu.half ? make_rat(fu.b, 2) : Rat(fu.b); }

int d_mod(const FundUnitData& fu, int m) { return int(mod(fu.d, m).get_si()); }

// [O_{F(alpha)} : O_F[alpha]] when the conductor divides 2.
int closure_count(const QuatAlgebra& H, const QElem& alpha) {
    const Int& d = H.d;
    FElem n = -qmul(H, alpha, alpha).c[0];
    std::vector<FElem> reps{FElem(d), FElem(d, 1), FElem::omega(d), FElem(d, 1) + FElem::omega(d)};
    int count = 0;
    for (auto& u : reps)
        for (auto& v : reps)
            if (((u * u + n * v * v) * make_rat(1, 4)).is_integral()) ++count;
    return count;
}

bool j_unramified(const FundUnitData& fu) {
    if (fu.norm_sign != 1) return false;
    QuatAlgebra H = standard_algebra(AlgTag::B, fu);
    return closure_count(H, qj(fu.d)) == 4;
}

// The order B of F(i) used by the A4 and D2'' constructions.
std::vector<QElem> order_B(const QuatAlgebra& H, const FundUnitData& fu) {
    const Int& d = fu.d;
    if (d_mod(fu, 4) == 2) return integral_closure_2(H, qi(d));
    QElem alpha = qmul(H, qone(d) + qi(d), qone(d) * (fe(fu, 1, 1) * Rat(1, 2)));
    return {qone(d), qi(d), alpha};
}

std::vector<QElem> times(const QuatAlgebra& H, const std::vector<QElem>& B, const QElem& x) {
    std::vector<QElem> out = B;
    for (auto& b : B) out.push_back(qmul(H, b, x));
    return out;
}

std::vector<QElem> left_times(const QuatAlgebra& H, const QElem& x, const std::vector<QElem>& B) {
    std::vector<QElem> out = B;
    for (auto& b : B) out.push_back(qmul(H, x, b));
    return out;
}

QElem xi(const Int& d) { return (qone(d) + qi(d) + qj(d) + qk(d)) * Rat(1, 2); }

std::vector<CatalogueCase> build() {
    std::vector<CatalogueCase> v;
    auto none_units = [](const FundUnitData&) { return std::optional<GroupTag>(); };
    auto no_norm = [](const FundUnitData&) { return std::vector<QElem>(); };
    auto nsign = [](const FundUnitData& fu) { return fu.norm_sign == 1; };
    auto fixed = [](GroupTag G) { return [G](const FundUnitData&) { return std::optional<GroupTag>(G); }; };
    auto one_plus_i = [](const FundUnitData& fu) { return std::vector<QElem>{qone(fu.d) + qi(fu.d)}; };

    v.push_back({"a4-d5mod8", AlgTag::A, "d=5 mod 8",
                 [](const FundUnitData& fu) { return d_mod(fu, 8) == 5 && !fu.two_eps_square; },
                 [](const FundUnitData& fu) {
                     const Int& d = fu.d;
                     QElem g = q(fe(fu, 1, 1), fe(fu, -2), fe(fu, 1, -1), fe(fu, 0)) * Rat(1, 4);
                     return std::vector<QElem>{qone(d), g, qj(d), xi(d)};
                 },
                 GroupTag::A4, DiscKind::maximal, fixed(GroupTag::A4), no_norm});

    v.push_back({"d2dd-oj", AlgTag::B, "F(j)/F unramified at the dyadic primes", j_unramified,
                 [](const FundUnitData& fu) {
                     QuatAlgebra H = standard_algebra(AlgTag::B, fu);
                     return left_times(H, qi(fu.d), integral_closure_2(H, qj(fu.d)));
                 },
                 GroupTag::D2ddag, DiscKind::maximal,
                 [](const FundUnitData& fu) {
                     return std::optional<GroupTag>(fu.three_eps_square ? GroupTag::D6 : GroupTag::D2ddag);
                 },
                 no_norm});

    auto d5_ramified = [nsign](const FundUnitData& fu) { return nsign(fu) && d_mod(fu, 8) == 5 && !j_unramified(fu); };
    v.push_back({"d2dd-b1mod4", AlgTag::B, "d=5 mod 8, F(j) ramified, eps half-integral, b=1 mod 4",
                 [d5_ramified](const FundUnitData& fu) { return d5_ramified(fu) && fu.half && mod(fu.b, 4) == 1; },
                 [](const FundUnitData& fu) {
                     const Int& d = fu.d;
                     return std::vector<QElem>{qone(d), qi(d),
                                               q(fe(fu, -1, 1), fe(fu, 2), fe(fu, 2), fe(fu, 0)) * Rat(1, 4),
                                               q(fe(fu, 2), fe(fu, -1, 1), fe(fu, 0), fe(fu, 2)) * Rat(1, 4)};
                 },
                 GroupTag::D2ddag, DiscKind::maximal, fixed(GroupTag::D2ddag), no_norm});

    v.push_back({"d2dd-integral", AlgTag::B, "d=1 mod 8 with a=3 mod 4, or d=5 mod 8 with F(j) ramified and eps in Z[sqrt d]",
                 [nsign, d5_ramified](const FundUnitData& fu) {
                     if (!nsign(fu)) return false;
                     if (d_mod(fu, 8) == 1) return mod(fu.a, 4) == 3;
                     return d5_ramified(fu) && !fu.half;
                 },
                 [](const FundUnitData& fu) {
                     const Int& d = fu.d;
                     return std::vector<QElem>{qone(d), qi(d),
                                               q(fe(fu, -1, 1), fe(fu, 1, 1), fe(fu, 2), fe(fu, 0)) * Rat(1, 4),
                                               q(fe(fu, 1, 1), fe(fu, -1, 1), fe(fu, 0), fe(fu, 2)) * Rat(1, 4)};
                 },
                 GroupTag::D2ddag, DiscKind::maximal, fixed(GroupTag::D2ddag), no_norm});

    v.push_back({"d2dd-b3mod4", AlgTag::B, "d=5 mod 8, F(j) ramified, eps half-integral, b=3 mod 4",
                 [d5_ramified](const FundUnitData& fu) { return d5_ramified(fu) && fu.half && mod(fu.b, 4) == 3; },
                 [](const FundUnitData& fu) {
                     const Int& d = fu.d;
                     return std::vector<QElem>{qone(d), qi(d),
                                               q(fe(fu, 1, 1), fe(fu, 2), fe(fu, 2), fe(fu, 0)) * Rat(1, 4),
                                               q(fe(fu, 2), fe(fu, 1, 1), fe(fu, 0), fe(fu, 2)) * Rat(1, 4)};
                 },
                 GroupTag::D2ddag, DiscKind::maximal, fixed(GroupTag::D2ddag), no_norm});

    auto d3_a_even = [nsign](const FundUnitData& fu) { return nsign(fu) && d_mod(fu, 4) == 3 && mod(fu.a, 2) == 0; };
    v.push_back({"d2dd-oi", AlgTag::B, "d=3 mod 4, a even", d3_a_even,
                 [](const FundUnitData& fu) {
                     QuatAlgebra H = standard_algebra(AlgTag::B, fu);
                     return left_times(H, qj(fu.d), integral_closure_2(H, qi(fu.d)));
                 },
                 GroupTag::D2ddag, DiscKind::maximal,
                 [](const FundUnitData& fu) {
                     return std::optional<GroupTag>(fu.two_eps_square ? GroupTag::D4 : GroupTag::D2ddag);
                 },
                 one_plus_i});

    v.push_back({"d2dd-oi-alt", AlgTag::B, "d=3 mod 4, a even", d3_a_even,
                 [](const FundUnitData& fu) {
                     const Int& d = fu.d;
                     return std::vector<QElem>{qone(d),
                                               q(fe(fu, 1), fe(fu, 1), fe(fu, 1, 1), fe(fu, 0)) * Rat(1, 2), qj(d),
                                               q(fe(fu, 1, 1), fe(fu, 0), fe(fu, 1), fe(fu, 1)) * Rat(1, 2)};
                 },
                 GroupTag::D2ddag, DiscKind::maximal,
                 [](const FundUnitData& fu) {
                     return std::optional<GroupTag>(fu.two_eps_square ? GroupTag::S4 : GroupTag::D2ddag);
                 },
                 no_norm});

    v.push_back({"d2dd-o0", AlgTag::B, "d=2 mod 4 and d>6, or d=3 mod 4 with a odd",
                 [nsign](const FundUnitData& fu) {
                     if (!nsign(fu)) return false;
                     return (d_mod(fu, 4) == 2 && fu.d > 6) || (d_mod(fu, 4) == 3 && mod(fu.a, 2) == 1);
                 },
                 [](const FundUnitData& fu) {
                     QuatAlgebra H = standard_algebra(AlgTag::B, fu);
                     return times(H, order_B(H, fu), xi(fu.d));
                 },
                 GroupTag::D2ddag, DiscKind::maximal,
                 [](const FundUnitData& fu) {
                     return std::optional<GroupTag>(fu.two_eps_square ? GroupTag::D4 : GroupTag::D2ddag);
                 },
                 no_norm});

    v.push_back({"a4-d23mod4", AlgTag::A, "d=2,3 mod 4", [](const FundUnitData& fu) { return d_mod(fu, 4) >= 2; },
                 [](const FundUnitData& fu) {
                     QuatAlgebra H = standard_algebra(AlgTag::A, fu);
                     return times(H, order_B(H, fu), xi(fu.d));
                 },
                 GroupTag::A4, DiscKind::maximal,
                 [](const FundUnitData& fu) {
                     return std::optional<GroupTag>(fu.two_eps_square ? GroupTag::S4 : GroupTag::A4);
                 },
                 one_plus_i});

    auto d2_ge = [nsign](const FundUnitData& fu) { return nsign(fu) && d_mod(fu, 4) == 2 && fu.d > 6; };
    v.push_back({"d2dd-oi-prime", AlgTag::B, "d=2 mod 4, d>6", d2_ge,
                 [](const FundUnitData& fu) {
                     const Int& d = fu.d;
                     return std::vector<QElem>{qone(d), q(fe(fu, 1), fe(fu, 1), fe(fu, 0, 1), fe(fu, 0)) * Rat(1, 2),
                                               qj(d), q(fe(fu, 0, 1), fe(fu, 0), fe(fu, 1), fe(fu, 1)) * Rat(1, 2)};
                 },
                 GroupTag::D2ddag, DiscKind::maximal,
                 [](const FundUnitData& fu) {
                     return std::optional<GroupTag>(fu.two_eps_square ? GroupTag::S4 : GroupTag::D2ddag);
                 },
                 one_plus_i});

    v.push_back({"d2dd-b0mod4", AlgTag::B, "d=2 mod 4, F(j) ramified, 4 | b",
                 [d2_ge](const FundUnitData& fu) { return d2_ge(fu) && !j_unramified(fu) && mod(fu.b, 4) == 0; },
                 [](const FundUnitData& fu) {
                     const Int& d = fu.d;
                     return std::vector<QElem>{qone(d), qi(d),
                                               q(fe(fu, 0, 1), fe(fu, 1), fe(fu, 1), fe(fu, 0)) * Rat(1, 2),
                                               q(fe(fu, 1), fe(fu, 0, 1), fe(fu, 0), fe(fu, 1)) * Rat(1, 2)};
                 },
                 GroupTag::D2ddag, DiscKind::maximal, none_units, no_norm});

    v.push_back({"d2dd-b2mod4", AlgTag::B, "d=2 mod 4, F(j) ramified, b=2 mod 4",
                 [d2_ge](const FundUnitData& fu) { return d2_ge(fu) && !j_unramified(fu) && mod(fu.b, 4) == 2; },
                 [](const FundUnitData& fu) {
                     const Int& d = fu.d;
                     return std::vector<QElem>{qone(d), qi(d),
                                               q(fe(fu, 1, 1), fe(fu, 0, 1), fe(fu, 1), fe(fu, 0)) * Rat(1, 2),
                                               q(fe(fu, 0, 1), fe(fu, 1, 1), fe(fu, 0), fe(fu, 1)) * Rat(1, 2)};
                 },
                 GroupTag::D2ddag, DiscKind::maximal, none_units, no_norm});

    v.push_back({"d3dd-delta", AlgTag::D, "d=0 mod 3, eps=-1 mod q",
                 [nsign](const FundUnitData& fu) { return nsign(fu) && d_mod(fu, 3) == 0 && eps_sign_mod3(fu) == -1; },
                 [](const FundUnitData& fu) {
                     const Int& d = fu.d;
                     int r = int(rat_mod(eps_b(fu), 3).get_si());
                     FElem cj = r == 0 ? fe(fu, 2) : r == 1 ? fe(fu, 2, 2) : fe(fu, -2, 2);
                     QElem delta = q(fe(fu, 0), fe(fu, -3), cj, fe(fu, 1)) * Rat(1, 6);
                     return std::vector<QElem>{qone(d), qi(d), (qone(d) + qj(d)) * Rat(1, 2), delta};
                 },
                 GroupTag::D3ddag, DiscKind::maximal, none_units, no_norm});

    v.push_back({"b12-d3mod4", AlgTag::A, "d=3 mod 4", [](const FundUnitData& fu) { return d_mod(fu, 4) == 3; },
                 [](const FundUnitData& fu) { return order_B(standard_algebra(AlgTag::A, fu), fu); }, std::nullopt,
                 DiscKind::maximal, none_units, no_norm});

    auto d1_minus = [nsign](const FundUnitData& fu) {
        return nsign(fu) && d_mod(fu, 3) == 1 && eps_sign_mod3(fu) == -1;
    };
    auto d3dd_basis = [](const FundUnitData& fu, const FElem& cj) {
        const Int& d = fu.d;
        return std::vector<QElem>{qone(d), qi(d), (qone(d) + qj(d)) * Rat(1, 2),
                                  q(fe(fu, 0), fe(fu, -3), cj, fe(fu, 1)) * Rat(1, 6)};
    };
    v.push_back({"d3dd-o", AlgTag::D, "d=1 mod 3, eps=-1 mod 3", d1_minus,
                 [d3dd_basis](const FundUnitData& fu) { return d3dd_basis(fu, fe(fu, 2)); }, GroupTag::D3ddag,
                 DiscKind::maximal, none_units, no_norm});

    v.push_back({"d3d-max", AlgTag::C, "d=2 mod 3",
                 [](const FundUnitData& fu) { return d_mod(fu, 3) == 2 && !fu.three_eps_square; },
                 [](const FundUnitData& fu) {
                     const Int& d = fu.d;
                     return std::vector<QElem>{qone(d), (qi(d) + qk(d)) * Rat(1, 2), (qone(d) + qj(d)) * Rat(1, 2),
                                               q(fe(fu, 0), fe(fu, 0), fe(fu, 0, 1), fe(fu, 1)) * Rat(1, 3)};
                 },
                 GroupTag::D3dag, DiscKind::maximal, fixed(GroupTag::D3dag), no_norm});

    v.push_back({"d3dd-o-prime", AlgTag::D, "d=1 mod 3, eps=-1 mod 3", d1_minus,
                 [d3dd_basis](const FundUnitData& fu) { return d3dd_basis(fu, fe(fu, 0, 2)); }, GroupTag::D3ddag,
                 DiscKind::maximal, none_units, no_norm});

    auto min_order = [](GroupTag G) {
        return [G](const FundUnitData& fu) { return lattice_elems(fu.d, minimal_G_order(G, fu)->lat); };
    };
    v.push_back({"d6-min", AlgTag::C, "3 eps a square", [](const FundUnitData& fu) { return fu.three_eps_square; },
                 min_order(GroupTag::D6), GroupTag::D6, DiscKind::maximal, fixed(GroupTag::D6), no_norm});
    v.push_back({"s4-min", AlgTag::A, "2 eps a square", [](const FundUnitData& fu) { return fu.two_eps_square; },
                 min_order(GroupTag::S4), GroupTag::S4, DiscKind::maximal, fixed(GroupTag::S4), no_norm});
    v.push_back({"d4-min", AlgTag::A, "2 eps a square", [](const FundUnitData& fu) { return fu.two_eps_square; },
                 min_order(GroupTag::D4), GroupTag::D4, DiscKind::two, fixed(GroupTag::D4), no_norm});
    v.push_back({"a4-min", AlgTag::A, "all d", [](const FundUnitData&) { return true; }, min_order(GroupTag::A4),
                 GroupTag::A4, DiscKind::two, fixed(GroupTag::A4), one_plus_i});

    v.push_back({"d2d-o8", AlgTag::A, "d=2,3 mod 4", [](const FundUnitData& fu) { return d_mod(fu, 4) >= 2; },
                 [](const FundUnitData& fu) {
                     const Int& d = fu.d;
                     if (d_mod(fu, 4) == 2)
                         return std::vector<QElem>{qone(d), qi(d),
                                                   q(fe(fu, 1), fe(fu, 0, 1), fe(fu, 1), fe(fu, 0)) * Rat(1, 2),
                                                   q(fe(fu, 0, -1), fe(fu, 1), fe(fu, 0), fe(fu, 1)) * Rat(1, 2)};
                     return std::vector<QElem>{qone(d), qi(d), q(fe(fu, 0, 1), fe(fu, 0), fe(fu, 1), fe(fu, 0)) * Rat(1, 2),
                                               q(fe(fu, 0), fe(fu, 0, 1), fe(fu, 0), fe(fu, 1)) * Rat(1, 2)};
                 },
                 GroupTag::D2dag, DiscKind::maximal,
                 [](const FundUnitData& fu) {
                     return std::optional<GroupTag>(fu.two_eps_square ? GroupTag::D4 : GroupTag::D2dag);
                 },
                 no_norm});
    return v;
}

// The CM order O_F + p O_K of F(i): a subring of index 2 in O_K containing O_F[i].
void verify_b12(const QuatAlgebra& H, const FundUnitData& fu, const std::vector<QElem>& gens, CatalogueCheck& c) {
    Lattice L = of_span(gens);
    c.is_order = L.rank() == 4 && L.contains(to_qvec(qone(fu.d)));
    for (auto& x : L.basis())
        for (auto& y : L.basis())
            if (!L.contains(qmul_vec(H, x, y))) c.is_order = false;
    int k = closure_count(H, qi(fu.d));
    Lattice K = of_span(integral_closure_2(H, qi(fu.d)));
    int inside = 0;
    std::vector<FElem> reps{FElem(fu.d), FElem(fu.d, 1), FElem::omega(fu.d), FElem(fu.d, 1) + FElem::omega(fu.d)};
    for (auto& u : reps)
        for (auto& v : reps) {
            QVec x = to_qvec((qone(fu.d) * u + qi(fu.d) * v) * Rat(1, 2));
            if (K.contains(x) && L.contains(x)) ++inside;
        }
    c.disc = "[O_K : B] = " + std::to_string(k / std::max(inside, 1));
    c.disc_ok = K.contains(L) && inside * 2 == k;
    c.contains_ok = L.contains(of_span({qone(fu.d), qi(fu.d)}));
    c.units = "";
}

}  // namespace

std::vector<QElem> integral_closure_2(const QuatAlgebra& H, const QElem& alpha) {
    const Int& d = H.d;
    FElem n = -qmul(H, alpha, alpha).c[0];
    std::vector<FElem> reps{FElem(d), FElem(d, 1), FElem::omega(d), FElem(d, 1) + FElem::omega(d)};
    std::vector<QElem> out{qone(d), alpha};
    for (auto& u : reps)
        for (auto& v : reps)
            if (((u * u + n * v * v) * make_rat(1, 4)).is_integral()) out.push_back((qone(d) * u + alpha * v) * Rat(1, 2));
    return out;
}

const std::vector<CatalogueCase>& catalogue() {
    static const std::vector<CatalogueCase> v = build();
    return v;
}

const CatalogueCase& catalogue_case(const std::string& id) {
    for (auto& c : catalogue())
        if (c.id == id) return c;
    throw ValidationError("unknown case '" + id + "'");
}

CatalogueCheck verify_case(const std::string& id, const Int& d) {
    const CatalogueCase& cc = catalogue_case(id);
    if (d < 6 || !is_squarefree(d)) throw ValidationError("d must be a square-free integer >= 6");
    auto fu = fundamental_unit(d);
    if (!cc.admissible(fu)) throw ValidationError(id + " needs " + cc.row + "; d=" + d.get_str() + " is not admissible");
    QuatAlgebra H = standard_algebra(cc.alg, fu);
    CatalogueCheck c;
    c.id = id;
    c.d = d;
    auto gens = cc.gens(fu);
    if (id == "b12-d3mod4") {
        verify_b12(H, fu, gens, c);
        return c;
    }
    Lattice L = of_span(gens);
    c.is_order = L.full_rank() && is_order(H, L);
    if (!c.is_order) return c;
    QuatOrder O = order_from_lattice(H, L);
    auto R = ramification(H);
    c.disc = O.disc.str();
    c.disc_ok = cc.disc == DiscKind::maximal ? O.disc == R.disc_H : O.disc == IdealF::principal(FElem(d, 2));
    if (cc.contains) {
        auto M = minimal_G_order(*cc.contains, fu);
        c.contains_ok = M && L.contains(M->lat);
    } else {
        c.contains_ok = true;
    }
    auto want = cc.units(fu);
    UnitGroup U = unit_group(O, fu);
    c.units = group_name(U.tag);
    if (want) c.units_ok = U.tag == *want;
    for (auto& x : cc.normalizers(fu))
        if (!normalizer_membership(x, O)) c.normalizers_ok = false;
    return c;
}

std::vector<Int> admissible_d(const std::string& id, int count, int dmax) {
    const CatalogueCase& cc = catalogue_case(id);
    std::vector<Int> out;
    for (int d = 6; d <= dmax && int(out.size()) < count; ++d) {
        if (!is_squarefree(d)) continue;
        if (cc.admissible(fundamental_unit(d))) out.push_back(d);
    }
    return out;
}

std::string catalogue_json(const CatalogueCheck& c) {
    nlohmann::ordered_json j;
    j["case"] = c.id;
    j["d"] = c.d.get_si();
    j["is_order"] = c.is_order;
    j["discriminant"] = c.disc;
    j["discriminant_ok"] = c.disc_ok;
    j["contains_minimal_order"] = c.contains_ok;
    j["units"] = c.units;
    j["units_ok"] = c.units_ok;
    j["normalizers_ok"] = c.normalizers_ok;
    j["ok"] = c.ok();
    return j.dump(2);
}

}  // namespace quatrefine
