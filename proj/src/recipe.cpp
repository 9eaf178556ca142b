#include "quatrefine/recipe.hpp"

#include "quatrefine/primecase.hpp"
#include "quatrefine/quadclass.hpp"

#include <json.hpp>

namespace quatrefine {

namespace {

Int exact_nonneg(const Rat& q, const std::string& what) {
    if (q.get_den() != 1 || q < 0) throw ConsistencyError(what + " is not a nonnegative integer: " + to_string(q));
    return q.get_num();
}

AlgTag owner_algebra(GroupTag G) {
    switch (G) {
        case GroupTag::S4:
        case GroupTag::D4:
        case GroupTag::A4:
        case GroupTag::D2dag: return AlgTag::A;
        case GroupTag::D2ddag: return AlgTag::B;
        case GroupTag::D3dag:
        case GroupTag::D6: return AlgTag::C;
        case GroupTag::D3ddag: return AlgTag::D;
        default: break;
    }
    throw std::logic_error("no table algebra for " + group_name(G));
}

}  // namespace

const std::vector<GroupTag>& noncyclic_table_groups() {
    static const std::vector<GroupTag> v{GroupTag::S4,    GroupTag::D6,    GroupTag::A4,     GroupTag::D4,
                                         GroupTag::D2dag, GroupTag::D3dag, GroupTag::D2ddag, GroupTag::D3ddag};
    return v;
}

std::optional<QuatOrder> minimal_G_order(GroupTag G, const FundUnitData& fu) {
    AlgTag tag = owner_algebra(G);
    if ((tag == AlgTag::B || tag == AlgTag::D) && fu.norm_sign != 1) return std::nullopt;
    if ((G == GroupTag::S4 || G == GroupTag::D4) && !fu.two_eps_square) return std::nullopt;
    if (G == GroupTag::D6 && !fu.three_eps_square) return std::nullopt;
    QuatAlgebra H = standard_algebra(tag, fu);
    const Int& d = fu.d;
    QElem one = qone(d), i = qi(d), j = qj(d), k = qk(d);
    QElem xi = (one + i + j + k) * Rat(1, 2);
    switch (G) {
        case GroupTag::D2dag:
        case GroupTag::D2ddag: return make_order(H, {one, i, j, k});
        case GroupTag::D3dag:
        case GroupTag::D3ddag: {
            QElem h = (one + j) * Rat(1, 2);
            return make_order(H, {one, i, h, qmul(H, i, h)});
        }
        case GroupTag::A4: return make_order(H, {one, i, j, xi});
        case GroupTag::D4: {
            QElem e = (one + j) * *fu.theta;
            return make_order(H, {one, i, e, qmul(H, i, e)});
        }
        case GroupTag::S4: return make_order(H, {one, (one + i) * *fu.theta, (one + j) * *fu.theta, xi});
        case GroupTag::D6: {
            QElem e = (one * Rat(3) + j) * *fu.sigma * Rat(1, 2);
            return make_order(H, {one, i, e, qmul(H, i, e)});
        }
        default: break;
    }
    throw std::logic_error("no minimal order for " + group_name(G));
}

std::vector<QElem> minimal_order_normalizer(GroupTag G, const Int& d, int* index) {
    QElem one = qone(d), i = qi(d), j = qj(d);
    std::vector<QElem> gens;
    int n = 1;
    switch (G) {
        case GroupTag::D2dag: gens = {one + i, one + j}; n = 6; break;
        case GroupTag::D2ddag:
        case GroupTag::A4: gens = {one + i}; n = 2; break;
        case GroupTag::D3dag:
        case GroupTag::D3ddag: gens = {j}; n = 2; break;
        default: break;
    }
    if (index) *index = n;
    return gens;
}

namespace {

struct OrbitScan {
    MinimalOrderData data;
    std::vector<QuatOrder> reps;
    std::vector<UnitGroup> units;
    std::vector<int> sizes;
    int nbar = 1;
};

OrbitScan scan_minimal(GroupTag G, const QuatOrder& O, const FundUnitData& fu) {
    OrbitScan sc;
    auto S = maximal_overorders(O, ramification(O.alg));
    int norbits = 0;
    auto gens = minimal_order_normalizer(G, fu.d, &sc.nbar);
    auto orbit = conjugation_orbits(O.alg, S, gens, &norbits);
    sc.data = MinimalOrderData{G, int(S.size()), norbits, {}};
    for (int o = 0; o < norbits; ++o) {
        int size = 0, first = -1;
        for (int a = 0; a < int(S.size()); ++a)
            if (orbit[a] == o) {
                ++size;
                if (first < 0) first = a;
            }
        sc.reps.push_back(S[first]);
        sc.units.push_back(unit_group(S[first], fu));
        sc.sizes.push_back(size);
        sc.data.orbit_groups.push_back(sc.units.back().tag);
    }
    return sc;
}

}  // namespace

std::optional<MinimalOrderData> aleph_beth(GroupTag G, const FundUnitData& fu) {
    auto O = minimal_G_order(G, fu);
    if (!O) return std::nullopt;
    return scan_minimal(G, *O, fu).data;
}

NoncyclicData t_noncyclic(const FundUnitData& fu, const QuatAlgebra& H) {
    if (fu.d < 6) throw ValidationError("the general recipe needs d >= 6");
    NoncyclicData out;
    for (GroupTag G : noncyclic_table_groups()) out.t[G] = 0;
    for (GroupTag G : noncyclic_table_groups()) {
        auto O = minimal_G_order(G, fu);
        if (!O) continue;
        if (!is_isomorphic(O->alg, H)) continue;
        OrbitScan sc = scan_minimal(G, *O, fu);
        for (std::size_t o = 0; o < sc.reps.size(); ++o) {
            const UnitGroup& U = sc.units[o];
            if (U.tag != G) {
                if (U.order <= group_order(G))
                    throw ConsistencyError("maximal order over the minimal " + group_name(G) + "-order has unit group " +
                                           group_name(U.tag));
                continue;
            }
            if (sc.nbar % sc.sizes[o] != 0) throw ConsistencyError("orbit size does not divide the normalizer quotient");
            out.t[G] += 1;
            out.reps.push_back(TpRep{G, sc.reps[o], U, sc.nbar / sc.sizes[o], group_name(G)});
        }
        out.minimal.push_back(std::move(sc.data));
    }
    return out;
}

std::map<GroupTag, Rat> h_noncyclic(const NoncyclicData& nc, const FundUnitData& fu, const RamificationData& R) {
    std::map<GroupTag, Rat> h;
    for (auto& [G, t] : nc.t) h[G] = 0;
    Rat c = Rat(pow_int(2, R.omega)) * Rat(class_number_real(fu.d));
    for (auto& r : nc.reps) h[r.group] += c / r.normalizer_index;
    return h;
}

namespace {

Rat local_factor(const CMOrderDescriptor& B, const FundUnitData& fu, const RamificationData& R) {
    Rat f = 1;
    for (auto& P : R.finite_ramified) f *= 1 - eichler_symbol(B, fu, P);
    return f;
}

GroupTag cyclic_tag(int n) {
    switch (n) {
        case 2: return GroupTag::C2;
        case 3: return GroupTag::C3;
        case 4: return GroupTag::C4;
        case 6: return GroupTag::C6;
    }
    throw ConsistencyError("unexpected w(B) = " + std::to_string(n));
}

}  // namespace

std::map<GroupTag, Rat> h_cyclic(const FundUnitData& fu, const RamificationData& R, const std::vector<CMOrderDescriptor>& Bs,
                                 const NoncyclicData& nc, std::vector<CyclicTerm>* terms) {
    std::map<GroupTag, Rat> h{{GroupTag::C2, 0}, {GroupTag::C3, 0}, {GroupTag::C4, 0}, {GroupTag::C6, 0}};
    Rat c = Rat(pow_int(2, R.omega)) * Rat(class_number_real(fu.d));
    for (auto& B : Bs) {
        Rat rhs = Rat(B.h_B) * local_factor(B, fu, R);
        Rat sum = 0;
        for (auto& rep : nc.reps) {
            int m = optimal_embedding_count(rep.order, rep.units, B.spec);
            sum += make_rat(m, rep.normalizer_index);
        }
        Rat hb = (rhs - c * sum) / 2;
        exact_nonneg(hb, "h(C" + std::to_string(B.w) + ", " + B.name + ") at d=" + fu.d.get_str());
        h[cyclic_tag(B.w)] += hb;
        if (terms) terms->push_back(CyclicTerm{B.name, B.w, rhs, c * sum, hb});
    }
    return h;
}

Rat mass_formula(const FundUnitData& fu, const RamificationData& R) {
    Rat m = Rat(class_number_real(fu.d)) * zeta_minus_one(fu.d) / 2;
    for (auto& P : R.finite_ramified) m *= Rat(P.norm() - 1);
    return m;
}

Rat eichler_h(const FundUnitData& fu, const RamificationData& R, const std::vector<CMOrderDescriptor>& Bs) {
    Rat h = mass_formula(fu, R);
    for (auto& B : Bs) h += Rat(B.h_B) * (1 - make_rat(1, B.w)) * local_factor(B, fu, R) / 2;
    return h;
}

RefinedCounts full_counts(const Int& d, AlgTag tag, bool strict) {
    if (d < 2 || !is_squarefree(d) || is_square(d)) throw ValidationError("d must be a square-free integer >= 2");
    auto fu = fundamental_unit(d);
    return full_counts(d, standard_algebra(tag, fu), strict);
}

RefinedCounts full_counts(const Int& d, const QuatAlgebra& H, bool strict) {
    if (d < 2 || !is_squarefree(d) || is_square(d)) throw ValidationError("d must be a square-free integer >= 2");
    if (H.d != d) throw ValidationError("algebra is defined over a different field");
    if (!H.totally_definite()) throw ValidationError("the algebra must be totally definite");
    auto fu = fundamental_unit(d);
    auto R = ramification(H);

    RefinedCounts c;
    c.d = d;
    c.alg_tag = H.tag;
    c.a = H.a;
    c.b = H.b;
    c.omega = R.omega;
    for (auto& P : R.finite_ramified) c.ramified.push_back(P.name());
    Int hF = class_number_real(d);

    if (d < 6) {
        if (R.omega != 0) throw ValidationError("for d < 6 only the algebra unramified at all finite places is supported");
        RefinedCounts p = counts_prime(d);
        p.alg_tag = H.tag;
        p.a = H.a;
        p.b = H.b;
        return p;
    }

    NoncyclicData nc = t_noncyclic(fu, H);
    auto hn = h_noncyclic(nc, fu, R);
    auto Bs = enumerate_B(fu);
    auto hc = h_cyclic(fu, R, Bs, nc);
    c.mass = mass_formula(fu, R);

    Rat weighted = 0;
    std::map<GroupTag, Int> h;
    for (auto& [G, v] : hn) h[G] = exact_nonneg(v, "h(" + group_name(G) + ")");
    for (auto& [G, v] : hc) h[G] = exact_nonneg(v, "h(" + group_name(G) + ")");
    for (auto& [G, v] : h) weighted += Rat(v) / group_order(G);
    h[GroupTag::C1] = exact_nonneg(c.mass - weighted, "h(C1)");

    bool transport = R.omega == 0 && hF % 2 == 1;
    c.h_total = 0;
    Int t_total = 0;
    for (auto& [G, hv] : h) {
        GroupCount gc;
        gc.h = hv;
        c.h_total += hv;
        if (!group_cyclic(G)) {
            gc.t = nc.t.at(G);
            if (transport && hv != hF * *gc.t)
                throw ConsistencyError("h(G) != h(F) t(G) for " + group_name(G) + " at d=" + d.get_str());
        } else if (transport) {
            if (hv % hF != 0) throw ConsistencyError("h(F) does not divide h(" + group_name(G) + ")");
            gc.t = Int(hv / hF);
        }
        if (gc.t) t_total += *gc.t;
        c.per_group[G] = gc;
    }
    if (transport) c.t_total = t_total;

    Rat mass_sum = 0;
    for (auto& [G, gc] : c.per_group) mass_sum += Rat(gc.h) / group_order(G);
    c.mass_residual = mass_sum - c.mass;
    c.eichler_residual = Rat(c.h_total) - eichler_h(fu, R, Bs);

    if (nc.t.at(GroupTag::D4) != nc.t.at(GroupTag::S4))
        throw ConsistencyError("t(D4) != t(S4) at d=" + d.get_str());
    // 2 eps and 3 eps are both squares only when 6 is a square in F.
    if (d != 6 && nc.t.at(GroupTag::D6) != 0 && nc.t.at(GroupTag::S4) != 0)
        throw ConsistencyError("t(D6) and t(S4) both nonzero at d=" + d.get_str());
    if (strict && (c.mass_residual != 0 || c.eichler_residual != 0))
        throw ConsistencyError("nonzero residual at d=" + d.get_str() + ": mass " + to_string(c.mass_residual) + ", eichler " +
                               to_string(c.eichler_residual));
    return c;
}

std::string counts_json(const RefinedCounts& c) {
    nlohmann::ordered_json j;
    j["d"] = c.d.get_si();
    j["algebra"] = {{"tag", c.alg_tag}, {"a", c.a.str()}, {"b", c.b.str()}, {"ramified", c.ramified}};
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (auto& [G, gc] : c.per_group) {
        nlohmann::ordered_json e;
        if (gc.t) e["t"] = gc.t->get_si();
        else e["t"] = nullptr;
        e["h"] = gc.h.get_si();
        counts[group_name(G)] = e;
    }
    j["counts"] = counts;
    j["mass"] = to_string(c.mass);
    j["h_total"] = c.h_total.get_si();
    if (c.t_total) j["t_total"] = c.t_total->get_si();
    else j["t_total"] = nullptr;
    j["omega"] = c.omega;
    j["checks"] = {{"mass_residual", to_string(c.mass_residual)}, {"eichler_residual", to_string(c.eichler_residual)}};
    return j.dump(2);
}

RefinedCounts counts_from_json(const std::string& s) {
    auto j = nlohmann::json::parse(s);
    RefinedCounts c;
    c.d = Int(j.at("d").get<long>());
    const auto& a = j.at("algebra");
    c.alg_tag = a.at("tag").get<std::string>();
    c.a = FElem(c.d, parse_rat(a.at("a").get<std::string>()));
    c.b = FElem(c.d, 0);
    c.ramified = a.at("ramified").get<std::vector<std::string>>();
    for (auto& [name, e] : j.at("counts").items()) {
        GroupCount gc;
        if (!e.at("t").is_null()) gc.t = Int(e.at("t").get<long>());
        gc.h = Int(e.at("h").get<long>());
        c.per_group[parse_group(name)] = gc;
    }
    c.mass = parse_rat(j.at("mass").get<std::string>());
    c.h_total = Int(j.at("h_total").get<long>());
    if (!j.at("t_total").is_null()) c.t_total = Int(j.at("t_total").get<long>());
    c.omega = j.at("omega").get<int>();
    c.mass_residual = parse_rat(j.at("checks").at("mass_residual").get<std::string>());
    c.eichler_residual = parse_rat(j.at("checks").at("eichler_residual").get<std::string>());
    return c;
}

}  // namespace quatrefine
