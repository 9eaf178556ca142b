#include "quatrefine/primecase.hpp"

#include "quatrefine/quadclass.hpp"

namespace quatrefine {

namespace {

Int as_count(const Rat& q, const char* g, const Int& p) {
    if (q.get_den() != 1 || q < 0)
        throw ConsistencyError(std::string("t(") + g + ") = " + to_string(q) + " at p=" + p.get_str());
    return q.get_num();
}

RefinedCounts small_prime(const Int& p) {
    RefinedCounts c;
    c.d = p;
    c.alg_tag = "Hinf";
    auto put = [&](GroupTag G) { c.per_group[G] = GroupCount{Int(1), Int(1)}; };
    if (p == 2) put(GroupTag::S4);
    else if (p == 3) {
        put(GroupTag::S4);
        put(GroupTag::D12);
    } else put(GroupTag::A5);
    c.notes.push_back("tabulated small prime; Eichler residual not evaluated");
    return c;
}

}  // namespace

std::string d3_case_name(D3Case c) {
    switch (c) {
        case D3Case::O: return "d3dd-o";
        case D3Case::ODag: return "d3d-max";
        case D3Case::OPrime: return "d3dd-o-prime";
    }
    return "?";
}

D3Case choose_D3_representative(const Int& p) {
    if (!is_prime(p) || p <= 5 || mod(p, 4) != 3) throw ValidationError("need a prime p = 3 mod 4 with p > 5");
    if (mod(p, 12) == 11) return D3Case::ODag;
    return mod(p, 24) == 7 ? D3Case::O : D3Case::OPrime;
}

RefinedCounts counts_prime(const Int& p) {
    if (!is_prime(p)) throw ValidationError("p must be prime");
    auto fu = fundamental_unit(p);
    Int hF = class_number_real(p);
    RefinedCounts c;
    if (p <= 5) {
        c = small_prime(p);
    } else {
        c.d = p;
        c.alg_tag = "Hinf";
        Rat z = zeta_minus_one(p);
        Rat hp = Rat(class_number_field(-p)), h2p = Rat(class_number_field(-2 * p)), h3p = Rat(class_number_field(-3 * p));
        int l2 = kronecker(2, p), l3 = kronecker(p, 3);
        std::map<GroupTag, Rat> t;
        if (mod(p, 4) == 1) {
            t[GroupTag::C1] = z / 2 - hp / 8 - h3p / 12 - Rat(l3, 4) - Rat(l2, 4) + Rat(1, 2);
            t[GroupTag::C2] = hp / 4 + Rat(l3, 2) + Rat(l2, 4) - Rat(3, 4);
            t[GroupTag::C3] = h3p / 4 + Rat(l3, 4) + Rat(l2, 2) - Rat(3, 4);
            t[GroupTag::D3dag] = make_rat(1 - l3, 2);
            t[GroupTag::A4] = make_rat(1 - l2, 2);
        } else {
            t[GroupTag::C1] = z / 2 + Rat(-7 + 3 * l2) * hp / 8 - h2p / 4 - h3p / 12 + Rat(3, 2);
            t[GroupTag::C2] = Rat(2 - l2) * hp / 2 + h2p / 2 - Rat(5, 2);
            t[GroupTag::C3] = h3p / 4 - 1;
            t[GroupTag::C4] = Rat(3 - l2) * hp / 2 - 1;
            t[choose_D3_representative(p) == D3Case::ODag ? GroupTag::D3dag : GroupTag::D3ddag] = 1;
            t[GroupTag::D4] = 1;
            t[GroupTag::S4] = 1;
        }
        for (auto& [G, v] : t) {
            Int n = as_count(v, group_name(G).c_str(), p);
            c.per_group[G] = GroupCount{n, hF * n};
        }
    }
    c.a = FElem(p, -1);
    c.b = FElem(p, -1);
    c.omega = 0;
    RamificationData R;
    R.omega = 0;
    c.mass = mass_formula(fu, R);
    c.h_total = 0;
    Int tt = 0;
    Rat weighted = 0;
    for (auto& [G, gc] : c.per_group) {
        c.h_total += gc.h;
        tt += *gc.t;
        weighted += Rat(gc.h) / group_order(G);
    }
    c.t_total = tt;
    c.mass_residual = weighted - c.mass;
    c.eichler_residual = p > 5 ? Rat(c.h_total) - eichler_h(fu, R, enumerate_B(fu)) : Rat(0);
    return c;
}

std::vector<std::string> crosscheck_prime(const Int& p) {
    RefinedCounts a = counts_prime(p);
    RefinedCounts b = full_counts(p, AlgTag::Hinf);
    std::vector<std::string> diff;
    for (GroupTag G : all_groups()) {
        auto ia = a.per_group.find(G), ib = b.per_group.find(G);
        Int ha = ia == a.per_group.end() ? Int(0) : ia->second.h;
        Int hb = ib == b.per_group.end() ? Int(0) : ib->second.h;
        std::optional<Int> ta = ia == a.per_group.end() ? std::optional<Int>(0) : ia->second.t;
        std::optional<Int> tb = ib == b.per_group.end() ? std::optional<Int>(0) : ib->second.t;
        if (ha != hb || ta != tb) {
            auto show = [](const std::optional<Int>& t) { return t ? t->get_str() : std::string("null"); };
            diff.push_back(group_name(G) + ": closed form t=" + show(ta) + " h=" + ha.get_str() + ", recipe t=" + show(tb) +
                           " h=" + hb.get_str());
        }
    }
    if (a.h_total != b.h_total)
        diff.push_back("h_total: closed form " + a.h_total.get_str() + ", recipe " + b.h_total.get_str());
    return diff;
}

}  // namespace quatrefine
