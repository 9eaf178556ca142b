#include "quatrefine/cmorders.hpp"

#include "quatrefine/quadclass.hpp"

#include <json.hpp>

#include <algorithm>

namespace quatrefine {

std::string cm_field_name(CMField k) {
    switch (k) {
        case CMField::K1: return "F(sqrt-1)";
        case CMField::K3: return "F(sqrt-3)";
        case CMField::Ke: return "F(sqrt-eps)";
    }
    return "?";
}

namespace {

// Elements alpha + beta*s of K = F(s), s^2 = -m, as Q^4 vectors.
struct KField {
    Int d;
    FElem m;

    QVec vec(const FElem& a, const FElem& b) const {
        auto [a0, a1] = a.omega_coords();
        auto [b0, b1] = b.omega_coords();
        return {a0, a1, b0, b1};
    }
    std::pair<FElem, FElem> elem(const QVec& v) const {
        return {FElem::from_omega(d, v[0], v[1]), FElem::from_omega(d, v[2], v[3])};
    }
    QVec mul(const QVec& x, const QVec& y) const {
        auto [a, b] = elem(x);
        auto [c, e] = elem(y);
        return vec(a * c - m * b * e, a * e + b * c);
    }
    FElem norm(const QVec& x) const {
        auto [a, b] = elem(x);
        return a * a + m * b * b;
    }
    FElem trace(const QVec& x) const { return elem(x).first * Rat(2); }
    bool integral(const QVec& x) const { return trace(x).is_integral() && norm(x).is_integral(); }
    QVec one() const { return vec(FElem(d, 1), FElem(d)); }
    QVec omega() const { return vec(FElem::omega(d), FElem(d)); }
    QVec scale(const FElem& c, const QVec& x) const {
        auto [a, b] = elem(x);
        return vec(a * c, b * c);
    }
};

FElem field_m(CMField k, const FundUnitData& fu) {
    switch (k) {
        case CMField::K1: return FElem(fu.d, 1);
        case CMField::K3: return FElem(fu.d, 3);
        case CMField::Ke: return fu.eps;
    }
    throw std::logic_error("bad field");
}

// O_F[g] with g = s (K1, Ke) or (1+s)/2 (K3).
Lattice minimal_order(const KField& K, CMField k) {
    FElem g_a = k == CMField::K3 ? FElem(K.d, Rat(1, 2)) : FElem(K.d);
    FElem g_b = k == CMField::K3 ? FElem(K.d, Rat(1, 2)) : FElem(K.d, 1);
    QVec g = K.vec(g_a, g_b);
    return Lattice::from_gens(4, {K.one(), K.omega(), g, K.mul(K.omega(), g)});
}

Lattice maximal_order(const KField& K, const Lattice& R) {
    std::vector<QVec> E;
    for (int t = 0; t < 4; ++t) {
        QVec v(4);
        v[t] = 1;
        E.push_back(v);
    }
    QMat G(4, QVec(4));
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) G[s][t] = K.trace(K.mul(E[s], E[t])).trace();
    QMat Ginv = mat_inverse(G);
    FElem delta = mod(K.d, 4) == 1 ? FElem::sqrt_d(K.d) : FElem(K.d, 0, 2);
    std::vector<QVec> dual;
    for (auto& v : R.standard_dual().basis()) {
        QVec w(4);
        for (int s = 0; s < 4; ++s)
            for (int t = 0; t < 4; ++t) w[s] += Ginv[s][t] * v[t];
        dual.push_back(K.scale(delta, w));
    }
    Lattice D = Lattice::from_gens(4, dual);
    std::vector<QVec> gens = R.basis();
    for (auto& x : D.coset_reps(R))
        if (K.integral(x)) gens.push_back(x);
    Lattice O = Lattice::from_gens(4, gens);
    for (auto& x : O.basis())
        for (auto& y : O.basis())
            if (!O.contains(K.mul(x, y))) throw ConsistencyError("integral closure is not a ring");
    for (auto& x : O.basis())
        if (!K.integral(x)) throw ConsistencyError("integral closure has a non-integral element");
    return O;
}

Lattice order_with_conductor(const KField& K, const Lattice& OK, const IdealF& f) {
    std::vector<QVec> gens{K.one(), K.omega()};
    for (auto& z : f.zbasis())
        for (auto& x : OK.basis()) gens.push_back(K.scale(z, x));
    return Lattice::from_gens(4, gens);
}

IdealF conductor_of(const KField& K, const Lattice& OK, const Lattice& B) {
    Int n = OK.index_of(B);
    for (auto& f : IdealF::principal(FElem(K.d, Rat(n))).divisors())
        if (order_with_conductor(K, OK, f) == B) return f;
    throw ConsistencyError("order has no conductor");
}

struct CMUnits {
    int w = 0;
    QVec gen;
};

CMUnits cm_units(const KField& K, const Lattice& B, const FundUnitData& fu) {
    auto basis = B.basis();
    std::vector<QVec> units;
    for (auto& n : fu.S) {
        FElem ninv = FElem(K.d, 1) / n;
        QMat G(4, QVec(4));
        for (int s = 0; s < 4; ++s)
            for (int t = 0; t < 4; ++t) {
                auto [a, b] = K.elem(basis[s]);
                auto [c, e] = K.elem(basis[t]);
                G[s][t] = ((a * c + K.m * b * e) * ninv).trace();
            }
        for (auto& x : short_vectors(G, Rat(2), env_budget(10000000))) {
            QVec v(4);
            for (int s = 0; s < 4; ++s)
                for (int t = 0; t < 4; ++t) v[t] += Rat(x[s]) * basis[s][t];
            if (K.norm(v) == n) units.push_back(v);
        }
    }
    CMUnits out;
    out.w = int(units.size()) / 2;
    for (auto& u : units) {
        QVec x = u;
        int k = 1;
        while (!K.elem(x).second.is_zero()) {
            x = K.mul(x, u);
            if (++k > 2 * out.w + 2) throw ConsistencyError("CM unit of infinite order");
        }
        if (k == out.w) {
            out.gen = u;
            break;
        }
    }
    if (out.gen.empty()) throw ConsistencyError("CM unit group is not cyclic");
    return out;
}

int quotient_symbol(const KField& K, const Lattice& OK, const PrimeIdealF& P) {
    std::vector<QVec> gens;
    for (auto& z : prime_zbasis(P))
        for (auto& x : OK.basis()) gens.push_back(K.scale(z, x));
    Lattice PO = Lattice::from_gens(4, gens);
    bool idem = false;
    QVec one = K.one();
    for (auto& x : OK.coset_reps(PO)) {
        if (PO.contains(x)) continue;
        QVec x2 = K.mul(x, x);
        if (PO.contains(x2)) return 0;
        QVec diff(4), omx(4);
        for (int t = 0; t < 4; ++t) {
            diff[t] = x2[t] - x[t];
            omx[t] = one[t] - x[t];
        }
        if (PO.contains(diff) && !PO.contains(omx)) idem = true;
    }
    return idem ? 1 : -1;
}

Int exact_int(const Rat& q, const char* what) {
    if (q.get_den() != 1 || q < 0) throw ConsistencyError(std::string(what) + " is not a nonnegative integer: " + to_string(q));
    return q.get_num();
}

}  // namespace

int cm_artin_symbol(CMField k, const FundUnitData& fu, const PrimeIdealF& P) {
    KField K{fu.d, field_m(k, fu)};
    if (P.p >= 5) return residue_legendre(-K.m, P);
    return quotient_symbol(K, maximal_order(K, minimal_order(K, k)), P);
}

int eichler_symbol(const CMOrderDescriptor& B, const FundUnitData& fu, const PrimeIdealF& P) {
    if (B.conductor.exponent(P) > 0) return 1;
    return cm_artin_symbol(B.field, fu, P);
}

std::pair<Int, Int> r_s_pair(const FundUnitData& fu) {
    if (fu.norm_sign != 1) throw ValidationError("r_s_pair needs Nm(eps) = 1");
    Int T = exact_int(fu.eps.trace(), "Tr(eps)");
    Int r = squarefree_part(T + 2), s = squarefree_part(T - 2);
    for (const Int& x : {r, s})
        if (!is_square_in_F(fu.eps * Rat(x))) throw ConsistencyError("r eps is not a square");
    if (r * s != fu.d && r * s != 4 * fu.d) throw ConsistencyError("r s is not d or 4d");
    return {r, s};
}

Int class_number_K(CMField k, const FundUnitData& fu) {
    Int hd = class_number_real(fu.d);
    switch (k) {
        case CMField::K1: {
            int Q = fu.two_eps_square ? 2 : 1;
            return exact_int(Rat(Q) * Rat(hd) * Rat(class_number_field(-fu.d)) / 2, "h(K1)");
        }
        case CMField::K3: {
            int Q = fu.three_eps_square ? 2 : 1;
            return exact_int(Rat(Q) * Rat(hd) * Rat(class_number_field(-3 * fu.d)) / 2, "h(K3)");
        }
        case CMField::Ke: {
            auto [r, s] = r_s_pair(fu);
            return hd * class_number_field(-r) * class_number_field(-s);
        }
    }
    throw std::logic_error("bad field");
}

Int class_number_B(CMField k, const IdealF& f, int w_B, int w_OK, const FundUnitData& fu) {
    Rat h = Rat(class_number_K(k, fu)) * f.norm() * Rat(w_B) / Rat(w_OK);
    for (auto& [P, e] : f.factors()) h *= Rat(1) - make_rat(cm_artin_symbol(k, fu, P), P.norm());
    return exact_int(h, "h(B)");
}

std::vector<CMOrderDescriptor> enumerate_B(const FundUnitData& fu) {
    const Int& d = fu.d;
    if (d < 6) throw ValidationError("enumerate_B needs d >= 6");
    std::vector<CMOrderDescriptor> out;
    std::vector<CMField> fields{CMField::K1, CMField::K3};
    if (fu.norm_sign == 1) fields.push_back(CMField::Ke);
    Int hd = class_number_real(d);
    for (CMField k : fields) {
        KField K{d, field_m(k, fu)};
        Lattice R = minimal_order(K, k);
        Lattice OK = maximal_order(K, R);
        IdealF f0 = conductor_of(K, OK, R);
        int w_OK = cm_units(K, OK, fu).w;
        auto divs = f0.divisors();
        std::sort(divs.begin(), divs.end(), [](const IdealF& a, const IdealF& b) {
            return a.norm() != b.norm() ? a.norm() < b.norm() : a.str() < b.str();
        });
        for (auto& f : divs) {
            Lattice B = order_with_conductor(K, OK, f);
            CMUnits U = cm_units(K, B, fu);
            if (k == CMField::Ke && fu.three_eps_square && U.w % 3 == 0) continue;  // already in the F(sqrt-3) list
            if (U.w <= 1) throw ConsistencyError("CM order without extra units");
            CMOrderDescriptor D;
            D.field = k;
            D.conductor = f;
            D.w = U.w;
            if (k == CMField::K1) D.hasse_Q = w_OK / 2;
            else if (k == CMField::K3) D.hasse_Q = w_OK / 3;
            else D.hasse_Q = w_OK;
            auto [ua, ub] = K.elem(U.gen);
            D.gen_t = ua * Rat(2);
            D.gen_n = K.norm(U.gen);
            D.h_K = class_number_K(k, fu);
            D.h_B = class_number_B(k, f, U.w, w_OK, fu);
            D.name = cm_field_name(k) + " f=" + f.str();
            D.spec.m = K.m;
            D.spec.ua = ua;
            D.spec.ub = ub;
            for (auto& v : B.basis()) D.spec.zbasis.push_back(K.elem(v));
            out.push_back(std::move(D));
        }

        // closed forms from the tables
        auto find = [&](int nf) -> const CMOrderDescriptor* {
            for (auto& D : out)
                if (D.field == k && D.conductor.norm() == nf) return &D;
            return nullptr;
        };
        auto expect = [&](int nf, int w, const Rat& h) {
            auto* D = find(nf);
            if (!D || D->w != w || Rat(D->h_B) != h)
                throw ConsistencyError("CM table mismatch for " + cm_field_name(k) + " at d=" + d.get_str() +
                                       " conductor norm " + std::to_string(nf));
        };
        Rat H = Rat(hd);
        if (k == CMField::K1) {
            int Q = fu.two_eps_square ? 2 : 1;
            if (w_OK != 2 * Q && mod(d, 4) != 1) throw ConsistencyError("Hasse index mismatch for F(sqrt-1)");
            Rat hm = Rat(class_number_field(-d));
            int chi2 = kronecker(fundamental_disc(-d), 2);
            Int r4 = mod(d, 4);
            std::size_t count = std::count_if(out.begin(), out.end(), [&](auto& D) { return D.field == k; });
            if (r4 == 1) {
                expect(1, 2, hm * H / 2);
                if (count != 1) throw ConsistencyError("F(sqrt-1) order count");
            } else if (r4 == 2) {
                expect(1, 2 * Q, Rat(Q) * hm * H / 2);
                expect(2, 2, hm * H);
                if (count != 2) throw ConsistencyError("F(sqrt-1) order count");
            } else {
                expect(1, 2 * Q, Rat(Q) * hm * H / 2);
                expect(2, 2 * Q, Rat(Q) * hm * Rat(2 - chi2) * H / 2);
                expect(4, 2, hm * Rat(2 - chi2) * H);
                if (count != 3) throw ConsistencyError("F(sqrt-1) order count");
            }
        } else if (k == CMField::K3) {
            int Q = fu.three_eps_square ? 2 : 1;
            if (w_OK != 3 * Q) throw ConsistencyError("Hasse index mismatch for F(sqrt-3)");
            if (mod(d, 3) != 0) {
                expect(1, 3, Rat(class_number_field(-3 * d)) * H / 2);
            } else {
                Int d3 = d / 3;
                Rat hm = Rat(class_number_field(-d3));
                int chi3 = kronecker(fundamental_disc(-d3), 3);
                expect(1, 3 * Q, Rat(Q) * hm * H / 2);
                expect(3, 3, Rat(3 - chi3) * hm * H / 2);
            }
        } else {
            IdealF two = IdealF::principal(FElem(d, 2));
            Rat hL = Rat(class_number_K(k, fu));
            Rat hd3 = fu.three_eps_square ? H * Rat(class_number_field(-d / 3)) : Rat(0);
            for (auto& D : out) {
                if (D.field != k) continue;
                Rat want = -1;
                if (D.conductor == two && f0 == two) {
                    if (fu.three_eps_square) {
                        want = Rat(2 + artin_symbol(2, d)) * hd3;
                    } else {
                        want = 4 * hL;
                        for (auto& P : primes_above(d, 2)) want *= Rat(1) - make_rat(cm_artin_symbol(k, fu, P), P.norm());
                    }
                } else if (D.conductor.norm() == 2) {
                    const PrimeIdealF& P = D.conductor.factors().begin()->first;
                    want = fu.three_eps_square ? hd3 : Rat(2 - cm_artin_symbol(k, fu, P)) * hL;
                }
                if (want >= 0 && Rat(D.h_B) != want)
                    throw ConsistencyError("class number mismatch for " + D.name + " at d=" + d.get_str());
            }
        }
    }
    return out;
}

std::string cmorders_json(const FundUnitData& fu, const std::vector<CMOrderDescriptor>& Bs) {
    nlohmann::json j;
    j["d"] = fu.d.get_str();
    j["eps"] = fu.eps.str();
    nlohmann::json arr = nlohmann::json::array();
    for (auto& B : Bs) {
        arr.push_back({{"name", B.name},
                       {"field", cm_field_name(B.field)},
                       {"conductor", B.conductor.str()},
                       {"w", B.w},
                       {"hasse_Q", B.hasse_Q},
                       {"minpoly", {{"t", B.gen_t.str()}, {"n", B.gen_n.str()}}},
                       {"h_K", B.h_K.get_str()},
                       {"h_B", B.h_B.get_str()}});
    }
    j["orders"] = arr;
    return j.dump(2);
}

}  // namespace quatrefine
