#include "quatrefine/orders.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace quatrefine {

namespace {

struct GroupInfo {
    GroupTag tag;
    const char* name;
    const char* abstract;
    int order;
    bool cyclic;
};

const GroupInfo kGroups[] = {
    {GroupTag::C1, "C1", "C1", 1, true},       {GroupTag::C2, "C2", "C2", 2, true},
    {GroupTag::C3, "C3", "C3", 3, true},       {GroupTag::C4, "C4", "C4", 4, true},
    {GroupTag::C5, "C5", "C5", 5, true},       {GroupTag::C6, "C6", "C6", 6, true},
    {GroupTag::C12, "C12", "C12", 12, true},   {GroupTag::D2dag, "D2dag", "D2", 4, false},
    {GroupTag::D2ddag, "D2ddag", "D2", 4, false}, {GroupTag::D3dag, "D3dag", "D3", 6, false},
    {GroupTag::D3ddag, "D3ddag", "D3", 6, false}, {GroupTag::D4, "D4", "D4", 8, false},
    {GroupTag::D5, "D5", "D5", 10, false},     {GroupTag::D6, "D6", "D6", 12, false},
    {GroupTag::D12, "D12", "D12", 24, false},  {GroupTag::A4, "A4", "A4", 12, false},
    {GroupTag::S4, "S4", "S4", 24, false},     {GroupTag::A5, "A5", "A5", 60, false},
};

const GroupInfo& info(GroupTag g) {
    for (auto& i : kGroups)
        if (i.tag == g) return i;
    throw std::logic_error("unknown group tag");
}

}  // namespace

std::string group_name(GroupTag g) { return info(g).name; }
std::string group_abstract_name(GroupTag g) { return info(g).abstract; }
int group_order(GroupTag g) { return info(g).order; }
bool group_cyclic(GroupTag g) { return info(g).cyclic; }

GroupTag parse_group(const std::string& s) {
    for (auto& i : kGroups)
        if (s == i.name) return i.tag;
    throw ValidationError("unknown group '" + s + "'");
}

const std::vector<GroupTag>& all_groups() {
    static const std::vector<GroupTag> v = [] {
        std::vector<GroupTag> out;
        for (auto& i : kGroups) out.push_back(i.tag);
        return out;
    }();
    return v;
}

Lattice lattice_from_elems(const std::vector<QElem>& gens) {
    std::vector<QVec> vs;
    for (auto& g : gens) vs.push_back(to_qvec(g));
    return Lattice::from_gens(8, vs);
}

Lattice of_span(const std::vector<QElem>& gens) {
    if (gens.empty()) return Lattice(8);
    FElem w = FElem::omega(gens[0].d());
    std::vector<QVec> vs;
    for (auto& g : gens) {
        vs.push_back(to_qvec(g));
        vs.push_back(to_qvec(g * w));
    }
    return Lattice::from_gens(8, vs);
}

std::vector<QElem> lattice_elems(const Int& d, const Lattice& L) {
    std::vector<QElem> out;
    for (auto& v : L.basis()) out.push_back(from_qvec(d, v));
    return out;
}

namespace {

// Structure constants of H on the Z-basis 1, w, i, wi, j, wj, k, wk.
struct MulTable {
    Int d;
    std::string a, b;
    std::vector<std::pair<int, Rat>> e[8][8];
};

const MulTable& mul_table(const QuatAlgebra& H) {
    thread_local std::vector<MulTable> cache;
    std::string a = H.a.str(), b = H.b.str();
    for (auto& t : cache)
        if (t.d == H.d && t.a == a && t.b == b) return t;
    if (cache.size() > 16) cache.clear();
    MulTable t{H.d, a, b, {}};
    for (int s = 0; s < 8; ++s)
        for (int u = 0; u < 8; ++u) {
            QVec x(8), y(8);
            x[s] = 1;
            y[u] = 1;
            QVec z = to_qvec(qmul(H, from_qvec(H.d, x), from_qvec(H.d, y)));
            for (int k = 0; k < 8; ++k)
                if (z[k] != 0) t.e[s][u].emplace_back(k, z[k]);
        }
    cache.push_back(std::move(t));
    return cache.back();
}

}  // namespace

QVec qmul_vec(const QuatAlgebra& H, const QVec& x, const QVec& y) {
    const MulTable& t = mul_table(H);
    QVec z(8);
    Rat c;
    for (int s = 0; s < 8; ++s) {
        if (x[s] == 0) continue;
        for (int u = 0; u < 8; ++u) {
            if (y[u] == 0) continue;
            c = x[s] * y[u];
            for (auto& [k, v] : t.e[s][u]) z[k] += c * v;
        }
    }
    return z;
}

namespace {

Lattice scale_lattice(const Lattice& L, const FElem& c) {
    std::vector<QVec> vs;
    for (auto& v : L.basis()) vs.push_back(to_qvec(from_qvec(c.d(), v) * c));
    return Lattice::from_gens(8, vs);
}

bool contains_of(const Lattice& L, const Int& d) {
    return L.contains(to_qvec(qone(d))) && L.contains(to_qvec(qone(d) * FElem::omega(d)));
}

// Gram matrix of Tr_{F/Q} Trd(x y) on the standard Q-basis.
QMat trace_gram(const QuatAlgebra& H) {
    std::vector<QElem> E;
    for (int t = 0; t < 8; ++t) {
        QVec v(8);
        v[t] = 1;
        E.push_back(from_qvec(H.d, v));
    }
    QMat G(8, QVec(8));
    for (int s = 0; s < 8; ++s)
        for (int t = s; t < 8; ++t) {
            FElem trd = qmul(H, E[s], E[t]).trd();
            G[s][t] = G[t][s] = trd.trace();
        }
    return G;
}

FElem different_generator(const Int& d) {
    return mod(d, 4) == 1 ? FElem::sqrt_d(d) : FElem(d, 0, 2);
}

}  // namespace

bool is_order(const QuatAlgebra& H, const Lattice& L) {
    if (!L.full_rank() || !contains_of(L, H.d)) return false;
    auto B = L.basis();
    for (auto& x : B)
        for (auto& y : B)
            if (!L.contains(qmul_vec(H, x, y))) return false;
    return true;
}

std::optional<Lattice> order_closure(const QuatAlgebra& H, const Lattice& L0, const Lattice* bound) {
    std::vector<QVec> gens = L0.basis();
    gens.push_back(to_qvec(qone(H.d)));
    gens.push_back(to_qvec(qone(H.d) * FElem::omega(H.d)));
    Lattice L = Lattice::from_gens(8, gens);
    while (true) {
        if (bound && !bound->contains(L)) return std::nullopt;
        auto B = L.basis();
        std::vector<QVec> more = B;
        bool grew = false;
        for (auto& x : B)
            for (auto& y : B) {
                QVec z = qmul_vec(H, x, y);
                if (!L.contains(z)) {
                    more.push_back(std::move(z));
                    grew = true;
                }
            }
        if (!grew) return L;
        L = Lattice::from_gens(8, more);
    }
}

Lattice dual_lattice(const QuatAlgebra& H, const Lattice& L) {
    QMat Ginv = mat_inverse(trace_gram(H));
    std::vector<QVec> vs;
    for (auto& v : L.standard_dual().basis()) {
        QVec w(8);
        for (int s = 0; s < 8; ++s)
            for (int t = 0; t < 8; ++t) w[s] += Ginv[s][t] * v[t];
        vs.push_back(std::move(w));
    }
    return scale_lattice(Lattice::from_gens(8, vs), different_generator(H.d));
}

IdealF discriminant(const QuatAlgebra& H, const Lattice& L) {
    Lattice D = dual_lattice(H, L);
    if (!D.contains(L)) throw ConsistencyError("lattice is not integral");
    Int idx = D.index_of(L);
    IdealF out(H.d);
    for (auto& [p, e] : factor(idx)) {
        for (auto& P : primes_above(H.d, p)) {
            Int part;
            if (P.kind == PrimeKind::split) {
                int k = e + 1;
                Int pk = pow_int(p, k);
                FElem pi = FElem::omega(H.d) - FElem(H.d, Rat(lift_root(P, k)));
                Lattice M = L + D.scaled(Rat(pk)) + scale_lattice(D, pi);
                part = D.index_of(M);
            } else {
                part = pow_int(p, e);
            }
            int v = valuation(part, p);
            if (v % (2 * P.f) != 0) throw ConsistencyError("discriminant is not a square at " + P.name());
            if (v) out.set(P, v / (2 * P.f));
        }
    }
    return out;
}

QuatOrder order_from_lattice(const QuatAlgebra& H, const Lattice& L) {
    if (!is_order(H, L)) throw ConsistencyError("lattice is not an order");
    return QuatOrder{H, L, discriminant(H, L)};
}

QuatOrder make_order(const QuatAlgebra& H, const std::vector<QElem>& basis) {
    if (basis.size() != 4) throw ValidationError("an order needs four O_F-basis elements");
    Lattice L = of_span(basis);
    if (!L.full_rank()) throw ValidationError("basis does not span H");
    if (!contains_of(L, H.d)) throw ConsistencyError("not an order: 1 is missing");
    for (auto& x : L.basis())
        for (auto& y : L.basis())
            if (!L.contains(qmul_vec(H, x, y)))
                throw ConsistencyError("not an order: product " + from_qvec(H.d, qmul_vec(H, x, y)).str() + " escapes");
    return QuatOrder{H, L, discriminant(H, L)};
}

bool is_maximal(const QuatOrder& O) { return O.disc == ramification(O.alg).disc_H; }

Lattice conjugate_lattice(const QuatAlgebra& H, const QElem& x, const Lattice& L) {
    QElem xi = qinv(H, x);
    std::vector<QVec> vs;
    for (auto& v : L.basis()) vs.push_back(to_qvec(qmul(H, qmul(H, x, from_qvec(H.d, v)), xi)));
    return Lattice::from_gens(8, vs);
}

bool normalizer_membership(const QElem& x, const QuatOrder& O) {
    return conjugate_lattice(O.alg, x, O.lat) == O.lat;
}

// ---- unit groups ----

namespace {

// Canonical sign: first nonzero coordinate positive.
QVec sign_normal(QVec v) {
    for (auto& c : v) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& e : v) e = -e;
        break;
    }
    return v;
}

std::string vkey(const QVec& v) {
    std::string s;
    for (auto& c : v) s += c.get_str() + ",";
    return s;
}

std::vector<QElem> units_of_norm(const QuatOrder& O, const FElem& n, std::uint64_t budget) {
    const QuatAlgebra& H = O.alg;
    auto B = lattice_elems(H.d, O.lat);
    FElem ninv = FElem(H.d, 1) / n;
    QMat G(8, QVec(8));
    for (int s = 0; s < 8; ++s)
        for (int t = s; t < 8; ++t) {
            FElem v = qmul(H, B[s], B[t].conj()).trd() * ninv;
            G[s][t] = G[t][s] = v.trace() / 2;
        }
    std::vector<QElem> out;
    for (auto& x : short_vectors(G, Rat(2), budget)) {
        QElem u(H.d);
        for (int s = 0; s < 8; ++s)
            if (x[s] != 0) u = u + B[s] * Rat(x[s]);
        if (qnrd(H, u) == n) out.push_back(u);
    }
    return out;
}

}  // namespace

UnitGroup unit_group(const QuatOrder& O, const FundUnitData& fu) {
    return unit_group(O, fu, env_budget(10000000));
}

UnitGroup unit_group(const QuatOrder& O, const FundUnitData& fu, std::uint64_t budget) {
    const QuatAlgebra& H = O.alg;
    if (!H.totally_definite()) throw ValidationError("unit groups need a totally definite algebra");
    UnitGroup U;
    for (auto& n : fu.S)
        for (auto& u : units_of_norm(O, n, budget)) U.units.push_back(u);

    std::map<std::string, int> index;
    std::vector<QVec> classes;
    std::vector<bool> norm_eps;
    for (auto& u : U.units) {
        QVec v = sign_normal(to_qvec(u));
        std::string k = vkey(v);
        if (index.count(k)) continue;
        index[k] = int(classes.size());
        classes.push_back(v);
        norm_eps.push_back(!qnrd(H, u).is_rational() || qnrd(H, u) != FElem(H.d, 1));
    }
    int n = int(classes.size());
    if (n == 0 || int(U.units.size()) != 2 * n) throw ConsistencyError("unit enumeration is inconsistent");
    for (auto& v : classes) U.reps.push_back(from_qvec(H.d, v));

    int id = index.at(vkey(sign_normal(to_qvec(qone(H.d)))));
    FElem eps_inv = FElem(H.d, 1) / fu.eps;
    auto mul = [&](int a, int b) {
        QElem w = qmul(H, U.reps[a], U.reps[b]);
        if (norm_eps[a] && norm_eps[b]) w = w * eps_inv;
        auto it = index.find(vkey(sign_normal(to_qvec(w))));
        if (it == index.end()) throw ConsistencyError("unit classes are not closed under multiplication");
        return it->second;
    };
    std::vector<int> ord(n);
    int maxord = 1;
    for (int a = 0; a < n; ++a) {
        int k = 1, x = a;
        while (x != id) {
            x = mul(x, a);
            if (++k > n + 1) throw ConsistencyError("unit of infinite order");
        }
        ord[a] = k;
        maxord = std::max(maxord, k);
    }
    bool second_kind = false;
    for (int a = 0; a < n; ++a)
        if (ord[a] == 2 && norm_eps[a]) second_kind = true;

    U.order = n;
    auto cyc = [&](int m) {
        switch (m) {
            case 1: return GroupTag::C1;
            case 2: return GroupTag::C2;
            case 3: return GroupTag::C3;
            case 4: return GroupTag::C4;
            case 5: return GroupTag::C5;
            case 6: return GroupTag::C6;
            case 12: return GroupTag::C12;
        }
        throw ConsistencyError("unexpected cyclic unit group of order " + std::to_string(m));
    };
    if (maxord == n) {
        U.tag = cyc(n);
    } else if (2 * maxord == n) {
        switch (maxord) {
            case 2: U.tag = second_kind ? GroupTag::D2ddag : GroupTag::D2dag; break;
            case 3: U.tag = second_kind ? GroupTag::D3ddag : GroupTag::D3dag; break;
            case 4: U.tag = GroupTag::D4; break;
            case 5: U.tag = GroupTag::D5; break;
            case 6: U.tag = GroupTag::D6; break;
            case 12: U.tag = GroupTag::D12; break;
            default: throw ConsistencyError("unexpected dihedral unit group");
        }
    } else if (n == 12) {
        U.tag = GroupTag::A4;
    } else if (n == 24) {
        U.tag = GroupTag::S4;
    } else if (n == 60) {
        U.tag = GroupTag::A5;
    } else {
        throw ConsistencyError("unclassified unit group of order " + std::to_string(n));
    }
    return U;
}

// ---- overorders ----

std::vector<QuatOrder> maximal_overorders(const QuatOrder& O, const RamificationData& R) {
    const QuatAlgebra& H = O.alg;
    std::uint64_t budget = env_budget(1u << 24);
    std::set<std::string> seen{O.lat.key()};
    std::deque<Lattice> queue{O.lat};
    std::map<std::string, QuatOrder> maximal;
    std::set<std::string> tried;
    FElem w = FElem::omega(H.d);
    while (!queue.empty()) {
        Lattice S = queue.front();
        queue.pop_front();
        IdealF disc = discriminant(H, S);
        if (disc == R.disc_H) {
            maximal.emplace(S.key(), QuatOrder{H, S, disc});
            continue;
        }
        Lattice Sd = dual_lattice(H, S);
        Int idx = Sd.index_of(S);
        for (auto& p : prime_divisors(idx)) {
            Lattice sub = Sd.intersect(S.scaled(make_rat(1, p)));
            for (auto& x : sub.coset_reps(S)) {
                if (std::all_of(x.begin(), x.end(), [](const Rat& c) { return c == 0; })) continue;
                QElem xe = from_qvec(H.d, x);
                std::vector<QVec> gens = S.basis();
                gens.push_back(x);
                gens.push_back(to_qvec(xe * w));
                Lattice span = Lattice::from_gens(8, gens);
                if (!tried.insert(span.key()).second) continue;
                auto C = order_closure(H, span, &Sd);
                if (!C) continue;
                if (seen.insert(C->key()).second) {
                    if (seen.size() > budget) throw BudgetExceeded("overorder enumeration exceeded its budget");
                    queue.push_back(*C);
                }
            }
        }
    }
    std::vector<QuatOrder> out;
    for (auto& [k, v] : maximal) out.push_back(v);
    return out;
}

std::vector<int> conjugation_orbits(const QuatAlgebra& H, const std::vector<QuatOrder>& orders,
                                    const std::vector<QElem>& gens, int* orbit_count) {
    int n = int(orders.size());
    std::map<std::string, int> idx;
    for (int a = 0; a < n; ++a) idx[orders[a].lat.key()] = a;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (int a = 0; a < n; ++a)
        for (auto& g : gens) {
            auto it = idx.find(conjugate_lattice(H, g, orders[a].lat).key());
            if (it == idx.end()) throw ConsistencyError("normalizer element moves an order outside the set");
            parent[find(a)] = find(it->second);
        }
    std::map<int, int> label;
    std::vector<int> out(n);
    for (int a = 0; a < n; ++a) {
        int r = find(a);
        if (!label.count(r)) {
            int next = int(label.size());
            label[r] = next;
        }
        out[a] = label[r];
    }
    if (orbit_count) *orbit_count = int(label.size());
    return out;
}

// ---- optimal embeddings ----

int optimal_embedding_count(const QuatOrder& O, const UnitGroup& U, const CMEmbeddingSpec& B) {
    const QuatAlgebra& H = O.alg;
    const Int& d = H.d;
    FElem t = B.ua * Rat(2);
    FElem n = B.ua * B.ua + B.m * B.ub * B.ub;
    FElem ubinv = FElem(d, 1) / B.ub;
    std::vector<QElem> ys;
    std::map<std::string, int> idx;
    for (auto& y : U.units) {
        if (y.trd() != t || qnrd(H, y) != n) continue;
        // image of s, then of the Z-basis of B
        QElem s = (y - qone(d) * B.ua) * ubinv;
        std::vector<QElem> img;
        for (auto& [al, be] : B.zbasis) img.push_back(qone(d) * al + s * be);
        Lattice image = lattice_from_elems(img);
        Lattice comm = kernel_sublattice(O.lat, [&](const QVec& v) {
            QElem x = from_qvec(d, v);
            return to_qvec(qmul(H, x, y) - qmul(H, y, x));
        });
        if (comm == image) {
            idx[vkey(to_qvec(y))] = int(ys.size());
            ys.push_back(y);
        }
    }
    int m = int(ys.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (int a = 0; a < m; ++a)
        for (auto& u : U.reps) {
            QElem z = qmul(H, qmul(H, u, ys[a]), qinv(H, u));
            auto it = idx.find(vkey(to_qvec(z)));
            if (it == idx.end()) throw ConsistencyError("unit conjugation left the embedding set");
            parent[find(a)] = find(it->second);
        }
    std::set<int> roots;
    for (int a = 0; a < m; ++a) roots.insert(find(a));
    return int(roots.size());
}

std::string order_json(const QuatOrder& O) {
    nlohmann::json j;
    j["algebra"] = {{"tag", O.alg.tag}, {"a", O.alg.a.str()}, {"b", O.alg.b.str()}, {"d", O.alg.d.get_str()}};
    j["denominator"] = O.lat.den().get_str();
    nlohmann::json rows = nlohmann::json::array();
    for (auto& r : O.lat.hnf()) {
        nlohmann::json row = nlohmann::json::array();
        for (auto& c : r) row.push_back(c.get_str());
        rows.push_back(row);
    }
    j["hnf"] = rows;
    j["disc"] = O.disc.str();
    return j.dump();
}

}  // namespace quatrefine
