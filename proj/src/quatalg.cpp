#include "quatrefine/quatalg.hpp"

#include <set>

namespace quatrefine {

QElem QElem::operator+(const QElem& o) const { return QElem(c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]); }
QElem QElem::operator-(const QElem& o) const { return QElem(c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]); }
QElem QElem::operator-() const { return QElem(-c[0], -c[1], -c[2], -c[3]); }
QElem QElem::operator*(const FElem& s) const { return QElem(c[0] * s, c[1] * s, c[2] * s, c[3] * s); }

bool QElem::is_zero() const {
    for (auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

std::string QElem::str() const {
    static const char* names[4] = {"", "i", "j", "k"};
    std::string s;
    for (int m = 0; m < 4; ++m) {
        if (c[m].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c[m].str() + ")" + names[m];
    }
    return s.empty() ? "0" : s;
}

QElem qmul(const QuatAlgebra& H, const QElem& x, const QElem& y) {
    const FElem& a = H.a;
    const FElem& b = H.b;
    const auto& X = x.c;
    const auto& Y = y.c;
    FElem ab = a * b;
    return QElem(X[0] * Y[0] + a * X[1] * Y[1] + b * X[2] * Y[2] - ab * X[3] * Y[3],
                 X[0] * Y[1] + X[1] * Y[0] - b * X[2] * Y[3] + b * X[3] * Y[2],
                 X[0] * Y[2] + X[2] * Y[0] + a * X[1] * Y[3] - a * X[3] * Y[1],
                 X[0] * Y[3] + X[3] * Y[0] + X[1] * Y[2] - X[2] * Y[1]);
}

FElem qnrd(const QuatAlgebra& H, const QElem& x) {
    const auto& X = x.c;
    return X[0] * X[0] - H.a * X[1] * X[1] - H.b * X[2] * X[2] + H.a * H.b * X[3] * X[3];
}

QElem qinv(const QuatAlgebra& H, const QElem& x) {
    FElem n = qnrd(H, x);
    if (n.is_zero()) throw std::domain_error("inverse of a zero divisor");
    FElem ni = FElem(x.d(), 1) / n;
    return x.conj() * ni;
}

QElem qone(const Int& d) { return QElem(FElem(d, 1), FElem(d), FElem(d), FElem(d)); }
QElem qi(const Int& d) { return QElem(FElem(d), FElem(d, 1), FElem(d), FElem(d)); }
QElem qj(const Int& d) { return QElem(FElem(d), FElem(d), FElem(d, 1), FElem(d)); }
QElem qk(const Int& d) { return QElem(FElem(d), FElem(d), FElem(d), FElem(d, 1)); }

QVec to_qvec(const QElem& x) {
    QVec v(8);
    for (int m = 0; m < 4; ++m) {
        auto [u, w] = x.c[m].omega_coords();
        v[2 * m] = u;
        v[2 * m + 1] = w;
    }
    return v;
}

QElem from_qvec(const Int& d, const QVec& v) {
    QElem x(d);
    for (int m = 0; m < 4; ++m) x.c[m] = FElem::from_omega(d, v[2 * m], v[2 * m + 1]);
    return x;
}

namespace {

FElem ipow(const FElem& x, int k) {
    if (k >= 0) return x.pow(unsigned(k));
    return FElem(x.d(), 1) / x.pow(unsigned(-k));
}

int tame_symbol(const FElem& a, const FElem& b, const PrimeIdealF& P) {
    int al = valuation(a, P), be = valuation(b, P);
    FElem pi = uniformizer(P);
    FElem u = a / ipow(pi, al);
    FElem w = b / ipow(pi, be);
    FElem c = ipow(u, be) / ipow(w, al);
    if ((al * be) % 2 != 0) c = -c;
    return residue_legendre(c, P);
}

// Q_2 symbol through the embedding F -> F_P = Q_2 (split dyadic prime).
int q2_symbol(const FElem& a, const FElem& b, const PrimeIdealF& P) {
    auto split = [&](const FElem& x, int& v, Int& u8) {
        v = valuation(x, P);
        FElem two(x.d(), 2);
        FElem u = x / ipow(two, v);
        u8 = residue_mod(u, P, 3);
    };
    int al, be;
    Int u, w;
    split(a, al, u);
    split(b, be, w);
    auto eps = [](const Int& x) { return int(mod((x - 1) / 2, 2).get_si()); };
    auto omg = [](const Int& x) { return int(mod((x * x - 1) / 8, 2).get_si()); };
    int e = eps(u) * eps(w) + al * omg(w) + be * omg(u);
    return e % 2 ? -1 : 1;
}

std::vector<Int> relevant_primes(const FElem& a, const FElem& b) {
    std::set<Int> ps{2, 3};
    for (const FElem* x : {&a, &b}) {
        Rat n = x->norm();
        for (auto& p : prime_divisors(n.get_num())) ps.insert(p);
        for (auto& p : prime_divisors(n.get_den())) ps.insert(p);
        // the coordinates' denominators can hide primes that cancel in the norm
        for (const Rat* r : {&x->x(), &x->y()})
            for (auto& p : prime_divisors(r->get_den())) ps.insert(p);
    }
    for (auto& p : prime_divisors(a.d())) ps.insert(p);
    return {ps.begin(), ps.end()};
}

}  // namespace

int hilbert_symbol_real(const FElem& a, const FElem& b, int place) {
    int sa = place == 0 ? a.sign() : a.sign_conj();
    int sb = place == 0 ? b.sign() : b.sign_conj();
    return (sa < 0 && sb < 0) ? -1 : 1;
}

int hilbert_symbol(const FElem& a, const FElem& b, const PrimeIdealF& P) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("Hilbert symbol of zero");
    if (P.p != 2) return tame_symbol(a, b, P);
    if (P.kind == PrimeKind::split) return q2_symbol(a, b, P);
    // unique dyadic prime: product formula over all other places
    int prod = hilbert_symbol_real(a, b, 0) * hilbert_symbol_real(a, b, 1);
    for (auto& p : relevant_primes(a, b)) {
        if (p == 2) continue;
        for (auto& Q : primes_above(a.d(), p)) prod *= tame_symbol(a, b, Q);
    }
    return prod;
}

int hilbert_symbol_at(const QuatAlgebra& H, const PrimeIdealF& P) { return hilbert_symbol(H.a, H.b, P); }

RamificationData ramification(const QuatAlgebra& H) {
    RamificationData R;
    R.disc_H = IdealF(H.d);
    for (auto& p : relevant_primes(H.a, H.b))
        for (auto& P : primes_above(H.d, p))
            if (hilbert_symbol_at(H, P) == -1) {
                R.finite_ramified.push_back(P);
                R.disc_H.set(P, 1);
            }
    for (int pl = 0; pl < 2; ++pl)
        if (hilbert_symbol_real(H.a, H.b, pl) == -1) R.real_ramified.push_back(pl);
    R.omega = int(R.finite_ramified.size());
    if ((R.omega + R.real_ramified.size()) % 2 != 0)
        throw ConsistencyError("odd number of ramified places for (" + H.a.str() + ", " + H.b.str() + ")");
    return R;
}

bool is_isomorphic(const QuatAlgebra& H1, const QuatAlgebra& H2) {
    if (H1.d != H2.d) return false;
    auto R1 = ramification(H1), R2 = ramification(H2);
    return R1.disc_H == R2.disc_H && R1.real_ramified == R2.real_ramified;
}

AlgTag parse_alg_tag(const std::string& s) {
    if (s == "A") return AlgTag::A;
    if (s == "B") return AlgTag::B;
    if (s == "C") return AlgTag::C;
    if (s == "D") return AlgTag::D;
    if (s == "Hinf" || s == "H" || s == "Hoo") return AlgTag::Hinf;
    throw ValidationError("unknown algebra tag '" + s + "' (expected A, B, C, D or Hinf)");
}

std::string alg_tag_name(AlgTag t) {
    switch (t) {
        case AlgTag::A: return "A";
        case AlgTag::B: return "B";
        case AlgTag::C: return "C";
        case AlgTag::D: return "D";
        case AlgTag::Hinf: return "Hinf";
    }
    return "?";
}

QuatAlgebra custom_algebra(const FElem& a, const FElem& b) {
    if (a.is_zero() || b.is_zero()) throw ValidationError("structure constants must be nonzero");
    return QuatAlgebra{a.d(), a, b, "custom"};
}

QuatAlgebra standard_algebra(AlgTag tag, const FundUnitData& fu) {
    const Int& d = fu.d;
    FElem m1(d, -1), m3(d, -3);
    switch (tag) {
        case AlgTag::A: return {d, m1, m1, "A"};
        case AlgTag::C: return {d, m1, m3, "C"};
        case AlgTag::B:
            if (fu.norm_sign != 1) throw ValidationError("algebra B = (-1,-eps) needs Nm(eps) = 1");
            return {d, m1, -fu.eps, "B"};
        case AlgTag::D:
            if (fu.norm_sign != 1) throw ValidationError("algebra D = (-eps,-3) needs Nm(eps) = 1");
            return {d, -fu.eps, m3, "D"};
        case AlgTag::Hinf: {
            for (AlgTag t : {AlgTag::A, AlgTag::B, AlgTag::C, AlgTag::D}) {
                if ((t == AlgTag::B || t == AlgTag::D) && fu.norm_sign != 1) continue;
                QuatAlgebra H = standard_algebra(t, fu);
                if (ramification(H).omega == 0) {
                    H.tag = "Hinf";
                    return H;
                }
            }
            // no table presentation: fall back to (-m, -n) with small m, n
            for (int n = 2; n < 400; ++n)
                for (int m = 1; m <= n; ++m) {
                    QuatAlgebra H{d, FElem(d, -m), FElem(d, -n), "Hinf"};
                    if (ramification(H).omega == 0) return H;
                }
            throw ConsistencyError("no presentation of H_inf found for d=" + d.get_str());
        }
    }
    throw ValidationError("unknown algebra tag");
}

}  // namespace quatrefine
