#include "quatrefine/quadfield.hpp"

#include <sstream>

namespace quatrefine {

namespace {

bool d_is_1mod4(const Int& d) { return mod(d, 4) == 1; }

// Minimal polynomial x^2 - t x - c of omega.
void omega_minpoly(const Int& d, Int& t, Int& c) {
    if (d_is_1mod4(d)) {
        t = 1;
        c = (d - 1) / 4;
    } else {
        t = 0;
        c = d;
    }
}

// Common-denominator integer form: x = (U + V omega) / n.
void omega_int(const FElem& x, Int& U, Int& V, Int& n) {
    auto [u, v] = x.omega_coords();
    n = lcm(u.get_den(), v.get_den());
    U = u.get_num() * (n / u.get_den());
    V = v.get_num() * (n / v.get_den());
}

}  // namespace

FElem FElem::from_omega(const Int& d, const Rat& u, const Rat& v) {
    if (d_is_1mod4(d)) return FElem(d, u + v / 2, v / 2);
    return FElem(d, u, v);
}

FElem FElem::omega(const Int& d) { return from_omega(d, 0, 1); }

std::pair<Rat, Rat> FElem::omega_coords() const {
    if (d_is_1mod4(d_)) return {x_ - y_, 2 * y_};
    return {x_, y_};
}

FElem FElem::operator/(const FElem& o) const {
    Rat n = o.norm();
    if (n == 0) throw std::domain_error("division by zero in F");
    FElem q = *this * o.conj();
    return FElem(d_, q.x_ / n, q.y_ / n);
}

bool FElem::is_integral() const {
    auto [u, v] = omega_coords();
    return u.get_den() == 1 && v.get_den() == 1;
}

FElem FElem::pow(unsigned e) const {
    FElem r(d_, 1, 0), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

int FElem::sign() const {
    // sign of x + y sqrt d
    int sx = sgn(x_), sy = sgn(y_);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    Rat lhs = x_ * x_, rhs = y_ * y_ * d_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sx : sy;
}

std::string FElem::str() const {
    std::ostringstream os;
    if (y_ == 0) return to_string(x_);
    Int den = lcm(x_.get_den(), y_.get_den());
    Int X = x_.get_num() * (den / x_.get_den());
    Int Y = y_.get_num() * (den / y_.get_den());
    std::string s;
    if (X != 0) s = X.get_str();
    if (Y < 0)
        s += "-";
    else if (X != 0)
        s += "+";
    Int ay = abs(Y);
    if (ay != 1) s += ay.get_str() + "*";
    s += "sqrt(" + d_.get_str() + ")";
    if (den != 1) s = "(" + s + ")/" + den.get_str();
    return s;
}

std::optional<FElem> is_square_in_F(const FElem& x) {
    if (x.is_zero()) throw std::domain_error("is_square_in_F(0)");
    const Int& d = x.d();
    Rat r;
    if (x.y() == 0) {
        if (rat_sqrt(x.x(), r)) return FElem(d, r, 0);
        if (rat_sqrt(x.x() / d, r)) return FElem(d, 0, r);
        return std::nullopt;
    }
    // (u + v sqrt d)^2 = X + Y sqrt d: u^2 + d v^2 = X, 2uv = Y.
    Rat disc;
    if (!rat_sqrt(x.norm(), disc)) return std::nullopt;
    for (int s : {1, -1}) {
        Rat u2 = (x.x() + s * disc) / 2;
        Rat u;
        if (u2 == 0 || !rat_sqrt(u2, u)) continue;
        FElem y(d, u, x.y() / (2 * u));
        if (y * y == x) return y;
    }
    return std::nullopt;
}

Int field_disc(const Int& d) { return d_is_1mod4(d) ? d : 4 * d; }

int artin_symbol(const Int& p, const Int& d) { return kronecker(field_disc(d), p); }

FundUnitData fundamental_unit(const Int& d) {
    if (d < 2 || !is_squarefree(d)) throw ValidationError("d must be a square-free integer >= 2, got " + d.get_str());
    const Int s = isqrt(d);
    const bool one4 = d_is_1mod4(d);
    const FElem w = FElem::omega(d);
    Int P = one4 ? 1 : 0, Q = one4 ? 2 : 1;
    Int p2 = 0, p1 = 1, q2 = 1, q1 = 0;
    for (long iter = 0; iter < 10000000; ++iter) {
        Int a = Q > 0 ? floor_div(P + s, Q) : -(floor_div(P + s, -Q) + 1);
        Int p = a * p1 + p2, q = a * q1 + q2;
        FElem small = FElem(d, p) - w * Rat(q);
        Rat n = small.norm();
        if (n == 1 || n == -1) {
            FundUnitData fu;
            fu.d = d;
            fu.eps = FElem(d, p) - w.conj() * Rat(q);
            if (fu.eps.sign() < 0) fu.eps = -fu.eps;
            fu.norm_sign = fu.eps.norm() == 1 ? 1 : -1;
            if (fu.eps.x().get_den() == 1 && fu.eps.y().get_den() == 1) {
                fu.a = fu.eps.x().get_num();
                fu.b = fu.eps.y().get_num();
                fu.half = false;
            } else {
                fu.a = Rat(2 * fu.eps.x()).get_num();
                fu.b = Rat(2 * fu.eps.y()).get_num();
                fu.half = true;
            }
            fu.theta = is_square_in_F(fu.eps / FElem(d, 2));
            fu.sigma = is_square_in_F(fu.eps / FElem(d, 3));
            fu.two_eps_square = fu.theta.has_value();
            fu.three_eps_square = fu.sigma.has_value();
            fu.S.push_back(FElem(d, 1));
            if (fu.norm_sign == 1) fu.S.push_back(fu.eps);
            return fu;
        }
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
        Int Pn = a * Q - P;
        Int Qn = (d - Pn * Pn) / Q;
        P = Pn;
        Q = Qn;
    }
    throw ConsistencyError("continued fraction did not reach a unit for d=" + d.get_str());
}

std::string PrimeIdealF::name() const {
    if (kind == PrimeKind::split) return "P" + p.get_str() + "[" + r.get_str() + "]";
    return "P" + p.get_str();
}

std::vector<PrimeIdealF> primes_above(const Int& d, const Int& p) {
    if (!is_prime(p)) throw ValidationError("not a prime: " + p.get_str());
    if (p > 10000000) throw ValidationError("prime too large for residue search: " + p.get_str());
    Int t, c;
    omega_minpoly(d, t, c);
    std::vector<Int> roots;
    for (Int r = 0; r < p; ++r)
        if (mod(r * r - t * r - c, p) == 0) roots.push_back(r);
    std::vector<PrimeIdealF> out;
    if (roots.empty()) {
        out.push_back({d, p, PrimeKind::inert, 0, 2});
    } else if (roots.size() == 1) {
        out.push_back({d, p, PrimeKind::ramified, roots[0], 1});
    } else {
        // p = 2 with d = 1 mod 8, or odd p with a simple root pair
        Int disc = t * t + 4 * c;
        if (p != 2 && mod(disc, p) == 0) {
            out.push_back({d, p, PrimeKind::ramified, roots[0], 1});
        } else {
            for (auto& r : roots) out.push_back({d, p, PrimeKind::split, r, 1});
        }
    }
    return out;
}

std::vector<FElem> prime_zbasis(const PrimeIdealF& P) {
    const Int& d = P.d;
    if (P.kind == PrimeKind::inert) return {FElem(d, P.p), FElem::omega(d) * Rat(P.p)};
    return {FElem(d, P.p), FElem::omega(d) - FElem(d, P.r)};
}

Int lift_root(const PrimeIdealF& P, int k) {
    Int t, c;
    omega_minpoly(P.d, t, c);
    Int pk = pow_int(P.p, k);
    Int r = P.r;
    if (P.kind != PrimeKind::split) return mod(r, pk);
    for (int prec = 1; prec < 2 * k + 2; prec *= 2) {
        Int f = r * r - t * r - c;
        Int fp = 2 * r - t;
        r = mod(r - f * inv_mod(fp, pk), pk);
    }
    if (mod(r * r - t * r - c, pk) != 0) throw ConsistencyError("Hensel lift failed");
    return r;
}

int valuation(const FElem& x, const PrimeIdealF& P) {
    if (x.is_zero()) throw std::domain_error("valuation of 0");
    if (P.kind == PrimeKind::inert) return valuation(x.norm(), P.p) / 2;
    if (P.kind == PrimeKind::ramified) return valuation(x.norm(), P.p);
    Int U, V, n;
    omega_int(x, U, V, n);
    FElem num = FElem::from_omega(P.d, U, V);
    int vN = valuation(num.norm(), P.p);
    int K = vN + 1;
    Int pk = pow_int(P.p, K);
    Int z = mod(U + V * lift_root(P, K), pk);
    int v1 = (z == 0) ? K : valuation(z, P.p);
    return v1 - valuation(n, P.p);
}

Int residue_mod(const FElem& x, const PrimeIdealF& P, int k) {
    if (P.kind == PrimeKind::inert) throw std::logic_error("residue_mod needs a degree-one prime");
    if (P.kind == PrimeKind::ramified) {
        if (k != 1 || P.p == 2) throw std::logic_error("ramified residue only mod an odd p");
        return rat_mod(x.x(), P.p);
    }
    Int U, V, n;
    omega_int(x, U, V, n);
    int e = valuation(n, P.p);
    int K = k + e;
    Int pK = pow_int(P.p, K);
    Int z = mod(U + V * lift_root(P, K), pK);
    Int pe = pow_int(P.p, e);
    if (z % pe != 0) throw std::logic_error("residue_mod: element is not a P-unit");
    Int pk = pow_int(P.p, k);
    Int unit = (z / pe);
    Int nn = n / pe;
    Int res = mod(unit * inv_mod(nn, pk), pk);
    if (res % P.p == 0) throw std::logic_error("residue_mod: element is not a P-unit");
    return res;
}

int residue_legendre(const FElem& x, const PrimeIdealF& P) {
    if (P.p == 2) throw std::logic_error("residue_legendre at a dyadic prime");
    if (P.kind == PrimeKind::inert) return kronecker(rat_mod(x.norm(), P.p), P.p);
    return kronecker(residue_mod(x, P, 1), P.p);
}

FElem uniformizer(const PrimeIdealF& P) {
    const Int& d = P.d;
    if (P.kind != PrimeKind::ramified) return FElem(d, P.p);
    if (P.p != 2 || mod(d, 4) == 2) return FElem::sqrt_d(d);
    return FElem(d, 1, 1);
}

IdealF IdealF::prime(const PrimeIdealF& P, int e) {
    IdealF I(P.d);
    I.set(P, e);
    return I;
}

IdealF IdealF::principal(const FElem& x) {
    IdealF I(x.d());
    Rat n = x.norm();
    std::vector<Int> ps = prime_divisors(n.get_num());
    for (auto& q : prime_divisors(n.get_den())) ps.push_back(q);
    for (auto& p : ps)
        for (auto& P : primes_above(x.d(), p)) I.set(P, valuation(x, P));
    return I;
}

void IdealF::set(const PrimeIdealF& P, int e) {
    if (e == 0)
        f_.erase(P);
    else
        f_[P] = e;
}

int IdealF::exponent(const PrimeIdealF& P) const {
    auto it = f_.find(P);
    return it == f_.end() ? 0 : it->second;
}

IdealF IdealF::operator*(const IdealF& o) const {
    IdealF r = *this;
    for (auto& [P, e] : o.f_) r.set(P, r.exponent(P) + e);
    return r;
}

IdealF IdealF::pow(int e) const {
    IdealF r(d_);
    for (auto& [P, x] : f_) r.set(P, x * e);
    return r;
}

bool IdealF::divides(const IdealF& o) const {
    for (auto& [P, e] : f_)
        if (o.exponent(P) < e) return false;
    return true;
}

Rat IdealF::norm() const {
    Rat n = 1;
    for (auto& [P, e] : f_) {
        Int N = P.norm();
        if (e > 0)
            n *= pow_int(N, e);
        else
            n /= pow_int(N, -e);
    }
    return n;
}

std::string IdealF::str() const {
    if (f_.empty()) return "(1)";
    std::string s;
    for (auto& [P, e] : f_) {
        if (!s.empty()) s += "*";
        s += P.name();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::vector<IdealF> IdealF::divisors() const {
    std::vector<IdealF> out{IdealF(d_)};
    for (auto& [P, e] : f_) {
        if (e < 0) throw std::logic_error("divisors of a non-integral ideal");
        std::vector<IdealF> next;
        for (auto& I : out)
            for (int k = 0; k <= e; ++k) {
                IdealF J = I;
                J.set(P, k);
                next.push_back(J);
            }
        out = std::move(next);
    }
    return out;
}

namespace {

// Two-dimensional HNF of integer pairs; returns the basis rows.
std::vector<std::pair<Int, Int>> hnf2(std::vector<std::pair<Int, Int>> g) {
    Int a = 0, b = 0, c = 0;  // rows (a, b), (0, c)
    for (auto& [u, v] : g) {
        // insert (u, v)
        if (u != 0) {
            if (a == 0) {
                a = u;
                b = v;
                if (a < 0) {
                    a = -a;
                    b = -b;
                }
                continue;
            }
            Int x, y;
            Int gg = gcdext(a, u, x, y);
            Int A = a / gg, U = u / gg;
            Int nb = x * b + y * v;
            Int rest = -U * b + A * v;
            a = gg;
            b = nb;
            v = rest;
        }
        c = gcd(c, v);
    }
    if (c != 0) b = mod(b, c);
    return {{a, b}, {0, c}};
}

}  // namespace

std::vector<FElem> IdealF::zbasis() const {
    std::vector<std::pair<Int, Int>> cur{{1, 0}, {0, 1}};
    for (auto& [P, e] : f_) {
        if (e < 0) throw std::logic_error("zbasis of a non-integral ideal");
        for (int k = 0; k < e; ++k) {
            std::vector<std::pair<Int, Int>> prod;
            for (auto& [u, v] : cur)
                for (auto& g : prime_zbasis(P)) {
                    FElem z = FElem::from_omega(d_, u, v) * g;
                    auto [zu, zv] = z.omega_coords();
                    prod.emplace_back(zu.get_num(), zv.get_num());
                }
            cur = hnf2(prod);
        }
    }
    std::vector<FElem> out;
    for (auto& [u, v] : cur) out.push_back(FElem::from_omega(d_, u, v));
    return out;
}

int eps_sign_mod3(const FundUnitData& fu) {
    Int r = mod(fu.d, 3);
    if (r == 2) return 0;
    if (r == 0) {
        Int x = rat_mod(fu.eps.x(), 3);
        return x == 1 ? 1 : (x == 2 ? -1 : 0);
    }
    auto [u, v] = fu.eps.omega_coords();
    if (mod(v.get_num(), 3) != 0) return 0;
    Int x = mod(u.get_num(), 3);
    return x == 1 ? 1 : (x == 2 ? -1 : 0);
}

std::string residue_conditions(const FundUnitData& fu, Modulus m) {
    if (fu.d < 6) throw ValidationError("case tables need d >= 6 (small d is handled by the prime table)");
    switch (m) {
        case Modulus::parity_a:
            return mod(fu.a, 2) == 0 ? "a even" : "a odd";
        case Modulus::a_mod4:
            return "a=" + mod(fu.a, 4).get_str() + " mod 4";
        case Modulus::b_mod4:
            return "b=" + mod(fu.b, 4).get_str() + " mod 4";
        case Modulus::eps_mod_3: {
            int s = eps_sign_mod3(fu);
            if (mod(fu.d, 3) == 2) return "d=2 mod 3";
            std::string mod_name = mod(fu.d, 3) == 0 ? "q" : "3";
            if (s == 0) return "eps not +-1 mod " + mod_name;
            return std::string("eps=") + (s > 0 ? "1" : "-1") + " mod " + mod_name;
        }
        case Modulus::d2_row: {
            if (fu.norm_sign != 1) throw ValidationError("norm of eps is -1: (-1,-eps) is not totally definite");
            Int d8 = mod(fu.d, 8), d4 = mod(fu.d, 4);
            if (d8 == 1) return mod(fu.a, 4) == 1 ? "d=1 mod 8, a=1 mod 4" : "d=1 mod 8, a=3 mod 4";
            if (d8 == 5) return "d=5 mod 8";
            if (d4 == 3 && mod(fu.a, 2) == 0) return "d=3 mod 4, a even";
            return "otherwise";
        }
        case Modulus::d3_row: {
            if (fu.norm_sign != 1) throw ValidationError("norm of eps is -1: (-eps,-3) is not totally definite");
            Int d3 = mod(fu.d, 3);
            int s = eps_sign_mod3(fu);
            if (d3 == 2) return "d=2 mod 3";
            if (s == 0) throw ConsistencyError("eps is not +-1 modulo the primes above 3");
            if (d3 == 0) return s > 0 ? "d=0 mod 3, eps=1 mod q" : "d=0 mod 3, eps=-1 mod q";
            return s > 0 ? "d=1 mod 3, eps=1 mod 3" : "d=1 mod 3, eps=-1 mod 3";
        }
    }
    throw ValidationError("unsupported modulus");
}

}  // namespace quatrefine
