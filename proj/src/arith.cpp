#include "quatrefine/arith.hpp"

#include <cstdlib>

namespace quatrefine {

Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0) throw ValidationError("not a rational number: '" + s + "'");
    if (r.get_den() == 0) throw ValidationError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod(const Int& a, const Int& m) {
    Int r;
    Int am = abs(m);
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
    return r;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool rat_sqrt(const Rat& q, Rat& out) {
    if (q < 0) return false;
    if (!is_square(q.get_num()) || !is_square(q.get_den())) return false;
    out = make_rat(isqrt(q.get_num()), isqrt(q.get_den()));
    return true;
}

Int floor_rat(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

Int round_rat(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

Int gcdext(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    Int am = mod(a, m);
    if (mpz_invert(r.get_mpz_t(), am.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod " + m.get_str());
    return r;
}

Int rat_mod(const Rat& q, const Int& m) {
    if (m == 1) return 0;
    return mod(q.get_num() * inv_mod(q.get_den(), m), m);
}

int kronecker(const Int& a, const Int& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

bool is_prime(const Int& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

std::vector<std::pair<Int, int>> factor(const Int& n) {
    if (n == 0) throw std::domain_error("factor(0)");
    std::vector<std::pair<Int, int>> out;
    Int m = abs(n);
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> out;
    for (auto& [p, e] : factor(n)) out.push_back(p);
    return out;
}

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (auto& [p, e] : factor(n))
        if (e > 1) return false;
    return true;
}

int valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::domain_error("valuation of 0");
    int v = 0;
    Int m = n;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

int valuation(const Rat& q, const Int& p) { return valuation(q.get_num(), p) - valuation(q.get_den(), p); }

Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Int squarefree_part(const Int& m) {
    if (m == 0) throw std::domain_error("squarefree_part(0)");
    Int r = m < 0 ? Int(-1) : Int(1);
    for (auto& [p, e] : factor(m))
        if (e % 2) r *= p;
    return r;
}

Int fundamental_disc(const Int& m) {
    Int s = squarefree_part(m);
    return mod(s, 4) == 1 ? s : 4 * s;
}

std::uint64_t env_budget(std::uint64_t fallback) {
    const char* v = std::getenv("QUATREFINE_BUDGET");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    if (!end || *end != '\0' || x == 0) return fallback;
    return x;
}

}  // namespace quatrefine
