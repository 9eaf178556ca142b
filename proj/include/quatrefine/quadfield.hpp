#pragma once

#include "quatrefine/arith.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quatrefine {

// x + y*sqrt(d) with rational x, y.
class FElem {
public:
    FElem() = default;
    FElem(const Int& d, const Rat& x = 0, const Rat& y = 0) : d_(d), x_(x), y_(y) {}

    // u + v*omega, omega = (1+sqrt d)/2 if d = 1 mod 4, else sqrt d.
    static FElem from_omega(const Int& d, const Rat& u, const Rat& v);
    static FElem omega(const Int& d);
    static FElem sqrt_d(const Int& d) { return FElem(d, 0, 1); }

    const Int& d() const { return d_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }
    // Coordinates in the basis (1, omega).
    std::pair<Rat, Rat> omega_coords() const;

    FElem operator+(const FElem& o) const { return FElem(d_, x_ + o.x_, y_ + o.y_); }
    FElem operator-(const FElem& o) const { return FElem(d_, x_ - o.x_, y_ - o.y_); }
    FElem operator-() const { return FElem(d_, -x_, -y_); }
    FElem operator*(const FElem& o) const {
        return FElem(d_, x_ * o.x_ + d_ * y_ * o.y_, x_ * o.y_ + y_ * o.x_);
    }
    FElem operator*(const Rat& c) const { return FElem(d_, x_ * c, y_ * c); }
    FElem operator/(const FElem& o) const;
    FElem& operator+=(const FElem& o) { return *this = *this + o; }
    FElem& operator-=(const FElem& o) { return *this = *this - o; }
    FElem& operator*=(const FElem& o) { return *this = *this * o; }
    bool operator==(const FElem& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const FElem& o) const { return !(*this == o); }

    FElem conj() const { return FElem(d_, x_, -y_); }
    Rat norm() const { return x_ * x_ - d_ * y_ * y_; }
    Rat trace() const { return 2 * x_; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }
    bool is_integral() const;
    FElem pow(unsigned e) const;
    // Sign under sqrt d -> +sqrt d (first) and -sqrt d (second).
    int sign() const;
    int sign_conj() const { return conj().sign(); }
    bool totally_positive() const { return sign() > 0 && sign_conj() > 0; }
    bool totally_negative() const { return sign() < 0 && sign_conj() < 0; }

    std::string str() const;

private:
    Int d_ = 2;
    Rat x_, y_;
};

// y with y*y == x, when x is a square in F.
std::optional<FElem> is_square_in_F(const FElem& x);

struct FundUnitData {
    Int d;
    FElem eps;
    int norm_sign = 1;
    bool two_eps_square = false;
    bool three_eps_square = false;
    std::optional<FElem> theta;  // eps = 2 theta^2
    std::optional<FElem> sigma;  // eps = 3 sigma^2
    std::vector<FElem> S;        // totally positive units mod squares
    // eps = a + b sqrt d (half = false) or (a + b sqrt d)/2 with a, b odd.
    Int a, b;
    bool half = false;
};

FundUnitData fundamental_unit(const Int& d);

// +1 split, 0 ramified, -1 inert: Kronecker symbol of disc(F) at p.
int artin_symbol(const Int& p, const Int& d);
Int field_disc(const Int& d);

enum class PrimeKind { split, inert, ramified };

struct PrimeIdealF {
    Int d;
    Int p;
    PrimeKind kind = PrimeKind::split;
    Int r;  // root of the minimal polynomial of omega mod p (split, ramified)
    int f = 1;

    Int norm() const { return f == 1 ? p : p * p; }
    std::string name() const;
    bool operator<(const PrimeIdealF& o) const {
        if (p != o.p) return p < o.p;
        return r < o.r;
    }
    bool operator==(const PrimeIdealF& o) const { return p == o.p && r == o.r && d == o.d; }
};

std::vector<PrimeIdealF> primes_above(const Int& d, const Int& p);
// Z-basis of P inside O_F.
std::vector<FElem> prime_zbasis(const PrimeIdealF& P);
int valuation(const FElem& x, const PrimeIdealF& P);
// Root of the minimal polynomial of omega mod p^k lifting P.r (split or odd ramified).
Int lift_root(const PrimeIdealF& P, int k);
// Image in Z/p^k of a P-unit for f = 1 primes.
Int residue_mod(const FElem& x, const PrimeIdealF& P, int k);
// Quadratic character of the residue of a P-unit, P odd.
int residue_legendre(const FElem& x, const PrimeIdealF& P);
// Uniformiser used by the tame symbol.
FElem uniformizer(const PrimeIdealF& P);

class IdealF {
public:
    IdealF() = default;
    explicit IdealF(const Int& d) : d_(d) {}
    static IdealF prime(const PrimeIdealF& P, int e = 1);
    // Factorisation of x*O_F.
    static IdealF principal(const FElem& x);

    const std::map<PrimeIdealF, int>& factors() const { return f_; }
    int exponent(const PrimeIdealF& P) const;
    IdealF operator*(const IdealF& o) const;
    IdealF pow(int e) const;
    bool operator==(const IdealF& o) const { return f_ == o.f_; }
    bool is_unit() const { return f_.empty(); }
    bool divides(const IdealF& o) const;
    Rat norm() const;
    std::string str() const;
    // All integral divisors of an integral ideal.
    std::vector<IdealF> divisors() const;
    // Z-basis (two elements) of an integral ideal.
    std::vector<FElem> zbasis() const;
    void set(const PrimeIdealF& P, int e);
    const Int& d() const { return d_; }

private:
    Int d_ = 2;
    std::map<PrimeIdealF, int> f_;
};

enum class Modulus { parity_a, a_mod4, b_mod4, eps_mod_3, d2_row, d3_row };

// Congruence class label of eps used by the case tables.
std::string residue_conditions(const FundUnitData& fu, Modulus m);
// eps mod 3O_F (d = 1 mod 3) or mod the prime above 3 (3 | d): +1 or -1.
int eps_sign_mod3(const FundUnitData& fu);

}  // namespace quatrefine
