#pragma once

#include "quatrefine/lattice.hpp"
#include "quatrefine/quadfield.hpp"

#include <array>
#include <string>
#include <vector>

namespace quatrefine {

// Quaternion algebra (a, b / F): i^2 = a, j^2 = b, ij = -ji = k.
struct QuatAlgebra {
    Int d;
    FElem a, b;
    std::string tag;  // "A", "B", "C", "D", "Hinf" or "custom"
    bool totally_definite() const { return a.totally_negative() && b.totally_negative(); }
};

struct QElem {
    std::array<FElem, 4> c;
    QElem() = default;
    explicit QElem(const Int& d) : c{FElem(d), FElem(d), FElem(d), FElem(d)} {}
    QElem(const FElem& x0, const FElem& x1, const FElem& x2, const FElem& x3) : c{x0, x1, x2, x3} {}
    const Int& d() const { return c[0].d(); }

    QElem operator+(const QElem& o) const;
    QElem operator-(const QElem& o) const;
    QElem operator-() const;
    QElem operator*(const FElem& s) const;
    QElem operator*(const Rat& s) const { return *this * FElem(d(), s); }
    bool operator==(const QElem& o) const { return c == o.c; }
    bool is_zero() const;
    bool is_scalar() const { return c[1].is_zero() && c[2].is_zero() && c[3].is_zero(); }
    QElem conj() const { return QElem(c[0], -c[1], -c[2], -c[3]); }
    FElem trd() const { return c[0] * Rat(2); }
    std::string str() const;
};

QElem qmul(const QuatAlgebra& H, const QElem& x, const QElem& y);
FElem qnrd(const QuatAlgebra& H, const QElem& x);
QElem qinv(const QuatAlgebra& H, const QElem& x);
QElem qone(const Int& d);
QElem qi(const Int& d);
QElem qj(const Int& d);
QElem qk(const Int& d);

// Coordinates over the Q-basis (1, w, i, wi, j, wj, k, wk).
QVec to_qvec(const QElem& x);
QElem from_qvec(const Int& d, const QVec& v);

// Local Hilbert symbol (a, b)_P.
int hilbert_symbol(const FElem& a, const FElem& b, const PrimeIdealF& P);
// (a, b) at the real place sqrt d -> +sqrt d (place 0) or -sqrt d (place 1).
int hilbert_symbol_real(const FElem& a, const FElem& b, int place);
int hilbert_symbol_at(const QuatAlgebra& H, const PrimeIdealF& P);

struct RamificationData {
    std::vector<PrimeIdealF> finite_ramified;
    std::vector<int> real_ramified;
    int omega = 0;
    IdealF disc_H;
};

RamificationData ramification(const QuatAlgebra& H);
bool is_isomorphic(const QuatAlgebra& H1, const QuatAlgebra& H2);

enum class AlgTag { A, B, C, D, Hinf };
AlgTag parse_alg_tag(const std::string& s);
std::string alg_tag_name(AlgTag t);
// Throws ValidationError when the tag needs Nm(eps) = 1 and it is -1.
QuatAlgebra standard_algebra(AlgTag tag, const FundUnitData& fu);
QuatAlgebra custom_algebra(const FElem& a, const FElem& b);

}  // namespace quatrefine
