#pragma once

#include "quatrefine/arith.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace quatrefine {

using QVec = std::vector<Rat>;
using IVec = std::vector<Int>;
using QMat = std::vector<QVec>;

// Z-lattice in Q^n, stored as (integer echelon HNF rows) / den.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::size_t n) : n_(n) {}
    static Lattice from_gens(std::size_t n, const std::vector<QVec>& gens);

    std::size_t dim() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    bool full_rank() const { return rows_.size() == n_; }
    const std::vector<IVec>& hnf() const { return rows_; }
    const Int& den() const { return den_; }
    std::vector<QVec> basis() const;

    bool contains(const QVec& v) const;
    bool contains(const Lattice& o) const;
    // Coordinates of v in basis(); empty when v is outside the Q-span.
    std::vector<Rat> coords(const QVec& v) const;

    Lattice operator+(const Lattice& o) const;
    Lattice scaled(const Rat& c) const;
    Lattice intersect(const Lattice& o) const;
    // {x : x . L in Z}; full rank only.
    Lattice standard_dual() const;
    // Covolume for a full-rank lattice.
    Rat det() const;
    // [this : sub], sub contained in this, both full rank.
    Int index_of(const Lattice& sub) const;
    // Representatives of this / sub (full rank).
    std::vector<QVec> coset_reps(const Lattice& sub) const;

    bool operator==(const Lattice& o) const { return n_ == o.n_ && den_ == o.den_ && rows_ == o.rows_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }
    bool operator<(const Lattice& o) const;
    std::string key() const;

private:
    std::size_t n_ = 0;
    Int den_ = 1;
    std::vector<IVec> rows_;
    std::vector<std::size_t> piv_;
};

// Integer echelon form with reduced entries above pivots; drops zero rows.
std::vector<IVec> hnf_rows(const std::vector<IVec>& rows, std::size_t ncols, std::vector<std::size_t>* pivots = nullptr);

// {x in L : f(x) = 0} for a Q-linear f.
Lattice kernel_sublattice(const Lattice& L, const std::function<QVec(const QVec&)>& f);

QMat mat_inverse(const QMat& A);
QMat mat_mul(const QMat& A, const QMat& B);
QMat transpose(const QMat& A);

struct LLLResult {
    QMat gram;              // Gram matrix of the reduced basis
    std::vector<IVec> U;    // reduced basis rows in terms of the input basis
};

LLLResult lll_gram(const QMat& G, const Rat& delta = Rat(3, 4));

// All nonzero x with x^T G x <= bound (both signs), coordinates in the input basis.
// Throws BudgetExceeded past node_budget search nodes.
std::vector<IVec> short_vectors(const QMat& G, const Rat& bound, std::uint64_t node_budget);

}  // namespace quatrefine
