#include "quatrefine/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace quatrefine {

namespace {

void row_axpy(IVec& dst, const Int& q, const IVec& src) {
    for (std::size_t c = 0; c < dst.size(); ++c)
        if (src[c] != 0) dst[c] -= q * src[c];
}

}  // namespace

std::vector<IVec> hnf_rows(const std::vector<IVec>& input, std::size_t ncols, std::vector<std::size_t>* pivots) {
    std::vector<IVec> rows;
    std::vector<int> row_of(ncols, -1);
    std::vector<std::size_t> piv;
    for (const IVec& in : input) {
        IVec v = in;
        for (std::size_t c = 0; c < ncols; ++c) {
            if (v[c] == 0) continue;
            int k = row_of[c];
            if (k < 0) {
                if (v[c] < 0)
                    for (auto& e : v) e = -e;
                row_of[c] = int(rows.size());
                rows.push_back(std::move(v));
                piv.push_back(c);
                break;
            }
            IVec& r = rows[k];
            if (v[c] % r[c] == 0) {
                Int q = v[c] / r[c];
                row_axpy(v, q, r);
                continue;
            }
            Int x, y;
            Int g = gcdext(r[c], v[c], x, y);
            Int A = r[c] / g, B = v[c] / g;
            IVec nr(ncols), nv(ncols);
            for (std::size_t j = 0; j < ncols; ++j) {
                nr[j] = x * r[j] + y * v[j];
                nv[j] = -B * r[j] + A * v[j];
            }
            r = std::move(nr);
            v = std::move(nv);
        }
    }
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return piv[a] < piv[b]; });
    std::vector<IVec> out;
    std::vector<std::size_t> opiv;
    for (auto i : order) {
        out.push_back(rows[i]);
        opiv.push_back(piv[i]);
    }
    for (std::size_t p = 0; p < out.size(); ++p) {
        std::size_t c = opiv[p];
        for (std::size_t k = 0; k < p; ++k) {
            Int q = floor_div(out[k][c], out[p][c]);
            if (q != 0) row_axpy(out[k], q, out[p]);
        }
    }
    if (pivots) *pivots = opiv;
    return out;
}

Lattice Lattice::from_gens(std::size_t n, const std::vector<QVec>& gens) {
    Lattice L(n);
    Int D = 1;
    for (auto& g : gens) {
        if (g.size() != n) throw std::logic_error("lattice generator of wrong length");
        for (auto& e : g) D = lcm(D, e.get_den());
    }
    std::vector<IVec> rows;
    rows.reserve(gens.size());
    for (auto& g : gens) {
        IVec r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = g[i].get_num() * (D / g[i].get_den());
        rows.push_back(std::move(r));
    }
    L.rows_ = hnf_rows(rows, n, &L.piv_);
    Int c = D;
    for (auto& r : L.rows_)
        for (auto& e : r) c = gcd(c, e);
    if (c > 1) {
        for (auto& r : L.rows_)
            for (auto& e : r) e /= c;
        D /= c;
    }
    L.den_ = D;
    return L;
}

std::vector<QVec> Lattice::basis() const {
    std::vector<QVec> out;
    for (auto& r : rows_) {
        QVec v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = make_rat(r[i], den_);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Rat> Lattice::coords(const QVec& v) const {
    QVec w(n_);
    for (std::size_t i = 0; i < n_; ++i) w[i] = v[i] * den_;
    std::vector<Rat> c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::size_t p = piv_[k];
        // entries before the pivot must already be zero
        c[k] = w[p] / Rat(rows_[k][p]);
        if (c[k] != 0)
            for (std::size_t j = p; j < n_; ++j) w[j] -= c[k] * rows_[k][j];
    }
    for (auto& e : w)
        if (e != 0) return {};
    return c;
}

bool Lattice::contains(const QVec& v) const {
    std::vector<Rat> c = coords(v);
    if (c.empty()) {
        for (auto& e : v)
            if (e != 0) return false;
        return true;
    }
    for (auto& e : c)
        if (e.get_den() != 1) return false;
    return true;
}

bool Lattice::contains(const Lattice& o) const {
    for (auto& b : o.basis())
        if (!contains(b)) return false;
    return true;
}

Lattice Lattice::operator+(const Lattice& o) const {
    std::vector<QVec> g = basis();
    for (auto& b : o.basis()) g.push_back(b);
    return from_gens(n_, g);
}

Lattice Lattice::scaled(const Rat& c) const {
    std::vector<QVec> g = basis();
    for (auto& v : g)
        for (auto& e : v) e *= c;
    return from_gens(n_, g);
}

QMat mat_mul(const QMat& A, const QMat& B) {
    std::size_t n = A.size(), m = B.empty() ? 0 : B[0].size(), k = B.size();
    QMat C(n, QVec(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (A[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) C[i][j] += A[i][t] * B[t][j];
        }
    return C;
}

QMat transpose(const QMat& A) {
    if (A.empty()) return {};
    QMat T(A[0].size(), QVec(A.size()));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
    return T;
}

QMat mat_inverse(const QMat& A) {
    std::size_t n = A.size();
    QMat M = A, I(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(M[p], M[c]);
        std::swap(I[p], I[c]);
        Rat inv = 1 / M[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            M[c][j] *= inv;
            I[c][j] *= inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            Rat f = M[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                M[r][j] -= f * M[c][j];
                I[r][j] -= f * I[c][j];
            }
        }
    }
    return I;
}

Lattice Lattice::standard_dual() const {
    if (!full_rank()) throw std::logic_error("dual of a degenerate lattice");
    QMat B = basis();
    QMat D = transpose(mat_inverse(B));
    return from_gens(n_, D);
}

Lattice Lattice::intersect(const Lattice& o) const {
    if (full_rank() && o.full_rank()) return (standard_dual() + o.standard_dual()).standard_dual();
    // general case: solve sum a_i b_i = sum c_j e_j
    std::vector<QVec> A = basis(), B = o.basis();
    std::size_t m = A.size();
    std::vector<QVec> gens;
    for (auto& v : A) gens.push_back(v);
    for (auto& v : B) {
        QVec w = v;
        for (auto& e : w) e = -e;
        gens.push_back(w);
    }
    Lattice coef = Lattice::from_gens(m + B.size(), [&] {
        std::vector<QVec> id;
        for (std::size_t i = 0; i < m + B.size(); ++i) {
            QVec e(m + B.size());
            e[i] = 1;
            id.push_back(e);
        }
        return id;
    }());
    Lattice K = kernel_sublattice(coef, [&](const QVec& c) {
        QVec s(n_);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (c[i] != 0)
                for (std::size_t j = 0; j < n_; ++j) s[j] += c[i] * gens[i][j];
        return s;
    });
    std::vector<QVec> out;
    for (auto& c : K.basis()) {
        QVec s(n_);
        for (std::size_t i = 0; i < m; ++i)
            if (c[i] != 0)
                for (std::size_t j = 0; j < n_; ++j) s[j] += c[i] * A[i][j];
        out.push_back(s);
    }
    return from_gens(n_, out);
}

Rat Lattice::det() const {
    if (!full_rank()) throw std::logic_error("det of a degenerate lattice");
    Int p = 1;
    for (std::size_t i = 0; i < n_; ++i) p *= rows_[i][i];
    return make_rat(p, pow_int(den_, n_));
}

Int Lattice::index_of(const Lattice& sub) const {
    Rat q = sub.det() / det();
    if (q.get_den() != 1) throw std::logic_error("index_of: not a sublattice");
    return q.get_num();
}

std::vector<QVec> Lattice::coset_reps(const Lattice& sub) const {
    QMat B = basis();
    QMat Binv = mat_inverse(B);
    QMat C = mat_mul(sub.basis(), Binv);
    std::vector<IVec> rows;
    for (auto& r : C) {
        IVec ir(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            if (r[j].get_den() != 1) throw std::logic_error("coset_reps: not a sublattice");
            ir[j] = r[j].get_num();
        }
        rows.push_back(ir);
    }
    std::vector<IVec> H = hnf_rows(rows, n_);
    std::vector<Int> diag(n_);
    for (std::size_t i = 0; i < n_; ++i) diag[i] = H[i][i];
    std::vector<QVec> out;
    std::vector<Int> c(n_, 0);
    while (true) {
        QVec v(n_);
        for (std::size_t i = 0; i < n_; ++i)
            if (c[i] != 0)
                for (std::size_t j = 0; j < n_; ++j) v[j] += c[i] * B[i][j];
        out.push_back(std::move(v));
        std::size_t i = 0;
        while (i < n_) {
            if (++c[i] < diag[i]) break;
            c[i] = 0;
            ++i;
        }
        if (i == n_) break;
    }
    return out;
}

bool Lattice::operator<(const Lattice& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return rows_ < o.rows_;
}

std::string Lattice::key() const {
    std::string s = den_.get_str() + ":";
    for (auto& r : rows_) {
        for (auto& e : r) s += e.get_str() + ",";
        s += ";";
    }
    return s;
}

Lattice kernel_sublattice(const Lattice& L, const std::function<QVec(const QVec&)>& f) {
    std::vector<QVec> B = L.basis();
    std::size_t m = B.size();
    std::vector<QVec> img;
    Int D = 1;
    for (auto& b : B) {
        img.push_back(f(b));
        for (auto& e : img.back()) D = lcm(D, e.get_den());
    }
    std::size_t k = img.empty() ? 0 : img[0].size();
    std::vector<IVec> rows;
    for (std::size_t i = 0; i < m; ++i) {
        IVec r(k + m);
        for (std::size_t j = 0; j < k; ++j) r[j] = img[i][j].get_num() * (D / img[i][j].get_den());
        r[k + i] = 1;
        rows.push_back(r);
    }
    std::vector<std::size_t> piv;
    std::vector<IVec> H = hnf_rows(rows, k + m, &piv);
    std::vector<QVec> gens;
    for (std::size_t t = 0; t < H.size(); ++t) {
        if (piv[t] < k) continue;
        QVec x(L.dim());
        for (std::size_t i = 0; i < m; ++i)
            if (H[t][k + i] != 0)
                for (std::size_t j = 0; j < L.dim(); ++j) x[j] += H[t][k + i] * B[i][j];
        gens.push_back(x);
    }
    return Lattice::from_gens(L.dim(), gens);
}

namespace {

void gram_schmidt(const QMat& G, QMat& mu, QVec& Bs) {
    std::size_t n = G.size();
    mu.assign(n, QVec(n));
    Bs.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat s = G[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * Bs[k];
            mu[i][j] = s / Bs[j];
        }
        Rat s = G[i][i];
        for (std::size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * Bs[k];
        Bs[i] = s;
        if (Bs[i] <= 0) throw std::domain_error("Gram matrix is not positive definite");
    }
}

QMat gram_from(const QMat& G0, const std::vector<IVec>& U) {
    std::size_t n = G0.size();
    QMat T(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rat s = 0;
            for (std::size_t a = 0; a < n; ++a) {
                if (U[i][a] == 0) continue;
                for (std::size_t b = 0; b < n; ++b)
                    if (U[j][b] != 0) s += Rat(U[i][a] * U[j][b]) * G0[a][b];
            }
            T[i][j] = s;
            T[j][i] = s;
        }
    return T;
}

}  // namespace

LLLResult lll_gram(const QMat& G0, const Rat& delta) {
    std::size_t n = G0.size();
    std::vector<IVec> U(n, IVec(n));
    for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;
    if (n <= 1) return {G0, U};
    QMat mu;
    QVec Bs;
    gram_schmidt(G0, mu, Bs);
    const Rat half(1, 2);
    auto red = [&](std::size_t k, std::size_t l) {
        if (abs(mu[k][l]) <= half) return;
        Int q = round_rat(mu[k][l]);
        Rat qq(q);
        for (std::size_t t = 0; t < n; ++t) U[k][t] -= q * U[l][t];
        mu[k][l] -= qq;
        for (std::size_t i = 0; i < l; ++i) mu[k][i] -= qq * mu[l][i];
    };
    std::size_t k = 1;
    std::uint64_t guard = 0;
    while (k < n) {
        if (++guard > 100000000) throw BudgetExceeded("LLL did not terminate");
        red(k, k - 1);
        if (Bs[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * Bs[k - 1]) {
            std::swap(U[k], U[k - 1]);
            Rat m = mu[k][k - 1];
            Rat B = Bs[k] + m * m * Bs[k - 1];
            mu[k][k - 1] = m * Bs[k - 1] / B;
            Bs[k] = Bs[k - 1] * Bs[k] / B;
            Bs[k - 1] = B;
            for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
            for (std::size_t i = k + 1; i < n; ++i) {
                Rat t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m * t;
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
            }
            k = std::max<std::size_t>(k - 1, 1);
        } else {
            for (std::size_t l = k - 1; l-- > 0;) red(k, l);
            ++k;
        }
    }
    return {gram_from(G0, U), U};
}

namespace {

struct Enumerator {
    const QMat& mu;
    const QVec& Bs;
    std::size_t n;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    IVec x;
    std::vector<IVec> out;

    void run(std::size_t i, const Rat& r) {
        if (++nodes > budget) throw BudgetExceeded("short-vector enumeration exceeded its node budget");
        Rat c = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (x[j] != 0) c += mu[j][i] * x[j];
        Int x0 = round_rat(-c);
        auto visit = [&](const Int& xi) {
            Rat y = c + xi;
            Rat used = Bs[i] * y * y;
            if (used > r) return false;
            x[i] = xi;
            if (i == 0) {
                bool nz = false;
                for (auto& e : x)
                    if (e != 0) nz = true;
                if (nz) out.push_back(x);
            } else {
                run(i - 1, r - used);
            }
            x[i] = 0;
            return true;
        };
        if (!visit(x0)) return;
        for (Int t = x0 + 1; visit(t); ++t) {
        }
        for (Int t = x0 - 1; visit(t); --t) {
        }
    }
};

}  // namespace

std::vector<IVec> short_vectors(const QMat& G, const Rat& bound, std::uint64_t node_budget) {
    std::size_t n = G.size();
    LLLResult red = lll_gram(G);
    QMat mu;
    QVec Bs;
    gram_schmidt(red.gram, mu, Bs);
    Enumerator e{mu, Bs, n, node_budget, 0, {}, {}};
    e.x.assign(n, 0);
    e.run(n - 1, bound);
    std::vector<IVec> out;
    out.reserve(e.out.size());
    for (auto& y : e.out) {
        IVec v(n);
        for (std::size_t i = 0; i < n; ++i)
            if (y[i] != 0)
                for (std::size_t j = 0; j < n; ++j) v[j] += y[i] * red.U[i][j];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace quatrefine
