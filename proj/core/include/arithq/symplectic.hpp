#ifndef ARITHQ_SYMPLECTIC_HPP
#define ARITHQ_SYMPLECTIC_HPP

#include "arithq/integer.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace arithq {

/// Prime field F_p for small p; elements live in [0, p).
class FpField {
public:
    using Elem = std::uint32_t;

    explicit FpField(std::uint32_t p);
    std::uint32_t p() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b % p_) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((std::uint64_t(a) * b) % p_);
    }
    Elem inv(Elem a) const;
    static bool is_zero(Elem a) { return a == 0; }

private:
    std::uint32_t p_;
};

/// The rationals, for the characteristic-zero instantiation.
class QField {
public:
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    static bool is_zero(const Elem& a) { return a == 0; }
};

template <class F>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<typename F::Elem> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    typename F::Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const typename F::Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    bool operator==(const Mat&) const = default;
    bool operator<(const Mat& o) const { return a < o.a; }
};

/// In-place reduced row echelon form; returns the rank.
template <class F>
std::size_t rref(const F& K, Mat<F>& m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && F::is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        auto piv_inv = K.inv(m.at(rank, col));
        for (std::size_t j = 0; j < m.cols; ++j)
            m.at(rank, j) = K.mul(m.at(rank, j), piv_inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || F::is_zero(m.at(i, col))) continue;
            auto factor = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j)
                m.at(i, j) = K.sub(m.at(i, j), K.mul(factor, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

/// Subspace as a canonical (RREF, full-rank) basis matrix; rows = dim.
template <class F>
struct Subspace {
    Mat<F> basis;

    std::size_t dim() const { return basis.rows; }
    std::size_t ambient() const { return basis.cols; }
    bool operator==(const Subspace&) const = default;
    bool operator<(const Subspace& o) const { return basis < o.basis; }

    static Subspace from_rows(const F& K, Mat<F> rows) {
        std::size_t r = rref(K, rows);
        Mat<F> b(r, rows.cols);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < rows.cols; ++j) b.at(i, j) = rows.at(i, j);
        return Subspace{std::move(b)};
    }
};

template <class F>
std::size_t stack_rank(const F& K, const Mat<F>& a, const Mat<F>& b) {
    if (a.cols != b.cols) throw std::invalid_argument("ambient dimension mismatch");
    Mat<F> s(a.rows + b.rows, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) s.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) s.at(a.rows + i, j) = b.at(i, j);
    return rref(K, s);
}

/// dim(U1 cap U2) = dim U1 + dim U2 - dim(U1 + U2), exact rank arithmetic.
template <class F>
int intersection_dim(const F& K, const Subspace<F>& u1, const Subspace<F>& u2) {
    std::size_t sum = stack_rank(K, u1.basis, u2.basis);
    return static_cast<int>(u1.dim() + u2.dim() - sum);
}

/// Symplectic space of dimension 2d with an alternating invertible Gram
/// matrix. A symplectic Gram-Schmidt run at construction produces rows
/// e_1..e_d, f_1..f_d with omega(e_a, f_b) = delta_ab, used by the witness
/// construction; for the standard form this basis is the identity.
template <class F>
class SymplecticSpace {
public:
    F field;
    unsigned d;
    Mat<F> gram;
    Mat<F> darboux;  // 2d rows: e_1..e_d then f_1..f_d

    static SymplecticSpace standard(F K, unsigned d) {
        Mat<F> g(2 * d, 2 * d);
        for (unsigned i = 0; i < d; ++i) {
            g.at(i, d + i) = K.one();
            g.at(d + i, i) = K.neg(K.one());
        }
        return SymplecticSpace(std::move(K), d, std::move(g));
    }

    SymplecticSpace(F K, unsigned dd, Mat<F> g) : field(std::move(K)), d(dd), gram(std::move(g)) {
        if (gram.rows != 2 * d || gram.cols != 2 * d)
            throw std::invalid_argument("Gram matrix must be 2d x 2d");
        for (std::size_t i = 0; i < gram.rows; ++i) {
            if (!F::is_zero(gram.at(i, i)))
                throw std::invalid_argument("Gram matrix must have zero diagonal");
            for (std::size_t j = 0; j < gram.cols; ++j)
                if (gram.at(i, j) != field.neg(gram.at(j, i)))
                    throw std::invalid_argument("Gram matrix must be alternating");
        }
        compute_darboux();
    }

    typename F::Elem form(const std::vector<typename F::Elem>& u,
                          const std::vector<typename F::Elem>& v) const {
        auto r = field.zero();
        for (std::size_t i = 0; i < gram.rows; ++i) {
            if (F::is_zero(u[i])) continue;
            auto row = field.zero();
            for (std::size_t j = 0; j < gram.cols; ++j)
                row = field.add(row, field.mul(gram.at(i, j), v[j]));
            r = field.add(r, field.mul(u[i], row));
        }
        return r;
    }

private:
    void compute_darboux();
};

template <class F>
void SymplecticSpace<F>::compute_darboux() {
    using Vec = std::vector<typename F::Elem>;
    std::size_t n = 2 * d;
    std::vector<Vec> pool;
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(n, field.zero());
        v[i] = field.one();
        pool.push_back(std::move(v));
    }
    std::vector<Vec> es, fs;
    while (es.size() < d) {
        // first pool vector pairing nontrivially with another
        std::size_t ie = 0, jf = 0;
        bool found = false;
        for (std::size_t i = 0; i < pool.size() && !found; ++i)
            for (std::size_t j = 0; j < pool.size() && !found; ++j)
                if (i != j && !F::is_zero(form(pool[i], pool[j]))) {
                    ie = i;
                    jf = j;
                    found = true;
                }
        if (!found) throw std::invalid_argument("Gram matrix is degenerate");
        Vec e = pool[ie];
        Vec f = pool[jf];
        auto scale = field.inv(form(e, f));
        for (auto& x : f) x = field.mul(x, scale);
        // reduce the pool to the symplectic complement of <e, f>
        std::vector<Vec> next;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (i == ie || i == jf) continue;
            Vec v = pool[i];
            auto a = form(v, f);  // component along e
            auto b = form(e, v);  // component along f
            for (std::size_t k = 0; k < n; ++k) {
                v[k] = field.sub(v[k], field.mul(a, e[k]));
                v[k] = field.add(v[k], field.mul(field.neg(b), f[k]));
            }
            next.push_back(std::move(v));
        }
        // v -> v - omega(v,f) e + omega(v,e) f lands in the complement
        es.push_back(std::move(e));
        fs.push_back(std::move(f));
        pool = std::move(next);
    }
    darboux = Mat<F>(n, n);
    for (unsigned i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            darboux.at(i, j) = es[i][j];
            darboux.at(d + i, j) = fs[i][j];
        }
}

template <class F>
std::vector<typename F::Elem> row_of(const Mat<F>& m, std::size_t i) {
    std::vector<typename F::Elem> v(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) v[j] = m.at(i, j);
    return v;
}

template <class F>
bool is_isotropic(const SymplecticSpace<F>& S, const Subspace<F>& U) {
    if (U.ambient() != S.gram.cols)
        throw std::invalid_argument("subspace does not live in the ambient space");
    for (std::size_t i = 0; i < U.dim(); ++i)
        for (std::size_t j = i + 1; j < U.dim(); ++j)
            if (!F::is_zero(S.form(row_of(U.basis, i), row_of(U.basis, j)))) return false;
    return true;
}

template <class F>
bool is_lagrangian(const SymplecticSpace<F>& S, const Subspace<F>& U) {
    return U.dim() == S.d && is_isotropic(S, U);
}

/// Witness tuple of four Lagrangians: Phi_1 = <e>, Phi_2 = <f>,
/// Phi_3 = graph(e_a -> f_a),
/// Phi_4 = graph(e_a -> lambda_a f_a) for distinct nonzero lambda_a.
template <class F>
struct WitnessTuple {
    Subspace<F> phi[4];
    std::vector<typename F::Elem> lambdas;
};

template <class F>
WitnessTuple<F> build_witness(const SymplecticSpace<F>& S,
                              const std::vector<typename F::Elem>& lambdas) {
    if (lambdas.size() != S.d)
        throw std::invalid_argument("build_witness: need exactly d eigenvalues");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (F::is_zero(lambdas[i]))
            throw std::invalid_argument("build_witness: eigenvalues must be nonzero");
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j])
                throw std::invalid_argument("build_witness: eigenvalues must be distinct");
    }
    std::size_t n = 2 * S.d;
    auto rows = [&](auto&& entry) {
        Mat<F> m(S.d, n);
        for (unsigned a = 0; a < S.d; ++a)
            for (std::size_t j = 0; j < n; ++j) m.at(a, j) = entry(a, j);
        return Subspace<F>::from_rows(S.field, std::move(m));
    };
    const Mat<F>& B = S.darboux;
    WitnessTuple<F> w;
    w.lambdas = lambdas;
    w.phi[0] = rows([&](unsigned a, std::size_t j) { return B.at(a, j); });
    w.phi[1] = rows([&](unsigned a, std::size_t j) { return B.at(S.d + a, j); });
    w.phi[2] = rows([&](unsigned a, std::size_t j) {
        return S.field.add(B.at(a, j), B.at(S.d + a, j));
    });
    w.phi[3] = rows([&](unsigned a, std::size_t j) {
        return S.field.add(B.at(a, j), S.field.mul(lambdas[a], B.at(S.d + a, j)));
    });
    return w;
}

using FpMat = Mat<FpField>;
using FpSubspace = Subspace<FpField>;
using FpSymplecticSpace = SymplecticSpace<FpField>;
using FpWitnessTuple = WitnessTuple<FpField>;

/// All isotropic subspaces of dimension 1..d, grouped by dimension.
/// Guarded: throws if p^{2d} exceeds 10^6 states.
std::vector<std::vector<FpSubspace>> enumerate_isotropic(const FpSymplecticSpace& S);

/// Number of Lagrangian subspaces, by enumeration; asserts the closed form
/// prod_{i=1..d} (p^i + 1) before returning.
Int count_lagrangians(const FpSymplecticSpace& S);

/// True iff no nonzero isotropic subspace W has
/// dim(Phi_j cap W) >= dim(W)/2 for all four Lagrangians of the tuple.
bool sublemma_brute_check(const FpSymplecticSpace& S, const FpWitnessTuple& t);

} // namespace arithq

#endif
