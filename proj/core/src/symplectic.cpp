#include "arithq/symplectic.hpp"

#include "arithq/numbertheory.hpp"

#include <set>

namespace arithq {

FpField::FpField(std::uint32_t p) : p_(p) {
    if (p < 2 || !is_prime(Int(p))) throw std::invalid_argument("FpField: p must be prime");
}

FpField::Elem FpField::inv(Elem a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("FpField: inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
        std::int64_t quot = r / newr;
        std::int64_t tmp = t - quot * newt;
        t = newt;
        newt = tmp;
        tmp = r - quot * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
}

namespace {

const std::uint64_t kEnumerationGuard = 1000000;

std::uint64_t state_count(const FpSymplecticSpace& S) {
    std::uint64_t states = 1;
    for (unsigned i = 0; i < 2 * S.d; ++i) {
        states *= S.field.p();
        if (states > kEnumerationGuard) return states;
    }
    return states;
}

std::vector<FpField::Elem> decode_vector(std::uint64_t idx, std::uint32_t p, std::size_t n) {
    std::vector<FpField::Elem> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<FpField::Elem>(idx % p);
        idx /= p;
    }
    return v;
}

bool in_rowspace(const FpField& K, const FpMat& rref_basis,
                 const std::vector<FpField::Elem>& v) {
    // reduce v against an RREF basis
    std::vector<FpField::Elem> w = v;
    for (std::size_t i = 0; i < rref_basis.rows; ++i) {
        std::size_t lead = 0;
        while (lead < rref_basis.cols && FpField::is_zero(rref_basis.at(i, lead))) ++lead;
        if (lead == rref_basis.cols) continue;
        if (!FpField::is_zero(w[lead])) {
            auto factor = w[lead];
            for (std::size_t j = 0; j < rref_basis.cols; ++j)
                w[j] = K.sub(w[j], K.mul(factor, rref_basis.at(i, j)));
        }
    }
    for (auto x : w)
        if (!FpField::is_zero(x)) return false;
    return true;
}

} // namespace

std::vector<std::vector<FpSubspace>> enumerate_isotropic(const FpSymplecticSpace& S) {
    if (state_count(S) > kEnumerationGuard)
        throw std::invalid_argument("enumerate_isotropic: p^(2d) exceeds the 10^6 guard");
    const FpField& K = S.field;
    std::size_t n = 2 * S.d;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= K.p();

    std::vector<std::vector<FpField::Elem>> vectors;
    for (std::uint64_t idx = 1; idx < total; ++idx)
        vectors.push_back(decode_vector(idx, K.p(), n));

    std::vector<std::vector<FpSubspace>> by_dim(S.d + 1);
    std::set<FpSubspace> level;
    // dimension 1: every line is isotropic (omega alternating)
    for (const auto& v : vectors) {
        FpMat m(1, n);
        for (std::size_t j = 0; j < n; ++j) m.at(0, j) = v[j];
        level.insert(FpSubspace::from_rows(K, std::move(m)));
    }
    by_dim[1].assign(level.begin(), level.end());

    for (unsigned dim = 2; dim <= S.d; ++dim) {
        std::set<FpSubspace> next;
        for (const auto& U : by_dim[dim - 1]) {
            for (const auto& v : vectors) {
                if (in_rowspace(K, U.basis, v)) continue;
                bool perp = true;
                for (std::size_t i = 0; i < U.dim() && perp; ++i)
                    perp = FpField::is_zero(S.form(row_of(U.basis, i), v));
                if (!perp) continue;
                FpMat m(U.dim() + 1, n);
                for (std::size_t i = 0; i < U.dim(); ++i)
                    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = U.basis.at(i, j);
                for (std::size_t j = 0; j < n; ++j) m.at(U.dim(), j) = v[j];
                next.insert(FpSubspace::from_rows(K, std::move(m)));
            }
        }
        by_dim[dim].assign(next.begin(), next.end());
    }
    by_dim.erase(by_dim.begin());  // drop the empty dim-0 slot
    return by_dim;
}

Int count_lagrangians(const FpSymplecticSpace& S) {
    auto all = enumerate_isotropic(S);
    Int counted = static_cast<long>(all[S.d - 1].size());
    Int expected = 1;
    for (unsigned i = 1; i <= S.d; ++i) expected *= pow_int(Int(S.field.p()), i) + 1;
    if (counted != expected)
        throw std::logic_error("count_lagrangians: enumeration disagrees with prod(p^i+1)");
    return counted;
}

bool sublemma_brute_check(const FpSymplecticSpace& S, const FpWitnessTuple& t) {
    for (const auto& phi : t.phi)
        if (!is_lagrangian(S, phi))
            throw std::invalid_argument("sublemma_brute_check: tuple entries must be Lagrangian");
    auto all = enumerate_isotropic(S);
    for (const auto& level : all) {
        for (const auto& W : level) {
            bool all_large = true;
            for (const auto& phi : t.phi) {
                int meet = intersection_dim(S.field, phi, W);
                if (2 * meet < static_cast<int>(W.dim())) {
                    all_large = false;
                    break;
                }
            }
            if (all_large) return false;  // witness tuple fails: W realises (*)
        }
    }
    return true;
}

} // namespace arithq
