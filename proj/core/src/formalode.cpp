#include "arithq/formalode.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace arithq {

namespace {
unsigned total_degree(const std::vector<unsigned>& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}
} // namespace

Series Series::constant(unsigned nvars, unsigned order, Rat value) {
    Series s(nvars, order);
    if (value != 0) s.coef_[std::vector<unsigned>(nvars, 0)] = std::move(value);
    return s;
}

Series Series::variable(unsigned nvars, unsigned order, unsigned index) {
    if (index >= nvars) throw std::invalid_argument("Series::variable: index out of range");
    Series s(nvars, order);
    if (order >= 1) {
        std::vector<unsigned> e(nvars, 0);
        e[index] = 1;
        s.coef_[std::move(e)] = 1;
    }
    return s;
}

void Series::check_compat(const Series& o) const {
    if (n_ != o.n_ || order_ != o.order_)
        throw std::invalid_argument("Series: mixed variable count or truncation order");
}

Rat Series::coeff(const std::vector<unsigned>& e) const {
    auto it = coef_.find(e);
    return it == coef_.end() ? Rat(0) : it->second;
}

void Series::set_coeff(std::vector<unsigned> e, Rat value) {
    if (e.size() != n_) throw std::invalid_argument("Series::set_coeff: bad index size");
    if (total_degree(e) > order_) return;
    if (value == 0)
        coef_.erase(e);
    else
        coef_[std::move(e)] = std::move(value);
}

Series Series::operator+(const Series& o) const {
    check_compat(o);
    Series r = *this;
    for (const auto& [e, v] : o.coef_) {
        Rat s = r.coeff(e) + v;
        r.set_coeff(e, s);
    }
    return r;
}

Series Series::operator-(const Series& o) const {
    check_compat(o);
    Series r = *this;
    for (const auto& [e, v] : o.coef_) {
        Rat s = r.coeff(e) - v;
        r.set_coeff(e, s);
    }
    return r;
}

Series Series::operator*(const Series& o) const {
    check_compat(o);
    Series r(n_, order_);
    for (const auto& [e1, v1] : coef_) {
        unsigned d1 = total_degree(e1);
        for (const auto& [e2, v2] : o.coef_) {
            if (d1 + total_degree(e2) > order_) continue;
            std::vector<unsigned> e(n_);
            for (unsigned i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
            Rat s = r.coeff(e) + v1 * v2;
            r.set_coeff(std::move(e), std::move(s));
        }
    }
    return r;
}

Series Series::scaled(const Rat& k) const {
    Series r(n_, order_);
    if (k == 0) return r;
    for (const auto& [e, v] : coef_) r.coef_[e] = v * k;
    return r;
}

Series Series::derivative(unsigned var) const {
    Series r(n_, order_);
    for (const auto& [e, v] : coef_) {
        if (e[var] == 0) continue;
        std::vector<unsigned> d = e;
        d[var] -= 1;
        r.coef_[std::move(d)] = v * Rat(static_cast<long>(e[var]));
    }
    return r;
}

Series Series::shifted_by_var(unsigned var) const {
    Series r(n_, order_);
    for (const auto& [e, v] : coef_) {
        if (total_degree(e) + 1 > order_) continue;
        std::vector<unsigned> d = e;
        d[var] += 1;
        r.coef_[std::move(d)] = v;
    }
    return r;
}

Series Series::homogeneous_part(unsigned degree) const {
    Series r(n_, order_);
    for (const auto& [e, v] : coef_)
        if (total_degree(e) == degree) r.coef_[e] = v;
    return r;
}

Rat Series::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != n_) throw std::invalid_argument("Series::evaluate: bad point size");
    Rat total = 0;
    for (const auto& [e, v] : coef_) {
        Rat term = v;
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

std::string Series::str(const std::vector<std::string>& names) const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : coef_) {
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Rat mag = abs(v);
        bool unit = mag == 1 && total_degree(e) > 0;
        if (!unit) os << mag.get_str();
        for (unsigned i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (i < names.size()) os << names[i];
            else os << "t" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

SeriesMat series_identity(std::size_t m, unsigned nvars, unsigned order) {
    SeriesMat r(m, std::vector<Series>(m, Series(nvars, order)));
    for (std::size_t i = 0; i < m; ++i) r[i][i] = Series::constant(nvars, order, 1);
    return r;
}

SeriesMat series_add(const SeriesMat& a, const SeriesMat& b) {
    SeriesMat r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

SeriesMat series_mul(const SeriesMat& a, const SeriesMat& b) {
    std::size_t m = a.size(), inner = b.size(), cols = b[0].size();
    const Series& proto = a[0][0];
    SeriesMat r(m, std::vector<Series>(cols, Series(proto.nvars(), proto.order())));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Series acc(proto.nvars(), proto.order());
            for (std::size_t k = 0; k < inner; ++k) acc = acc + a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

std::optional<FlatnessFailure> flatness_failure(const ConnectionForm& omega, unsigned order) {
    for (unsigned i = 0; i < omega.nvars; ++i)
        for (unsigned j = i + 1; j < omega.nvars; ++j) {
            // dt_i ^ dt_j component: d_i omega_j - d_j omega_i + [omega_i, omega_j]
            for (std::size_t r = 0; r < omega.size; ++r)
                for (std::size_t c = 0; c < omega.size; ++c) {
                    Series comm(omega.comps[i][r][c].nvars(), omega.comps[i][r][c].order());
                    for (std::size_t k = 0; k < omega.size; ++k)
                        comm = comm + omega.comps[i][r][k] * omega.comps[j][k][c] -
                               omega.comps[j][r][k] * omega.comps[i][k][c];
                    Series entry = omega.comps[j][r][c].derivative(i) -
                                   omega.comps[i][r][c].derivative(j) + comm;
                    for (const auto& [e, v] : entry.terms()) {
                        if (v == 0) continue;
                        unsigned deg = 0;
                        for (auto x : e) deg += x;
                        if (deg < order) return FlatnessFailure{i, j, e};
                    }
                }
        }
    return std::nullopt;
}

bool is_flat(const ConnectionForm& omega, unsigned order) {
    return !flatness_failure(omega, order).has_value();
}

SeriesMat parallel_transport(const ConnectionForm& omega, unsigned order) {
    if (omega.nvars == 0 || omega.size == 0)
        throw std::invalid_argument("parallel_transport: empty connection form");
    if (omega.nvars >= 2) {
        if (auto fail = flatness_failure(omega, order)) {
            std::ostringstream os;
            os << "parallel_transport: connection is not flat, 2-form component dt"
               << (fail->i + 1) << "^dt" << (fail->j + 1) << " has a nonzero coefficient";
            throw std::invalid_argument(os.str());
        }
    }
    unsigned n = omega.nvars;
    std::size_t m = omega.size;
    SeriesMat T = series_identity(m, n, order);
    // Euler relation: k T_k = sum_i t_i d_i T_k = -sum_i t_i (omega_i T)_{k-1}
    for (unsigned k = 1; k <= order; ++k) {
        SeriesMat delta(m, std::vector<Series>(m, Series(n, order)));
        for (unsigned i = 0; i < n; ++i) {
            SeriesMat prod = series_mul(omega.comps[i], T);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) {
                    Series part = prod[r][c].homogeneous_part(k - 1).shifted_by_var(i);
                    delta[r][c] = delta[r][c] + part;
                }
        }
        Rat inv_k(-1, static_cast<long>(k));
        inv_k.canonicalize();
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                T[r][c] = T[r][c] + delta[r][c].scaled(inv_k);
    }
    return T;
}

std::vector<std::vector<Rat>> series_evaluate(const SeriesMat& mat, const std::vector<Rat>& point) {
    std::vector<std::vector<Rat>> out(mat.size());
    for (std::size_t i = 0; i < mat.size(); ++i)
        for (const auto& entry : mat[i]) out[i].push_back(entry.evaluate(point));
    return out;
}

} // namespace arithq
